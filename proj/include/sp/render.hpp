#pragma once

#include <string>
#include <vector>

#include "sp/alignment.hpp"

namespace sp {

// Vertical text layout of an alignment: symbol lines (row indices at both
// margins) alternating with connector lines that carry '|' wherever the
// two adjacent rows share a column.  Each column occupies the longest name
// in it plus one trailing space; symbols are left-aligned.  Byte
// deterministic for a given alignment.
struct RenderedAlignment {
    std::vector<std::string> lines;

    std::string text() const {
        std::string out;
        for (const std::string& line : lines) {
            out += line;
            out += '\n';
        }
        return out;
    }
};

RenderedAlignment render(const Alignment& a);

} // namespace sp
