#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sp {

// Identification symbols name or bracket a pattern and form the code a
// pattern is replaced by when it is encoded; contents symbols carry the
// payload.  The split is per occurrence: the same name may be
// identification in one pattern and contents in another.
enum class SymbolClass : std::uint8_t { Identification, Contents };

enum class Role : std::uint8_t { New, Old };

struct Symbol {
    std::string name;
    SymbolClass cls = SymbolClass::Contents;

    bool operator==(const Symbol&) const = default;
};

// An ordered sequence of symbols with an occurrence frequency.  The single
// representation for all stored knowledge.
struct Pattern {
    std::string id;
    std::vector<Symbol> symbols;
    std::uint64_t frequency = 1;
    Role role = Role::Old;

    bool operator==(const Pattern&) const = default;

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        out.reserve(symbols.size());
        for (const auto& s : symbols) out.push_back(s.name);
        return out;
    }
};

// Validates the symbol-name rules: non-empty, no whitespace, no leading '!'
// (the '!' marker is file syntax, not part of the name).
inline bool valid_symbol_name(const std::string& name) {
    if (name.empty() || name.front() == '!') return false;
    for (char c : name)
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
    return true;
}

// Builds a New pattern from bare names; New patterns hold contents symbols
// only.  Throws std::invalid_argument on empty input or a bad name.
inline Pattern make_new_pattern(const std::vector<std::string>& names,
                                std::string id = "NEW") {
    if (names.empty())
        throw std::invalid_argument("New pattern must contain at least one symbol");
    Pattern p;
    p.id = std::move(id);
    p.role = Role::New;
    for (const auto& n : names) {
        if (!valid_symbol_name(n))
            throw std::invalid_argument("invalid symbol name: '" + n + "'");
        p.symbols.push_back({n, SymbolClass::Contents});
    }
    return p;
}

} // namespace sp
