#include "sp/render.hpp"

#include <algorithm>

namespace sp {

namespace {

std::string pad_index(int idx, std::size_t width) {
    std::string s = std::to_string(idx);
    return std::string(width - s.size(), ' ') + s;
}

void rstrip(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

} // namespace

RenderedAlignment render(const Alignment& a) {
    const int nrows = static_cast<int>(a.rows.size());
    const std::size_t ncols = a.columns.size();

    std::vector<std::size_t> width(ncols, 1);
    for (std::size_t c = 0; c < ncols; ++c) {
        for (const auto& [row, pos] : a.columns[c].entries)
            width[c] = std::max(width[c], a.symbol_at(row, pos).name.size());
        width[c] += 1;
    }

    // cell[r][c]: the row's symbol name, or empty when absent.
    std::vector<std::vector<const std::string*>> cell(
        static_cast<std::size_t>(nrows),
        std::vector<const std::string*>(ncols, nullptr));
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& [row, pos] : a.columns[c].entries)
            cell[static_cast<std::size_t>(row)][c] = &a.symbol_at(row, pos).name;

    const std::size_t margin = std::to_string(nrows - 1).size();

    RenderedAlignment out;
    for (int r = 0; r < nrows; ++r) {
        if (r > 0) {
            std::string conn(margin + 1, ' ');
            for (std::size_t c = 0; c < ncols; ++c) {
                const bool both = cell[static_cast<std::size_t>(r - 1)][c] &&
                                  cell[static_cast<std::size_t>(r)][c];
                conn += both ? '|' : ' ';
                conn.append(width[c] - 1, ' ');
            }
            rstrip(conn);
            out.lines.push_back(std::move(conn));
        }
        std::string line = pad_index(r, margin) + ' ';
        for (std::size_t c = 0; c < ncols; ++c) {
            const std::string* name = cell[static_cast<std::size_t>(r)][c];
            if (name) {
                line += *name;
                line.append(width[c] - name->size(), ' ');
            } else {
                line.append(width[c], ' ');
            }
        }
        line += pad_index(r, margin);
        out.lines.push_back(std::move(line));
    }
    return out;
}

} // namespace sp
