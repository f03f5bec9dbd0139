#include "sp/alignment.hpp"

#include <algorithm>
#include <numeric>

namespace sp {

Alignment Alignment::from_new(const Pattern& new_pattern) {
    Alignment a;
    a.rows.push_back({new_pattern.id, new_pattern.symbols, Role::New});
    a.columns.reserve(new_pattern.symbols.size());
    for (int pos = 0; pos < static_cast<int>(new_pattern.symbols.size()); ++pos)
        a.columns.push_back(Column{{{0, pos}}});
    return a;
}

std::vector<std::string> Alignment::column_names() const {
    std::vector<std::string> out;
    out.reserve(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) out.push_back(column_name(c));
    return out;
}

std::vector<int> Alignment::row_columns(int r) const {
    std::vector<int> out(rows[static_cast<std::size_t>(r)].symbols.size(), -1);
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (const auto& [row, pos] : columns[c].entries)
            if (row == r) out[static_cast<std::size_t>(pos)] = static_cast<int>(c);
    return out;
}

bool Alignment::column_identification(std::size_t c) const {
    for (const auto& [row, pos] : columns[c].entries)
        if (symbol_at(row, pos).cls == SymbolClass::Identification) return true;
    return false;
}

std::string Alignment::key() const {
    std::string out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += rows[r].pattern_id;
        out += '|';
        for (int c : row_columns(static_cast<int>(r))) {
            out += std::to_string(c);
            out += ',';
        }
        out += ';';
    }
    return out;
}

namespace {

// Old rows sorted by (first column, pattern id, full column list); row 0
// stays the New row.  Entry row indices are rewritten to match.
void canonicalize(Alignment& a) {
    const std::size_t n = a.rows.size();
    std::vector<std::vector<int>> cols_of(n);
    for (std::size_t r = 0; r < n; ++r) cols_of[r] = a.row_columns(static_cast<int>(r));

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin() + 1, order.end(), [&](int x, int y) {
        const auto& cx = cols_of[static_cast<std::size_t>(x)];
        const auto& cy = cols_of[static_cast<std::size_t>(y)];
        if (cx.front() != cy.front()) return cx.front() < cy.front();
        const auto& ix = a.rows[static_cast<std::size_t>(x)].pattern_id;
        const auto& iy = a.rows[static_cast<std::size_t>(y)].pattern_id;
        if (ix != iy) return ix < iy;
        return cx < cy;
    });

    std::vector<int> new_index(n);
    std::vector<AlignmentRow> rows;
    rows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        new_index[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
        rows.push_back(std::move(a.rows[static_cast<std::size_t>(order[k])]));
    }
    a.rows = std::move(rows);
    for (Column& col : a.columns) {
        for (auto& [row, pos] : col.entries) row = new_index[static_cast<std::size_t>(row)];
        std::sort(col.entries.begin(), col.entries.end());
    }
}

} // namespace

Alignment merge(const Alignment& a, const Pattern& p, const MatchSet& m) {
    const int ncols = static_cast<int>(a.columns.size());
    const int plen = static_cast<int>(p.symbols.size());
    int prev_c = -1, prev_q = -1;
    for (const auto& [c, q] : m.pairs) {
        if (c <= prev_c || q <= prev_q)
            throw std::invalid_argument("matchset crosses or repeats an index");
        if (c < 0 || c >= ncols || q < 0 || q >= plen)
            throw std::invalid_argument("matchset index out of range");
        if (a.column_name(static_cast<std::size_t>(c)) !=
            p.symbols[static_cast<std::size_t>(q)].name)
            throw std::invalid_argument("matchset name mismatch at column " +
                                        std::to_string(c));
        prev_c = c;
        prev_q = q;
    }

    Alignment out;
    out.rows = a.rows;
    out.rows.push_back({p.id, p.symbols, Role::Old});
    const int r = static_cast<int>(a.rows.size());

    out.columns.reserve(a.columns.size() + p.symbols.size());
    std::size_t next_anchor = 0;
    auto emit_run = [&](int from, int to) {
        for (int q = from; q < to; ++q)
            out.columns.push_back(Column{{{r, q}}});
    };
    for (int c = 0; c < ncols; ++c) {
        if (next_anchor < m.pairs.size() && m.pairs[next_anchor].first == c) {
            if (next_anchor == 0) emit_run(0, m.pairs[0].second);
            Column col = a.columns[static_cast<std::size_t>(c)];
            col.entries.emplace_back(r, m.pairs[next_anchor].second);
            out.columns.push_back(std::move(col));
            const int run_from = m.pairs[next_anchor].second + 1;
            const int run_to = next_anchor + 1 < m.pairs.size()
                                   ? m.pairs[next_anchor + 1].second
                                   : plen;
            emit_run(run_from, run_to);
            ++next_anchor;
        } else {
            out.columns.push_back(a.columns[static_cast<std::size_t>(c)]);
        }
    }
    if (m.pairs.empty()) emit_run(0, plen);

    canonicalize(out);
    return out;
}

std::vector<std::string> projection(const Alignment& a) { return a.column_names(); }

std::vector<Violation> validate_alignment(const Alignment& a) {
    std::vector<Violation> out;
    if (a.rows.empty()) {
        out.push_back({"row 0 missing", "alignment"});
        return out;
    }
    if (a.rows.front().role != Role::New)
        out.push_back({"row 0 not New", "row 0"});

    const int nrows = static_cast<int>(a.rows.size());
    // seen[r][p] counts how many columns hold position p of row r.
    std::vector<std::vector<int>> seen(static_cast<std::size_t>(nrows));
    for (int r = 0; r < nrows; ++r)
        seen[static_cast<std::size_t>(r)].assign(
            a.rows[static_cast<std::size_t>(r)].symbols.size(), 0);

    std::vector<int> last_pos(static_cast<std::size_t>(nrows), -1);
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
        const auto& entries = a.columns[c].entries;
        const std::string loc = "column " + std::to_string(c);
        if (entries.empty()) {
            out.push_back({"empty column", loc});
            continue;
        }
        std::vector<bool> row_used(static_cast<std::size_t>(nrows), false);
        const std::string* name = nullptr;
        for (const auto& [row, pos] : entries) {
            if (row < 0 || row >= nrows ||
                pos < 0 ||
                pos >= static_cast<int>(a.rows[static_cast<std::size_t>(row)].symbols.size())) {
                out.push_back({"entry out of range", loc});
                continue;
            }
            if (row_used[static_cast<std::size_t>(row)])
                out.push_back({"duplicate row in column", loc});
            row_used[static_cast<std::size_t>(row)] = true;
            const Symbol& s = a.symbol_at(row, pos);
            if (name && s.name != *name)
                out.push_back({"column name mismatch", loc});
            if (!name) name = &s.name;
            ++seen[static_cast<std::size_t>(row)][static_cast<std::size_t>(pos)];
            if (pos <= last_pos[static_cast<std::size_t>(row)])
                out.push_back({"order preservation",
                               loc + ", row " + std::to_string(row)});
            last_pos[static_cast<std::size_t>(row)] = pos;
        }
    }
    for (int r = 0; r < nrows; ++r)
        for (std::size_t p = 0; p < seen[static_cast<std::size_t>(r)].size(); ++p)
            if (seen[static_cast<std::size_t>(r)][p] != 1)
                out.push_back({"row completeness",
                               "row " + std::to_string(r) + ", position " +
                                   std::to_string(p)});
    return out;
}

} // namespace sp
