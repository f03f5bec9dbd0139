#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sp/match.hpp"
#include "sp/pattern.hpp"

namespace sp {

// One vertical slot of an alignment.  Entries are (row, position) and are
// kept sorted by row; all referenced symbols carry the same name.  A column
// with two or more entries is "matched".
struct Column {
    std::vector<std::pair<int, int>> entries;

    bool matched() const { return entries.size() >= 2; }
    bool operator==(const Column&) const = default;
};

struct AlignmentRow {
    std::string pattern_id;
    std::vector<Symbol> symbols;
    Role role = Role::Old;

    bool operator==(const AlignmentRow&) const = default;
};

// Row 0 is the New pattern; rows 1..n are instances of Old patterns (the
// same pattern id may appear more than once).  Every symbol occurrence of
// every row lives in exactly one column, and column order restricted to
// any row is strictly increasing in position.
//
// Old rows are kept in a canonical order (first column, then pattern id,
// then column list) so that structurally equal alignments compare equal
// regardless of the merge order that produced them.
struct Alignment {
    std::vector<AlignmentRow> rows;
    std::vector<Column> columns;

    bool operator==(const Alignment&) const = default;

    static Alignment from_new(const Pattern& new_pattern);

    const Symbol& symbol_at(int row, int pos) const {
        return rows[static_cast<std::size_t>(row)]
            .symbols[static_cast<std::size_t>(pos)];
    }
    // Unified name of a column (all entries agree on valid alignments).
    const std::string& column_name(std::size_t c) const {
        const auto& [row, pos] = columns[c].entries.front();
        return symbol_at(row, pos).name;
    }
    std::vector<std::string> column_names() const;
    // Column index of each position of row r, in position order.
    std::vector<int> row_columns(int r) const;
    // True when any entry of the column is identification-class.
    bool column_identification(std::size_t c) const;

    // Compact structural fingerprint; equal keys == equal structure.
    std::string key() const;
};

// Adds one row to `a`: matched symbols of `p` (per `m`, whose first index
// addresses a's columns and second index p's symbols) join their columns;
// unmatched symbols become fresh single-entry columns placed right after
// the previous anchored column, except that a run before the first anchor
// hugs that anchor and a fully unmatched pattern is appended at the end.
// Throws std::invalid_argument on a name mismatch or a crossing matchset.
Alignment merge(const Alignment& a, const Pattern& p, const MatchSet& m);

// One unified symbol name per column, in column order.
std::vector<std::string> projection(const Alignment& a);

struct Violation {
    std::string rule;
    std::string location;
};

// Empty result iff every Alignment and Column invariant holds.
std::vector<Violation> validate_alignment(const Alignment& a);

} // namespace sp
