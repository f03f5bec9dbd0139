#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sp/cost_model.hpp"

namespace sp {

// An order-preserving partial matching between two symbol sequences:
// index pairs (i into A, j into B), strictly increasing on both sides,
// with A[i] and B[j] carrying the same name.  Score is the summed bit
// cost of the matched names, accumulated in pair order.
struct MatchSet {
    std::vector<std::pair<int, int>> pairs;
    double score = 0.0;

    bool empty() const { return pairs.empty(); }
    bool operator==(const MatchSet&) const = default;
};

// Ranks higher score first, ties by lexicographically smallest pair list.
bool matchset_before(const MatchSet& lhs, const MatchSet& rhs);

// k-best weighted-LCS over the two name sequences.  The returned list is
// sorted by matchset_before, has no duplicates, and its first element
// attains the maximum achievable score.  The empty matchset counts as a
// matchset, so the result is never empty.
std::vector<MatchSet> align_pairwise(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b,
                                     const CostModel& costs, std::size_t k);

// Sum of costs over m's matched symbols of `a`, in pair order.
double score_matchset(const MatchSet& m, const std::vector<std::string>& a,
                      const CostModel& costs);

namespace detail {

// Hot path used by the search: sequences pre-interned to symbol ids with a
// parallel cost table.  k == npos disables truncation (full enumeration;
// only sane for short sequences).
std::vector<MatchSet> k_best_matchsets(const std::vector<int>& a,
                                       const std::vector<int>& b,
                                       const std::vector<double>& cost_by_id,
                                       std::size_t k);

} // namespace detail

} // namespace sp
