#pragma once

#include <vector>

#include "sp/alignment.hpp"
#include "sp/cost_model.hpp"

namespace sp {

// cd = b_new - b_code: bits of New covered by the alignment minus bits of
// code needed to reconstruct it.  The New-only alignment is (0, 0, 0).
struct ScoreBreakdown {
    double b_new = 0.0;
    double b_code = 0.0;
    double cd = 0.0;

    bool operator==(const ScoreBreakdown&) const = default;
};

// Walks the columns in order: b_new sums the cost of New symbols in
// matched columns; b_code sums the cost of identification-class Old
// symbols in unmatched columns.  Contents-class unmatched Old symbols are
// reconstructed by decoding, not transmitted, so they do not count.
ScoreBreakdown compression_difference(const Alignment& a, const CostModel& costs);

// p_i = 2^(-b_code_i) / sum_j 2^(-b_code_j), over the given candidates in
// order.  Shift-invariant in b_code; sums to 1 within 1e-9.  Throws
// std::invalid_argument on an empty list.
std::vector<double> relative_probabilities(const std::vector<ScoreBreakdown>& cands);

} // namespace sp
