#pragma once

#include "sp/alignment.hpp"
#include "sp/knowledge_base.hpp"
#include "sp/scoring.hpp"

namespace sp {

struct SearchParams {
    int beam_width = 200;
    int max_iterations = 20;
    int k_pairwise = 10;
    bool exhaustive = false; // no beam trim, all matchsets per merge
    int workers = 1;
};

struct Candidate {
    Alignment alignment;
    ScoreBreakdown score;
};

// Iterative beam search over alignment merges.  Iteration 0 merges New
// with every stored pattern; each later iteration re-drives every
// surviving alignment's column sequence against every pattern.  Only
// merges with a non-empty matchset are admitted, which keeps every Old
// row connected to the New row's structure.
//
// Candidates are ranked by compression difference, then fewer rows, then
// lexicographic row-id list, then lexicographic column-name sequence.
// The New-only alignment is always present as a baseline.  Output is
// independent of `workers`.
std::vector<Candidate> build_alignments(const Pattern& new_pattern,
                                        const KnowledgeBase& kb,
                                        const CostModel& costs,
                                        const SearchParams& params);

// Matched-pair score used by the MSA demo mode: for every matched column,
// cost(name) * (entries - 1).
double msa_score(const Alignment& a, const CostModel& costs);

struct MsaResult {
    Alignment alignment;
    double score = 0.0;
};

// Multiple alignment of plain sequences: the first is the driving row,
// the rest join one per layer with the connectivity restriction lifted
// (fully unmatched rows are admitted), so every sequence appears exactly
// once.  Ranked by msa_score.  Requires >= 2 contents-only sequences.
MsaResult msa(const std::vector<Pattern>& sequences, const CostModel& costs,
              const SearchParams& params);

} // namespace sp
