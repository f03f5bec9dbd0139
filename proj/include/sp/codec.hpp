#pragma once

#include "sp/search.hpp"

namespace sp {

// The compressed stand-in for New: the identification-class Old symbols
// sitting in unmatched columns of the generating alignment, in column
// order, plus the ids of the Old patterns used, in row order.
struct Code {
    std::vector<std::string> symbols;
    std::vector<std::string> source;
};

Code extract_code(const Alignment& a);

// New symbols left in unmatched columns, in column order.
std::vector<std::string> unmatched_new_symbols(const Alignment& a);

struct EncodeResult {
    Code code;
    ScoreBreakdown score;
    std::vector<std::string> residue; // unmatched New symbols, listed verbatim
    bool compressed = false;          // false: top-1 was the New-only baseline
    Alignment alignment;
};

// Builds alignments, takes the top one, and reads the code off it.  A
// baseline top-1 yields an empty code with compressed == false.
EncodeResult encode(const Pattern& new_pattern, const KnowledgeBase& kb,
                    const CostModel& costs, const SearchParams& params);

struct DecodeResult {
    std::vector<std::string> symbols; // contents-class projection
    bool matched = false;             // false: the code matched nothing
    ScoreBreakdown score;
    Alignment alignment;
};

// Runs the code as a New pattern of identification-class names and projects
// the top alignment restricted to contents-class columns.
DecodeResult decode(const std::vector<std::string>& code, const KnowledgeBase& kb,
                    const CostModel& costs, const SearchParams& params);

struct Completion {
    std::vector<std::string> projected; // full projection of the alignment
    std::vector<std::string> inferred;  // contents-class Old symbols in unmatched columns
    double probability = 0.0;
    ScoreBreakdown score;
    Alignment alignment;
};

// One-step inference by completion: every candidate alignment, ranked by
// cd, with the symbols it would add to the partial New pattern.
// Probabilities are normalized over the returned list.
std::vector<Completion> complete(const Pattern& partial_new, const KnowledgeBase& kb,
                                 const CostModel& costs, const SearchParams& params);

struct Recognition {
    std::vector<std::string> pattern_ids; // sorted multiset
    double cd = 0.0;
    double probability = 0.0;
    ScoreBreakdown score;
    Alignment alignment; // best alignment with this multiset
};

// Distinct Old-pattern-id multisets of the top alignments.  Unmatched New
// symbols lower the score without zeroing it, so recognition is fuzzy.
// The baseline never counts as a recognition.
std::vector<Recognition> recognize(const Pattern& new_pattern, const KnowledgeBase& kb,
                                   const CostModel& costs, const SearchParams& params,
                                   std::size_t top_n);

} // namespace sp
