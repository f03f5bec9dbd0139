#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sp/codec.hpp"
#include "sp/search.hpp"

#include <json.hpp>

namespace sp {

// Machine-readable output.  Schema: top-level {params, candidates}; each
// candidate carries rows [{pattern_id, symbols}], columns
// [{entries, name, matched}], cd, b_new, b_code, probability, code.
// Key order is fixed and worker count is deliberately left out of params,
// so equal queries serialize byte-identically.

nlohmann::ordered_json params_json(const std::string& command,
                                   const std::string& kb,
                                   const std::string& new_symbols,
                                   const std::string& cost_mode,
                                   const SearchParams& params, int top,
                                   unsigned seed);

nlohmann::ordered_json candidate_json(const Alignment& alignment,
                                      const ScoreBreakdown& score,
                                      double probability,
                                      const std::vector<std::string>& code);

// Candidates with probabilities normalized over the given (already
// trimmed) list.
nlohmann::ordered_json candidates_json(const std::vector<Candidate>& candidates);

std::string dump_json(const nlohmann::ordered_json& j);

} // namespace sp
