#include "sp/json_io.hpp"

namespace sp {

using nlohmann::ordered_json;

ordered_json params_json(const std::string& command, const std::string& kb,
                         const std::string& new_symbols,
                         const std::string& cost_mode, const SearchParams& params,
                         int top, unsigned seed) {
    ordered_json j;
    j["command"] = command;
    j["kb"] = kb;
    j["new"] = new_symbols;
    j["costs"] = cost_mode;
    j["beam"] = params.beam_width;
    j["iters"] = params.max_iterations;
    j["kpair"] = params.k_pairwise;
    j["top"] = top;
    j["exhaustive"] = params.exhaustive;
    j["seed"] = seed;
    return j;
}

ordered_json candidate_json(const Alignment& alignment, const ScoreBreakdown& score,
                            double probability, const std::vector<std::string>& code) {
    ordered_json j;
    j["rows"] = ordered_json::array();
    for (const AlignmentRow& row : alignment.rows) {
        ordered_json r;
        r["pattern_id"] = row.pattern_id;
        r["symbols"] = ordered_json::array();
        for (const Symbol& s : row.symbols) r["symbols"].push_back(s.name);
        j["rows"].push_back(std::move(r));
    }
    j["columns"] = ordered_json::array();
    for (std::size_t c = 0; c < alignment.columns.size(); ++c) {
        ordered_json col;
        col["entries"] = ordered_json::array();
        for (const auto& [row, pos] : alignment.columns[c].entries)
            col["entries"].push_back(ordered_json::array({row, pos}));
        col["name"] = alignment.column_name(c);
        col["matched"] = alignment.columns[c].matched();
        j["columns"].push_back(std::move(col));
    }
    j["cd"] = score.cd;
    j["b_new"] = score.b_new;
    j["b_code"] = score.b_code;
    j["probability"] = probability;
    j["code"] = extract_code(alignment).symbols;
    return j;
}

ordered_json candidates_json(const std::vector<Candidate>& candidates) {
    std::vector<ScoreBreakdown> breakdowns;
    breakdowns.reserve(candidates.size());
    for (const Candidate& c : candidates) breakdowns.push_back(c.score);
    std::vector<double> probabilities;
    if (!candidates.empty()) probabilities = relative_probabilities(breakdowns);

    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < candidates.size(); ++i)
        arr.push_back(candidate_json(candidates[i].alignment, candidates[i].score,
                                     probabilities[i],
                                     extract_code(candidates[i].alignment).symbols));
    return arr;
}

std::string dump_json(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

} // namespace sp
