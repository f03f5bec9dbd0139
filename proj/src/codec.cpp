#include "sp/codec.hpp"

#include <algorithm>
#include <stdexcept>

namespace sp {

Code extract_code(const Alignment& a) {
    Code code;
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
        const Column& col = a.columns[c];
        if (col.matched()) continue;
        const auto& [row, pos] = col.entries.front();
        if (row != 0 && a.symbol_at(row, pos).cls == SymbolClass::Identification)
            code.symbols.push_back(a.symbol_at(row, pos).name);
    }
    for (std::size_t r = 1; r < a.rows.size(); ++r)
        code.source.push_back(a.rows[r].pattern_id);
    return code;
}

std::vector<std::string> unmatched_new_symbols(const Alignment& a) {
    std::vector<std::string> out;
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
        const Column& col = a.columns[c];
        if (col.matched()) continue;
        const auto& [row, pos] = col.entries.front();
        if (row == 0) out.push_back(a.symbol_at(row, pos).name);
    }
    return out;
}

EncodeResult encode(const Pattern& new_pattern, const KnowledgeBase& kb,
                    const CostModel& costs, const SearchParams& params) {
    auto candidates = build_alignments(new_pattern, kb, costs, params);
    const Candidate& top = candidates.front();

    EncodeResult result;
    result.alignment = top.alignment;
    result.score = top.score;
    result.compressed = top.alignment.rows.size() > 1;
    if (result.compressed) {
        result.code = extract_code(top.alignment);
        result.residue = unmatched_new_symbols(top.alignment);
    } else {
        result.residue = new_pattern.names();
    }
    return result;
}

DecodeResult decode(const std::vector<std::string>& code, const KnowledgeBase& kb,
                    const CostModel& costs, const SearchParams& params) {
    if (code.empty()) return {};

    Pattern as_new;
    as_new.id = "CODE";
    as_new.role = Role::New;
    for (const std::string& name : code) {
        if (!valid_symbol_name(name))
            throw std::invalid_argument("invalid code symbol: '" + name + "'");
        // Identification-class New symbols are permitted in decode mode only;
        // they target the identification symbols of the stored patterns.
        as_new.symbols.push_back({name, SymbolClass::Identification});
    }

    auto candidates = build_alignments(as_new, kb, costs, params);
    const Candidate& top = candidates.front();

    DecodeResult result;
    result.alignment = top.alignment;
    result.score = top.score;
    result.matched = top.alignment.rows.size() > 1;
    if (result.matched) {
        const Alignment& a = top.alignment;
        for (std::size_t c = 0; c < a.columns.size(); ++c)
            if (!a.column_identification(c))
                result.symbols.push_back(a.column_name(c));
    }
    return result;
}

std::vector<Completion> complete(const Pattern& partial_new, const KnowledgeBase& kb,
                                 const CostModel& costs, const SearchParams& params) {
    auto candidates = build_alignments(partial_new, kb, costs, params);

    std::vector<ScoreBreakdown> breakdowns;
    breakdowns.reserve(candidates.size());
    for (const Candidate& c : candidates) breakdowns.push_back(c.score);
    const auto probabilities = relative_probabilities(breakdowns);

    std::vector<Completion> out;
    out.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Alignment& a = candidates[i].alignment;
        Completion comp;
        comp.projected = projection(a);
        for (std::size_t c = 0; c < a.columns.size(); ++c) {
            const Column& col = a.columns[c];
            if (col.matched()) continue;
            const auto& [row, pos] = col.entries.front();
            if (row != 0 && a.symbol_at(row, pos).cls == SymbolClass::Contents)
                comp.inferred.push_back(a.symbol_at(row, pos).name);
        }
        comp.probability = probabilities[i];
        comp.score = candidates[i].score;
        comp.alignment = a;
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<Recognition> recognize(const Pattern& new_pattern, const KnowledgeBase& kb,
                                   const CostModel& costs, const SearchParams& params,
                                   std::size_t top_n) {
    if (top_n < 1) throw std::invalid_argument("recognize: top_n must be positive");
    auto candidates = build_alignments(new_pattern, kb, costs, params);

    std::vector<Recognition> out;
    std::vector<std::vector<std::string>> seen;
    for (const Candidate& cand : candidates) {
        if (cand.alignment.rows.size() < 2) continue; // baseline is not a recognition
        std::vector<std::string> multiset;
        for (std::size_t r = 1; r < cand.alignment.rows.size(); ++r)
            multiset.push_back(cand.alignment.rows[r].pattern_id);
        std::sort(multiset.begin(), multiset.end());
        if (std::find(seen.begin(), seen.end(), multiset) != seen.end()) continue;
        seen.push_back(multiset);

        Recognition rec;
        rec.pattern_ids = std::move(multiset);
        rec.cd = cand.score.cd;
        rec.score = cand.score;
        rec.alignment = cand.alignment;
        out.push_back(std::move(rec));
        if (out.size() == top_n) break;
    }

    if (!out.empty()) {
        std::vector<ScoreBreakdown> breakdowns;
        breakdowns.reserve(out.size());
        for (const Recognition& r : out) breakdowns.push_back(r.score);
        const auto probabilities = relative_probabilities(breakdowns);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i].probability = probabilities[i];
    }
    return out;
}

} // namespace sp
