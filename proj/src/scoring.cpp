#include "sp/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sp {

ScoreBreakdown compression_difference(const Alignment& a, const CostModel& costs) {
    ScoreBreakdown sb;
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
        const Column& col = a.columns[c];
        if (col.matched()) {
            for (const auto& [row, pos] : col.entries)
                if (row == 0) sb.b_new += costs.cost(a.symbol_at(row, pos).name);
        } else {
            const auto& [row, pos] = col.entries.front();
            if (row != 0 && a.symbol_at(row, pos).cls == SymbolClass::Identification)
                sb.b_code += costs.cost(a.symbol_at(row, pos).name);
        }
    }
    sb.cd = sb.b_new - sb.b_code;
    return sb;
}

std::vector<double> relative_probabilities(const std::vector<ScoreBreakdown>& cands) {
    if (cands.empty())
        throw std::invalid_argument("relative_probabilities: empty candidate list");
    double min_code = cands.front().b_code;
    for (const ScoreBreakdown& sb : cands) min_code = std::min(min_code, sb.b_code);

    std::vector<double> weights;
    weights.reserve(cands.size());
    double total = 0.0;
    for (const ScoreBreakdown& sb : cands) {
        // Shift by the minimum so the largest weight is exactly 1.
        const double w = std::exp2(min_code - sb.b_code);
        weights.push_back(w);
        total += w;
    }
    for (double& w : weights) w /= total;
    return weights;
}

} // namespace sp
