#include "sp/cost_model.hpp"

#include <cmath>

namespace sp {

CostModel CostModel::scaled(double c) const {
    auto bits = bits_;
    for (auto& [name, value] : bits) value *= c;
    return CostModel(std::move(bits), fallback_ * c, mode_);
}

CostModel derive_costs(const KnowledgeBase& kb, CostMode mode) {
    std::unordered_map<std::string, double> bits;

    if (mode == CostMode::Uniform) {
        const std::size_t a = kb.alphabet().size();
        const double cost = a <= 2 ? 1.0 : std::log2(static_cast<double>(a));
        for (const auto& name : kb.alphabet()) bits.emplace(name, cost);
        return CostModel(std::move(bits), cost, CostMode::Uniform);
    }

    std::unordered_map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
    for (const Pattern& p : kb.patterns()) {
        for (const Symbol& s : p.symbols) {
            counts[s.name] += p.frequency;
            total += p.frequency;
        }
    }
    for (const auto& [name, f] : counts)
        bits.emplace(name, -std::log2(static_cast<double>(f) /
                                      static_cast<double>(total)));
    const double fallback =
        total == 0 ? 1.0 : std::log2(static_cast<double>(total) + 1.0);
    return CostModel(std::move(bits), fallback, CostMode::Frequency);
}

} // namespace sp
