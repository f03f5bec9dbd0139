#pragma once

#include <string>
#include <unordered_map>

#include "sp/knowledge_base.hpp"

namespace sp {

enum class CostMode : std::uint8_t { Uniform, Frequency };

// Bits per symbol name.  Names outside the stored alphabet (New symbols
// never seen before) fall back to a fixed cost, so every name has one.
// Immutable after construction.
class CostModel {
  public:
    CostModel() = default;
    CostModel(std::unordered_map<std::string, double> bits, double fallback,
              CostMode mode)
        : bits_(std::move(bits)), fallback_(fallback), mode_(mode) {}

    double cost(const std::string& name) const {
        auto it = bits_.find(name);
        return it == bits_.end() ? fallback_ : it->second;
    }
    double fallback() const { return fallback_; }
    CostMode mode() const { return mode_; }
    const std::unordered_map<std::string, double>& bits_per_symbol() const {
        return bits_;
    }

    // Returns a copy with every cost (including the fallback) scaled by c.
    CostModel scaled(double c) const;

  private:
    std::unordered_map<std::string, double> bits_;
    double fallback_ = 1.0;
    CostMode mode_ = CostMode::Uniform;
};

// Uniform: every name costs log2(A) bits, floored at 1 bit for A <= 2.
// Frequency: cost(s) = -log2(f(s)/F) with f weighted by pattern frequency;
// unseen names cost -log2(1/(F+1)).  An empty store falls back to 1 bit.
CostModel derive_costs(const KnowledgeBase& kb, CostMode mode);

} // namespace sp
