#include "sp/match.hpp"

#include <algorithm>
#include <unordered_map>

namespace sp {

bool matchset_before(const MatchSet& lhs, const MatchSet& rhs) {
    if (lhs.score != rhs.score) return lhs.score > rhs.score;
    return lhs.pairs < rhs.pairs;
}

namespace detail {

namespace {

// Merges already-sorted candidate lists, drops duplicate pair lists, and
// truncates to k.  Equal pair lists always carry bit-identical scores
// (same summation order), so sort + adjacent-unique is enough.
void merge_dedup(std::vector<MatchSet>& out, std::size_t k) {
    std::sort(out.begin(), out.end(), matchset_before);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const MatchSet& x, const MatchSet& y) {
                              return x.pairs == y.pairs;
                          }),
              out.end());
    if (k != static_cast<std::size_t>(-1) && out.size() > k) out.resize(k);
}

} // namespace

std::vector<MatchSet> k_best_matchsets(const std::vector<int>& a,
                                       const std::vector<int>& b,
                                       const std::vector<double>& cost_by_id,
                                       std::size_t k) {
    const std::size_t n = a.size(), m = b.size();
    // cells[i][j]: k best matchsets over prefixes a[0..i) x b[0..j).
    std::vector<std::vector<std::vector<MatchSet>>> cells(
        n + 1, std::vector<std::vector<MatchSet>>(m + 1));
    for (std::size_t j = 0; j <= m; ++j) cells[0][j] = {MatchSet{}};
    for (std::size_t i = 1; i <= n; ++i) cells[i][0] = {MatchSet{}};

    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            std::vector<MatchSet> cand = cells[i - 1][j];
            cand.insert(cand.end(), cells[i][j - 1].begin(), cells[i][j - 1].end());
            if (a[i - 1] == b[j - 1]) {
                const double cost = cost_by_id[static_cast<std::size_t>(a[i - 1])];
                for (const MatchSet& base : cells[i - 1][j - 1]) {
                    MatchSet ext = base;
                    ext.pairs.emplace_back(static_cast<int>(i) - 1,
                                           static_cast<int>(j) - 1);
                    ext.score += cost;
                    cand.push_back(std::move(ext));
                }
            }
            merge_dedup(cand, k);
            cells[i][j] = std::move(cand);
        }
    }
    return cells[n][m];
}

} // namespace detail

std::vector<MatchSet> align_pairwise(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b,
                                     const CostModel& costs, std::size_t k) {
    std::unordered_map<std::string, int> ids;
    std::vector<double> cost_by_id;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<int>(cost_by_id.size()));
        if (inserted) cost_by_id.push_back(costs.cost(name));
        return it->second;
    };
    std::vector<int> ia, ib;
    ia.reserve(a.size());
    ib.reserve(b.size());
    for (const auto& s : a) ia.push_back(intern(s));
    for (const auto& s : b) ib.push_back(intern(s));
    return detail::k_best_matchsets(ia, ib, cost_by_id, k);
}

double score_matchset(const MatchSet& m, const std::vector<std::string>& a,
                      const CostModel& costs) {
    double total = 0.0;
    for (const auto& [i, j] : m.pairs) total += costs.cost(a[static_cast<std::size_t>(i)]);
    return total;
}

} // namespace sp
