#include "sp/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace sp {

double msa_score(const Alignment& a, const CostModel& costs) {
    double total = 0.0;
    for (std::size_t c = 0; c < a.columns.size(); ++c)
        if (a.columns[c].matched())
            total += costs.cost(a.column_name(c)) *
                     static_cast<double>(a.columns[c].entries.size() - 1);
    return total;
}

namespace {

constexpr std::size_t kAllMatchsets = static_cast<std::size_t>(-1);

struct Node {
    Alignment align;
    ScoreBreakdown sb;
    double rank_score = 0.0; // cd, or msa_score in MSA mode
    std::vector<int> col_ids;
    std::string key;
    std::uint64_t used = 0; // MSA mode: sequences already placed
    bool expanded = false;
};

struct Engine {
    const CostModel& costs;
    SearchParams params;
    bool msa_mode = false;

    std::vector<const Pattern*> patterns;
    std::vector<std::vector<int>> pattern_ids;
    std::unordered_map<std::string, int> ids;
    std::vector<double> cost_by_id;

    Engine(const CostModel& c, const SearchParams& p) : costs(c), params(p) {
        if (p.beam_width < 1 || p.max_iterations < 1 || p.k_pairwise < 1 ||
            p.workers < 1)
            throw std::invalid_argument("search parameters must be positive");
    }

    int intern(const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<int>(cost_by_id.size()));
        if (inserted) cost_by_id.push_back(costs.cost(name));
        return it->second;
    }

    void add_pattern(const Pattern& p) {
        patterns.push_back(&p);
        std::vector<int> pid;
        pid.reserve(p.symbols.size());
        for (const Symbol& s : p.symbols) pid.push_back(intern(s.name));
        pattern_ids.push_back(std::move(pid));
    }

    Node make_node(Alignment a, std::uint64_t used) const {
        Node n;
        n.sb = compression_difference(a, costs);
        n.rank_score = msa_mode ? msa_score(a, costs) : n.sb.cd;
        n.col_ids.reserve(a.columns.size());
        for (std::size_t c = 0; c < a.columns.size(); ++c)
            n.col_ids.push_back(ids.at(a.column_name(c)));
        n.key = a.key();
        n.used = used;
        n.align = std::move(a);
        return n;
    }

    // Total order: rank score desc, fewer rows, lexicographic row-id list,
    // lexicographic column-name sequence, structural key.
    bool before(const Node& x, const Node& y) const {
        if (x.rank_score != y.rank_score) return x.rank_score > y.rank_score;
        if (x.align.rows.size() != y.align.rows.size())
            return x.align.rows.size() < y.align.rows.size();
        for (std::size_t r = 0; r < x.align.rows.size(); ++r) {
            const auto& ix = x.align.rows[r].pattern_id;
            const auto& iy = y.align.rows[r].pattern_id;
            if (ix != iy) return ix < iy;
        }
        const std::size_t n = std::min(x.col_ids.size(), y.col_ids.size());
        for (std::size_t c = 0; c < n; ++c) {
            if (x.col_ids[c] != y.col_ids[c]) {
                // Interned ids are first-appearance order; compare the names.
                return x.align.column_name(c) < y.align.column_name(c);
            }
        }
        if (x.col_ids.size() != y.col_ids.size())
            return x.col_ids.size() < y.col_ids.size();
        return x.key < y.key;
    }

    std::vector<Node> expand(const Node& node, std::size_t pi) const {
        const Pattern& p = *patterns[pi];
        const std::size_t k =
            params.exhaustive ? kAllMatchsets : static_cast<std::size_t>(params.k_pairwise);
        auto matchsets =
            detail::k_best_matchsets(node.col_ids, pattern_ids[pi], cost_by_id, k);
        if (msa_mode) {
            const bool has_empty =
                std::any_of(matchsets.begin(), matchsets.end(),
                            [](const MatchSet& m) { return m.empty(); });
            if (!has_empty) matchsets.push_back(MatchSet{});
        }
        std::vector<Node> out;
        out.reserve(matchsets.size());
        const std::uint64_t used = msa_mode ? node.used | (1ULL << pi) : 0;
        for (const MatchSet& m : matchsets) {
            if (m.empty() && !msa_mode) continue;
            out.push_back(make_node(merge(node.align, p, m), used));
        }
        return out;
    }

    void sort_nodes(std::vector<Node>& nodes) const {
        std::sort(nodes.begin(), nodes.end(),
                  [this](const Node& x, const Node& y) { return before(x, y); });
    }

    void run_tasks(const std::vector<std::pair<std::size_t, std::size_t>>& tasks,
                   const std::vector<Node>& beam,
                   std::vector<std::vector<Node>>& results) const {
        results.assign(tasks.size(), {});
        auto work = [&](std::size_t t) {
            results[t] = expand(beam[tasks[t].first], tasks[t].second);
        };
        if (params.workers <= 1 || tasks.size() <= 1) {
            for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
            return;
        }
        std::atomic<std::size_t> next{0};
        auto body = [&] {
            for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) work(t);
        };
        std::vector<std::thread> threads;
        const int extra = std::min<int>(params.workers - 1,
                                        static_cast<int>(tasks.size()) - 1);
        threads.reserve(static_cast<std::size_t>(extra));
        for (int w = 0; w < extra; ++w) threads.emplace_back(body);
        body();
        for (auto& th : threads) th.join();
    }

    // Beam loop for the normal mode: survivors carry over, every
    // not-yet-expanded survivor is driven against every pattern.
    std::vector<Node> run(const Pattern& new_pattern) {
        Node root = make_node(Alignment::from_new(new_pattern), 0);
        const std::string root_key = root.key;
        std::unordered_set<std::string> seen{root.key};
        std::vector<Node> beam;
        beam.push_back(std::move(root));

        for (int iter = 0; iter < params.max_iterations; ++iter) {
            std::vector<std::pair<std::size_t, std::size_t>> tasks;
            for (std::size_t i = 0; i < beam.size(); ++i) {
                if (beam[i].expanded) continue;
                for (std::size_t pi = 0; pi < patterns.size(); ++pi)
                    tasks.emplace_back(i, pi);
                beam[i].expanded = true;
            }
            if (tasks.empty()) break;

            std::vector<std::vector<Node>> results;
            run_tasks(tasks, beam, results);
            for (auto& group : results)
                for (Node& n : group)
                    if (seen.insert(n.key).second) beam.push_back(std::move(n));

            sort_nodes(beam);
            if (!params.exhaustive &&
                beam.size() > static_cast<std::size_t>(params.beam_width))
                beam.resize(static_cast<std::size_t>(params.beam_width));
        }

        // The baseline survives trimming so callers always see it.
        if (std::none_of(beam.begin(), beam.end(),
                         [&](const Node& n) { return n.key == root_key; })) {
            beam.push_back(make_node(Alignment::from_new(new_pattern), 0));
            sort_nodes(beam);
        }
        return beam;
    }

    // Layered loop for MSA mode: layer i holds alignments with i placed
    // sequences, so the final layer places every sequence exactly once.
    std::vector<Node> run_msa(const Pattern& driving) {
        std::vector<Node> layer;
        layer.push_back(make_node(Alignment::from_new(driving), 0));
        for (std::size_t step = 0; step < patterns.size(); ++step) {
            std::vector<std::pair<std::size_t, std::size_t>> tasks;
            for (std::size_t i = 0; i < layer.size(); ++i)
                for (std::size_t pi = 0; pi < patterns.size(); ++pi)
                    if (!(layer[i].used & (1ULL << pi))) tasks.emplace_back(i, pi);

            std::vector<std::vector<Node>> results;
            run_tasks(tasks, layer, results);
            std::vector<Node> next;
            std::unordered_set<std::string> seen;
            for (auto& group : results)
                for (Node& n : group)
                    if (seen.insert(n.key + std::to_string(n.used)).second)
                        next.push_back(std::move(n));

            sort_nodes(next);
            if (!params.exhaustive &&
                next.size() > static_cast<std::size_t>(params.beam_width))
                next.resize(static_cast<std::size_t>(params.beam_width));
            layer = std::move(next);
        }
        return layer;
    }
};

} // namespace

std::vector<Candidate> build_alignments(const Pattern& new_pattern,
                                        const KnowledgeBase& kb,
                                        const CostModel& costs,
                                        const SearchParams& params) {
    Engine engine(costs, params);
    for (const Pattern& p : kb.patterns()) engine.add_pattern(p);
    for (const Symbol& s : new_pattern.symbols) engine.intern(s.name);

    std::vector<Node> nodes = engine.run(new_pattern);
    std::vector<Candidate> out;
    out.reserve(nodes.size());
    for (Node& n : nodes) out.push_back({std::move(n.align), n.sb});
    return out;
}

MsaResult msa(const std::vector<Pattern>& sequences, const CostModel& costs,
              const SearchParams& params) {
    if (sequences.size() < 2)
        throw std::invalid_argument("msa requires at least 2 sequences");
    if (sequences.size() > 64)
        throw std::invalid_argument("msa supports at most 64 sequences");
    for (const Pattern& p : sequences)
        for (const Symbol& s : p.symbols)
            if (s.cls != SymbolClass::Contents)
                throw std::invalid_argument(
                    "msa sequences must be contents-class only");

    Engine engine(costs, params);
    engine.msa_mode = true;
    for (std::size_t i = 1; i < sequences.size(); ++i)
        engine.add_pattern(sequences[i]);
    for (const Symbol& s : sequences.front().symbols) engine.intern(s.name);

    std::vector<Node> layer = engine.run_msa(sequences.front());
    // Every expansion admits the empty matchset, so the layer is nonempty.
    Node& best = layer.front();
    return {std::move(best.align), best.rank_score};
}

} // namespace sp
