#include <doctest.h>

#include <random>
#include <sstream>

#include "sp/render.hpp"
#include "sp/search.hpp"
#include "test_util.hpp"

using namespace sp;

namespace {

// Symbols of one rendered row line: everything between the margin indices.
std::vector<std::string> recovered_symbols(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    REQUIRE(tokens.size() >= 2);
    tokens.erase(tokens.begin());
    tokens.pop_back();
    return tokens;
}

} // namespace

TEST_CASE("a New-only alignment renders as one framed line") {
    const auto a = Alignment::from_new(make_new_pattern({"a", "b"}));
    const auto rendered = render(a);
    REQUIRE(rendered.lines.size() == 1);
    CHECK(rendered.lines.front() == "0 a b 0");
}

TEST_CASE("connectors sit under exactly the matched block") {
    const auto kb = test_util::figure2_kb();
    const auto base = Alignment::from_new(make_new_pattern(test_util::sentence()));
    MatchSet m{{{3, 2}, {4, 3}, {5, 4}, {6, 5}, {7, 6}, {8, 7}}, 0.0};
    const auto a = merge(base, *kb.find("P1"), m);

    const auto rendered = render(a);
    REQUIRE(rendered.lines.size() == 3);
    CHECK(recovered_symbols(rendered.lines[0]) == test_util::sentence());
    CHECK(recovered_symbols(rendered.lines[2]) == kb.find("P1")->names());

    const std::string& conn = rendered.lines[1];
    CHECK(std::count(conn.begin(), conn.end(), '|') == 6);
    // The '|' marks line up with k i t t e n in both symbol rows.
    for (std::size_t i = 0; i < conn.size(); ++i)
        if (conn[i] == '|') {
            CHECK(rendered.lines[0][i] == rendered.lines[2][i]);
            CHECK(std::string("kitten").find(rendered.lines[0][i]) !=
                  std::string::npos);
        }
}

TEST_CASE("rendered rows recover their patterns") {
    std::mt19937 rng(51);
    CostModel flat({}, 1.0, CostMode::Uniform);
    for (int trial = 0; trial < 20; ++trial) {
        auto kb = test_util::random_kb(rng, 4, 5, 3);
        auto costs = derive_costs(kb, CostMode::Uniform);
        SearchParams params;
        params.max_iterations = 3;
        params.beam_width = 20;
        auto candidates = build_alignments(
            make_new_pattern(test_util::random_names(rng, 6, 3, 1)), kb, costs,
            params);
        const Alignment& a = candidates.front().alignment;
        const auto rendered = render(a);
        REQUIRE(rendered.lines.size() == 2 * a.rows.size() - 1);
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
            std::vector<std::string> names;
            for (const Symbol& s : a.rows[r].symbols) names.push_back(s.name);
            CHECK(recovered_symbols(rendered.lines[2 * r]) == names);
        }
    }
}

TEST_CASE("rendering is byte-stable against the committed golden file") {
    const auto kb = test_util::figure2_kb();
    const auto costs = derive_costs(kb, CostMode::Uniform);
    auto candidates =
        build_alignments(make_new_pattern(test_util::sentence()), kb, costs, {});
    const auto text = render(candidates.front().alignment).text();

    const auto golden =
        test_util::read_file(test_util::source_path("tests/golden/figure2_render.txt"));
    CHECK(text == golden);
}
