#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sp/codec.hpp"
#include "test_util.hpp"

using namespace sp;

TEST_CASE("encoding against a single bracketed pattern") {
    const auto kb = load_kb("P1 1 : !X a b c !#X\n");
    const auto costs = derive_costs(kb, CostMode::Uniform);
    const auto result = encode(make_new_pattern({"a", "b", "c"}), kb, costs, {});
    CHECK(result.compressed);
    CHECK(result.code.symbols == std::vector<std::string>{"X", "#X"});
    CHECK(result.code.source == std::vector<std::string>{"P1"});
    CHECK(result.residue.empty());
}

TEST_CASE("encoding against an empty store is flagged") {
    const KnowledgeBase kb;
    const auto costs = derive_costs(kb, CostMode::Uniform);
    const auto result = encode(make_new_pattern({"a"}), kb, costs, {});
    CHECK(!result.compressed);
    CHECK(result.code.symbols.empty());
    CHECK(result.residue == std::vector<std::string>{"a"});
}

TEST_CASE("figure-2 code agrees with the column-walking oracle") {
    const auto kb = test_util::figure2_kb();
    const auto costs = derive_costs(kb, CostMode::Uniform);
    const auto result = encode(make_new_pattern(test_util::sentence()), kb, costs, {});
    REQUIRE(result.compressed);

    CHECK(result.code.symbols == oracle::walk_code(result.alignment));
    REQUIRE(!result.code.symbols.empty());
    CHECK(result.code.symbols.front() == "S");
    CHECK(result.code.symbols.back() == "#S");
    CHECK(std::count(result.code.symbols.begin(), result.code.symbols.end(), "PL") ==
          1);
    CHECK(result.residue.empty());
}

TEST_CASE("code cost equals b_code bit for bit") {
    const auto kb = test_util::figure2_kb();
    for (CostMode mode : {CostMode::Uniform, CostMode::Frequency}) {
        const auto costs = derive_costs(kb, mode);
        const auto result =
            encode(make_new_pattern(test_util::sentence()), kb, costs, {});
        double total = 0.0;
        for (const auto& s : result.code.symbols) total += costs.cost(s);
        CHECK(total == result.score.b_code);
    }
}

TEST_CASE("decode inverts encode") {
    SUBCASE("single pattern") {
        const auto kb = load_kb("P1 1 : !X a b c !#X\n");
        const auto costs = derive_costs(kb, CostMode::Uniform);
        const auto result = decode({"X", "#X"}, kb, costs, {});
        CHECK(result.matched);
        CHECK(result.symbols == std::vector<std::string>{"a", "b", "c"});
    }
    SUBCASE("figure-2 round trip") {
        const auto kb = test_util::figure2_kb();
        const auto costs = derive_costs(kb, CostMode::Uniform);
        const auto enc = encode(make_new_pattern(test_util::sentence()), kb, costs, {});
        const auto dec = decode(enc.code.symbols, kb, costs, {});
        CHECK(dec.matched);
        CHECK(dec.symbols == test_util::sentence());
    }
    SUBCASE("empty code is flagged") {
        const auto kb = load_kb("P1 1 : !X a !#X\n");
        const auto costs = derive_costs(kb, CostMode::Uniform);
        const auto result = decode({}, kb, costs, {});
        CHECK(!result.matched);
        CHECK(result.symbols.empty());
    }
    SUBCASE("unknown code is flagged") {
        const auto kb = load_kb("P1 1 : !X a !#X\n");
        const auto costs = derive_costs(kb, CostMode::Uniform);
        const auto result = decode({"QQ", "ZZ"}, kb, costs, {});
        CHECK(!result.matched);
        CHECK(result.symbols.empty());
    }
}

TEST_CASE("completion infers nothing when New fully matches") {
    const auto kb = load_kb("P1 1 : !X a b c !#X\n");
    const auto costs = derive_costs(kb, CostMode::Uniform);
    auto completions = complete(make_new_pattern({"a", "b", "c"}), kb, costs, {});
    REQUIRE(!completions.empty());
    CHECK(completions.front().inferred.empty());
}

TEST_CASE("completion with no shared symbols returns the baseline") {
    const auto kb = load_kb("P1 1 : !X a b !#X\n");
    const auto costs = derive_costs(kb, CostMode::Uniform);
    auto completions = complete(make_new_pattern({"q", "r"}), kb, costs, {});
    REQUIRE(completions.size() == 1);
    CHECK(completions.front().alignment.rows.size() == 1);
    CHECK(completions.front().inferred.empty());
    CHECK(completions.front().probability == doctest::Approx(1.0));
    CHECK(completions.front().projected == std::vector<std::string>{"q", "r"});
}

TEST_CASE("completion fills in the missing contents") {
    const auto kb = load_kb("P1 1 : !X a b c d !#X\n");
    const auto costs = derive_costs(kb, CostMode::Uniform);
    auto completions = complete(make_new_pattern({"a", "b"}), kb, costs, {});
    REQUIRE(!completions.empty());
    CHECK(completions.front().inferred == std::vector<std::string>{"c", "d"});
    double sum = 0.0;
    for (const auto& c : completions) sum += c.probability;
    CHECK(std::abs(sum - 1.0) <= 1e-9);
}

TEST_CASE("figure-2 completion of the truncated sentence") {
    const auto kb = test_util::figure2_kb();
    const auto costs = derive_costs(kb, CostMode::Uniform);
    const auto partial =
        make_new_pattern({"t", "w", "o", "k", "i", "t", "t", "e", "n", "s"});

    SearchParams params;
    params.max_iterations = 3;
    auto completions = complete(partial, kb, costs, params);
    REQUIRE(!completions.empty());

    // The expected top candidate is fixed by brute force over alignments
    // with at most three Old rows.
    std::vector<const Pattern*> pattern_ptrs;
    for (const Pattern& p : kb.patterns()) pattern_ptrs.push_back(&p);
    oracle::ExhaustiveBuilder builder(pattern_ptrs, costs, 3);
    CHECK(completions.front().score.cd ==
          doctest::Approx(builder.max_cd(partial)).epsilon(1e-9));

    // Noun-side structure only: nothing inferred from the verb patterns
    // unless the sentence pattern joins, and here it does not pay its way.
    std::vector<std::string> ids;
    for (std::size_t r = 1; r < completions.front().alignment.rows.size(); ++r)
        ids.push_back(completions.front().alignment.rows[r].pattern_id);
    std::sort(ids.begin(), ids.end());
    CHECK(ids == std::vector<std::string>{"P1", "P2"});
    CHECK(completions.front().inferred.empty());
}

TEST_CASE("recognition of the figure-2 sentence") {
    const auto kb = test_util::figure2_kb();
    const auto costs = derive_costs(kb, CostMode::Uniform);
    const auto sentence = make_new_pattern(test_util::sentence());
    auto recognitions = recognize(sentence, kb, costs, {}, 3);
    REQUIRE(!recognitions.empty());
    CHECK(recognitions.front().pattern_ids ==
          std::vector<std::string>{"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8"});

    double sum = 0.0;
    for (const auto& r : recognitions) sum += r.probability;
    CHECK(std::abs(sum - 1.0) <= 1e-9);

    SUBCASE("one corrupted symbol lowers cd but keeps the multiset") {
        auto names = test_util::sentence();
        names[4] = "qq"; // i -> qq
        auto fuzzy = recognize(make_new_pattern(names), kb, costs, {}, 1);
        REQUIRE(!fuzzy.empty());
        CHECK(fuzzy.front().pattern_ids == recognitions.front().pattern_ids);
        CHECK(fuzzy.front().cd < recognitions.front().cd);
    }
}

TEST_CASE("recognition with no overlap is empty") {
    const auto kb = load_kb("P1 1 : !X a b !#X\n");
    const auto costs = derive_costs(kb, CostMode::Uniform);
    auto recognitions = recognize(make_new_pattern({"q"}), kb, costs, {}, 5);
    CHECK(recognitions.empty());
}
