#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sp/cost_model.hpp"
#include "sp/knowledge_base.hpp"
#include "test_util.hpp"

using namespace sp;

TEST_CASE("kitten pattern line parses with explicit classes") {
    auto kb = load_kb("P1 1 : !Nr !5 k i t t e n !#Nr\n");
    REQUIRE(kb.size() == 1);
    const Pattern& p = kb.patterns().front();
    CHECK(p.id == "P1");
    CHECK(p.frequency == 1);
    REQUIRE(p.symbols.size() == 9);

    auto cls_of = [&](const std::string& name) {
        for (const Symbol& s : p.symbols)
            if (s.name == name) return s.cls;
        FAIL("symbol not found: " << name);
        return SymbolClass::Contents;
    };
    for (const char* id_sym : {"Nr", "5", "#Nr"})
        CHECK(cls_of(id_sym) == SymbolClass::Identification);
    for (const char* c_sym : {"k", "i", "t", "e", "n"})
        CHECK(cls_of(c_sym) == SymbolClass::Contents);

    const std::vector<std::string> expected{"Nr", "5", "k", "i", "t",
                                            "t",  "e", "n", "#Nr"};
    CHECK(p.names() == expected);
}

TEST_CASE("comments-only file loads as empty knowledge base") {
    auto kb = load_kb("# nothing here\n\n   # still nothing\n");
    CHECK(kb.empty());
    CHECK(kb.alphabet().empty());
}

TEST_CASE("parse errors carry line and column") {
    CHECK_THROWS_WITH_AS(load_kb("P1 1 :\n"), doctest::Contains("empty pattern"),
                         ParseError);
    try {
        load_kb("# fine\nP1 0 : a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(doctest::Contains("positive")(e.what()));
    }
    CHECK_THROWS_AS(load_kb("P1 x : a\n"), ParseError);
    CHECK_THROWS_AS(load_kb("P1 1 a b\n"), ParseError);
    CHECK_THROWS_WITH_AS(load_kb("P1 1 : a\nP1 1 : b\n"),
                         doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_AS(load_kb("P1 1 : ! a\n"), ParseError);
    CHECK_THROWS_AS(load_kb("P1 1 : !!x\n"), ParseError);
}

TEST_CASE("NEW line parses contents-only and at most once") {
    auto file = parse_kb_text("NEW : a b c\nP1 2 : !X a !#X\n");
    REQUIRE(file.new_pattern.has_value());
    CHECK(file.new_pattern->role == Role::New);
    CHECK(file.new_pattern->names() == std::vector<std::string>{"a", "b", "c"});
    for (const Symbol& s : file.new_pattern->symbols)
        CHECK(s.cls == SymbolClass::Contents);
    CHECK(file.kb.size() == 1);

    CHECK_THROWS_AS(parse_kb_text("NEW : a\nNEW : b\n"), ParseError);
    CHECK_THROWS_AS(parse_kb_text("NEW : !a\n"), ParseError);
}

TEST_CASE("round trip: serialize then reload is identical") {
    auto kb = test_util::figure2_kb();
    auto reloaded = load_kb(serialize_kb(kb));
    REQUIRE(reloaded.size() == kb.size());
    for (std::size_t i = 0; i < kb.size(); ++i)
        CHECK(reloaded.patterns()[i] == kb.patterns()[i]);
    CHECK(reloaded.alphabet() == kb.alphabet());
}

TEST_CASE("uniform costs") {
    auto kb4 = load_kb("P1 1 : a b\nP2 1 : c d\n");
    auto costs = derive_costs(kb4, CostMode::Uniform);
    for (const char* n : {"a", "b", "c", "d"})
        CHECK(costs.cost(n) == doctest::Approx(2.0));
    CHECK(costs.cost("zz") == doctest::Approx(2.0)); // fallback

    // Floor of 1 bit for tiny alphabets.
    CHECK(derive_costs(load_kb("P1 1 : a\n"), CostMode::Uniform).cost("a") ==
          doctest::Approx(1.0));
    CHECK(derive_costs(load_kb("P1 1 : a b a\n"), CostMode::Uniform).cost("b") ==
          doctest::Approx(1.0));
    CHECK(derive_costs(load_kb(""), CostMode::Uniform).cost("q") ==
          doctest::Approx(1.0));
}

TEST_CASE("frequency costs from the stated formula") {
    auto kb = load_kb("P1 1 : a a b\n");
    auto costs = derive_costs(kb, CostMode::Frequency);
    CHECK(costs.cost("a") == doctest::Approx(-std::log2(2.0 / 3.0)).epsilon(1e-12));
    CHECK(costs.cost("b") == doctest::Approx(-std::log2(1.0 / 3.0)).epsilon(1e-12));
    // Unseen name: -log2(1/(F+1)) with F = 3.
    CHECK(costs.cost("q") == doctest::Approx(std::log2(4.0)).epsilon(1e-12));
}

TEST_CASE("figure-2 frequency costs match the counting oracle") {
    // Frozen output of tests/oracle/count_costs.py over data/figure2.spk.
    auto costs = derive_costs(test_util::figure2_kb(), CostMode::Frequency);
    CHECK(costs.cost("t") == doctest::Approx(4.142957953842043).epsilon(1e-14));
    for (const char* twice :
         {"#D", "#N", "#NP", "#Nr", "#V", "#Vr", ";", "D", "N", "NP", "Np", "Nr",
          "Num", "V", "Vp", "Vr"})
        CHECK(costs.cost(twice) == doctest::Approx(4.7279204545632).epsilon(1e-14));
    for (const char* once : {"#S", "1", "4", "5", "Dp", "PL", "S", "a", "e", "i",
                             "k", "l", "n", "o", "p", "s", "w", "y"})
        CHECK(costs.cost(once) == doctest::Approx(5.7279204545632).epsilon(1e-14));
    CHECK(costs.fallback() == doctest::Approx(5.754887502163468).epsilon(1e-14));

    auto uniform = derive_costs(test_util::figure2_kb(), CostMode::Uniform);
    CHECK(uniform.cost("t") == doctest::Approx(5.129283016944966).epsilon(1e-14));
}

TEST_CASE("frequency costs form a distribution and ignore pattern order") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        auto kb = test_util::random_kb(rng, 5, 6, 4);
        auto costs = derive_costs(kb, CostMode::Frequency);
        double sum = 0.0;
        for (const auto& name : kb.alphabet()) sum += std::exp2(-costs.cost(name));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

        auto shuffled = kb.patterns();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        auto costs2 = derive_costs(KnowledgeBase(shuffled), CostMode::Frequency);
        for (const auto& name : kb.alphabet())
            CHECK(costs.cost(name) == costs2.cost(name));
    }
}
