#include "doctest.h"
#include "entail/semantics.hpp"

using namespace entail;

namespace {
Sequent seq(const std::string& text) {
    auto r = parse_sequent(text);
    REQUIRE(std::holds_alternative<Sequent>(r));
    return std::get<Sequent>(r);
}
}  // namespace

TEST_CASE("classical truth tables") {
    CHECK(classical_valid(seq("|- p | ~p")));
    CHECK(classical_valid(seq("p -> q, ~q |- ~p")));
    CHECK_FALSE(classical_valid(seq("|- p")));
    CHECK(classical_valid(seq("F |- p")));
    CHECK_FALSE(classical_valid(seq("|- F")));
    auto cm = classical_countermodel(seq("|- p & q"));
    REQUIRE(cm.has_value());
    CHECK(cm->size() == 2);
}

TEST_CASE("classical atom limit") {
    std::vector<FormulaId> ctx;
    FormulaId f = atom("x0");
    for (int i = 1; i < 26; ++i) f = conj(f, atom("x" + std::to_string(i)));
    CHECK_THROWS_AS(classical_valid(make_sequent({}, f)), AtomLimitExceeded);
}

TEST_CASE("kripke forcing basics") {
    KripkeModel one = KripkeModel::make(1, {{0, 0}}, {{"p"}});
    CHECK(kripke_forces(one, 0, atom("p"), SemanticsMode::Intuitionistic));
    CHECK(kripke_forces(one, 0, top(), SemanticsMode::Intuitionistic));
    CHECK(kripke_forces(one, 0, top(), SemanticsMode::MinimalOrPositive));
    CHECK_FALSE(kripke_forces(one, 0, bot(), SemanticsMode::Intuitionistic));

    // two-world chain, p true only above
    KripkeModel chain = KripkeModel::make(2, {{0, 0}, {1, 1}, {0, 1}}, {{}, {"p"}});
    FormulaId lem = disj(atom("p"), neg(atom("p")));
    CHECK_FALSE(kripke_forces(chain, 0, lem, SemanticsMode::Intuitionistic));
    CHECK(kripke_forces(chain, 1, lem, SemanticsMode::Intuitionistic));
}

TEST_CASE("kripke model validation") {
    CHECK_THROWS_AS(KripkeModel::make(2, {{0, 0}}, {{}, {}}), std::invalid_argument);  // irreflexive
    CHECK_THROWS_AS(KripkeModel::make(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}, {{}, {}, {}}),
                    std::invalid_argument);  // not transitive
    CHECK_THROWS_AS(KripkeModel::make(2, {{0, 0}, {1, 1}, {0, 1}}, {{"p"}, {}}),
                    std::invalid_argument);  // valuation not monotone
}

TEST_CASE("mode violation on negation in MinimalOrPositive") {
    KripkeModel one = KripkeModel::make(1, {{0, 0}}, {{}});
    CHECK_THROWS_AS(kripke_forces(one, 0, neg(atom("p")), SemanticsMode::MinimalOrPositive),
                    ModeViolation);
}

TEST_CASE("countermodel search") {
    auto cm = find_countermodel(seq("|- p | ~p"), SemanticsMode::Intuitionistic, 2);
    REQUIRE(cm.has_value());
    CHECK(cm->world_count <= 2);
    bool refuted = false;
    for (int w = 0; w < cm->world_count; ++w)
        refuted = refuted ||
                  !kripke_forces(*cm, w, disj(atom("p"), neg(atom("p"))), SemanticsMode::Intuitionistic);
    CHECK(refuted);

    CHECK_FALSE(find_countermodel(seq("|- p -> p"), SemanticsMode::Intuitionistic, 3).has_value());

    // the closed-nucleus witness: (F -> q) | F fails in minimal-style semantics
    auto df = find_countermodel(seq("|- (F -> q) | F"), SemanticsMode::MinimalOrPositive, 2);
    REQUIRE(df.has_value());
    CHECK(df->world_count <= 2);
}

TEST_CASE("forcing monotonicity on enumerated models") {
    // w <= v and forces(w, f) imply forces(v, f), for formulas up to size 6
    std::vector<FormulaId> sample;
    for (std::uint64_t s = 0; s < 60; ++s) {
        FormulaId f = random_formula(2, 5, s);
        if (tree_size(f) <= 6 && !contains_not(f)) sample.push_back(f);
    }
    REQUIRE(sample.size() > 10);
    std::unordered_map<FormulaId, int> idx{{atom("a"), 0}, {atom("b"), 1}, {bot(), 2}};
    int models = 0;
    for_each_model(3, 3, [&](const SmallModel& m) {
        if (++models > 4000) return true;
        std::unordered_map<FormulaId, std::uint8_t> memo;
        for (FormulaId f : sample) {
            std::uint8_t mask = forcing_mask(m, f, idx, SemanticsMode::MinimalOrPositive, memo);
            for (int w = 0; w < m.world_count; ++w)
                if ((mask >> w) & 1u) CHECK((m.up[w] & ~mask) == 0);
        }
        return false;
    });
}

TEST_CASE("kripke json shape") {
    KripkeModel chain = KripkeModel::make(2, {{0, 0}, {1, 1}, {0, 1}}, {{}, {"p"}});
    auto j = chain.to_json();
    CHECK(j["worlds"].size() == 2);
    CHECK(j["order"].size() == 3);
    CHECK(j["valuation"]["1"][0] == "p");
}
