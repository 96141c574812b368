#include "doctest.h"
#include "entail/nucleus_logic.hpp"

using namespace entail;

namespace {
Sequent seq(const std::string& text) {
    auto r = parse_sequent(text);
    REQUIRE(std::holds_alternative<Sequent>(r));
    return std::get<Sequent>(r);
}
FormulaId fml(const std::string& text) {
    auto r = parse_formula(text);
    REQUIRE(std::holds_alternative<FormulaId>(r));
    return std::get<FormulaId>(r);
}
}  // namespace

TEST_CASE("apply_nucleus shapes") {
    FormulaId p = atom("p");
    CHECK(apply_nucleus(LogicalNucleus::glivenko(), p) == neg(neg(p)));
    CHECK(apply_nucleus(LogicalNucleus::peirce(), p) == imp(neg(p), p));
    CHECK(apply_nucleus(LogicalNucleus::dragalin_friedman(), fml("p -> q")) ==
          disj(fml("p -> q"), bot()));
    CHECK(apply_nucleus(LogicalNucleus::deduction(atom("r")), p) == imp(atom("r"), p));
    CHECK(LogicalNucleus::glivenko().name() == "glivenko");
}

TEST_CASE("weak and strong provability for the named pairs") {
    Sequent lem = seq("|- p | ~p");
    CHECK_FALSE(prove(LogicId::Intuitionistic, lem).provable);
    CHECK(weak_provable(LogicId::Intuitionistic, LogicalNucleus::glivenko(), lem).provable);
    CHECK(strong_provable(LogicId::Intuitionistic, LogicalNucleus::glivenko(), lem).provable);

    Sequent efq = seq("|- F -> q");
    CHECK_FALSE(weak_provable(LogicId::Minimal, LogicalNucleus::dragalin_friedman(), efq).provable);
    CHECK(strong_provable(LogicId::Minimal, LogicalNucleus::dragalin_friedman(), efq).provable);

    Sequent mp = seq("p |- q");
    LogicalNucleus ded = LogicalNucleus::deduction(fml("p -> q"));
    CHECK(weak_provable(LogicId::Positive, ded, mp).provable);
    CHECK(strong_provable(LogicId::Positive, ded, mp).provable);
}

TEST_CASE("strong_provable rejects unidentified pairs") {
    Sequent s = seq("|- p");
    CHECK_THROWS_AS(strong_provable(LogicId::Minimal, LogicalNucleus::glivenko(), s), PairMismatch);
    CHECK_THROWS_AS(strong_provable(LogicId::Intuitionistic, LogicalNucleus::dragalin_friedman(), s),
                    PairMismatch);
    CHECK_THROWS_AS(strong_provable(LogicId::Classical, LogicalNucleus::peirce(), s), PairMismatch);
}

TEST_CASE("implication criterion") {
    // compatible pairs hold on random instances
    for (std::uint64_t s = 0; s < 200; ++s) {
        FormulaId f = random_formula(3, 4, 2 * s);
        FormulaId g = random_formula(3, 4, 2 * s + 1);
        CAPTURE(render(f));
        CAPTURE(render(g));
        CHECK(check_imp_criterion(LogicId::Intuitionistic, LogicalNucleus::glivenko(), f, g));
        CHECK(check_imp_criterion(LogicId::Positive, LogicalNucleus::deduction(atom("u")), f, g));
    }
    // the closed nucleus over minimal logic fails it at f = F, g = q
    CHECK_FALSE(
        check_imp_criterion(LogicId::Minimal, LogicalNucleus::dragalin_friedman(), bot(), atom("q")));
}

TEST_CASE("glivenko_check examples") {
    GlivenkoCheck g = glivenko_check(seq("|- p | ~p"));
    CHECK(g.classical);
    CHECK(g.weak);
    CHECK(g.agree);

    g = glivenko_check(seq("|- p"));
    CHECK_FALSE(g.classical);
    CHECK_FALSE(g.weak);
    CHECK(g.agree);

    g = glivenko_check(seq("~~p |- p"));
    CHECK(g.classical);
    CHECK(g.weak);
    CHECK(g.agree);
}

TEST_CASE("df_check examples, including the separating witness") {
    DfCheck d = df_check(seq("|- F -> q"));
    CHECK(d.strong);
    CHECK_FALSE(d.weak);
    CHECK(d.forward_weak_to_strong);

    d = df_check(seq("p |- p"));
    CHECK(d.weak);
    CHECK(d.strong);
    CHECK(d.forward_weak_to_strong);
}

TEST_CASE("peirce nucleus is pointwise equivalent to glivenko over intuitionistic logic") {
    CHECK(peirce_equiv_check(top()));
    CHECK(peirce_equiv_check(bot()));
    CHECK(peirce_equiv_check(atom("p")));
    for (std::uint64_t s = 0; s < 100; ++s) {
        FormulaId f = random_formula(3, 5, s + 77);
        CAPTURE(render(f));
        CHECK(peirce_equiv_check(f));
    }
}

TEST_CASE("deduction_check examples") {
    CHECK(deduction_check(LogicId::Positive, atom("a"), seq("a -> b |- b")));
    CHECK(deduction_check(LogicId::Classical, fml("p -> q"), seq("p |- q")));
    for (std::uint64_t s = 0; s < 100; ++s) {
        FormulaId a = random_formula(3, 3, 3 * s);
        Sequent sq = random_sequent(3, 5, 2, 4, 3 * s + 1);
        CAPTURE(render(a));
        CAPTURE(render(sq));
        CHECK(deduction_check(LogicId::Minimal, a, sq));
        CHECK(deduction_check(LogicId::Intuitionistic, a, sq));
    }
}

TEST_CASE("stability matches the defining axiom of each strong extension") {
    // glivenko stability ~~f |- f: classical yes, intuitionistic no (f = p)
    CHECK(prove(LogicId::Classical, seq("~~p |- p")).provable);
    CHECK_FALSE(prove(LogicId::Intuitionistic, seq("~~p |- p")).provable);
    // df stability (f | F) |- f is interderivable with F |- f over minimal logic
    CHECK_FALSE(prove(LogicId::Minimal, seq("p | F |- p")).provable);
    CHECK_FALSE(prove(LogicId::Minimal, seq("F |- p")).provable);
    CHECK(prove(LogicId::Minimal, seq("p | F, F -> p |- p")).provable);
    CHECK(prove(LogicId::Minimal, seq("F, (p | F) -> p |- p")).provable);
    CHECK(prove(LogicId::Intuitionistic, seq("p | F |- p")).provable);
}
