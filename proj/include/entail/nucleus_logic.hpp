#pragma once

// The concrete logical nuclei (Glivenko, Peirce, Dragalin-Friedman,
// deduction) and the conservation checks built from them.

#include <optional>
#include <string>

#include "entail/calculus.hpp"
#include "entail/errors.hpp"
#include "entail/formula.hpp"

namespace entail {

struct LogicalNucleus {
    enum class Kind { Glivenko, Peirce, DragalinFriedman, Deduction };
    Kind kind = Kind::Glivenko;
    FormulaId deduction_a = 0;  // fixed A, Deduction only

    static LogicalNucleus glivenko() { return {Kind::Glivenko, 0}; }
    static LogicalNucleus peirce() { return {Kind::Peirce, 0}; }
    static LogicalNucleus dragalin_friedman() { return {Kind::DragalinFriedman, 0}; }
    static LogicalNucleus deduction(FormulaId a) { return {Kind::Deduction, a}; }

    std::string name() const;
};

// The syntactic transform j(f); no simplification.
FormulaId apply_nucleus(const LogicalNucleus& n, FormulaId f);

// prove(base, context |- j(goal)).
ProveResult weak_provable(LogicId base, const LogicalNucleus& n, const Sequent& s);

// The strong extension via the standard identifications:
//   (Glivenko, intuitionistic) -> classical;
//   (DragalinFriedman, minimal) -> intuitionistic;
//   (Deduction(A), any base)   -> base with A assumed.
// Throws PairMismatch for any other (nucleus, base) pair.
ProveResult strong_provable(LogicId base, const LogicalNucleus& n, const Sequent& s);

// prove(base, {f -> j(g)} |- j(f -> g)): the compatibility criterion for
// the implication-introduction rule.
bool check_imp_criterion(LogicId base, const LogicalNucleus& n, FormulaId f, FormulaId g);

struct GlivenkoCheck {
    bool classical = false;
    bool weak = false;
    bool agree = false;
};
GlivenkoCheck glivenko_check(const Sequent& s);

struct DfCheck {
    bool weak = false;
    bool strong = false;
    bool forward_weak_to_strong = false;  // weak implies strong; must always hold
};
DfCheck df_check(const Sequent& s);

// {~~f} |-i ~f -> f and {~f -> f} |-i ~~f, both provable.
bool peirce_equiv_check(FormulaId f);

// prove(base, ctx u {A} |- goal) == prove(base, ctx |- A -> goal).
bool deduction_check(LogicId base, FormulaId a, const Sequent& s);

}  // namespace entail
