#include "entail/nucleus_logic.hpp"

#include "entail/semantics.hpp"

namespace entail {

std::string LogicalNucleus::name() const {
    switch (kind) {
        case Kind::Glivenko: return "glivenko";
        case Kind::Peirce: return "peirce";
        case Kind::DragalinFriedman: return "df";
        case Kind::Deduction: return "deduction:" + render(deduction_a);
    }
    return "?";
}

FormulaId apply_nucleus(const LogicalNucleus& n, FormulaId f) {
    switch (n.kind) {
        case LogicalNucleus::Kind::Glivenko: return neg(neg(f));
        case LogicalNucleus::Kind::Peirce: return imp(neg(f), f);
        case LogicalNucleus::Kind::DragalinFriedman: return disj(f, bot());
        case LogicalNucleus::Kind::Deduction: return imp(n.deduction_a, f);
    }
    throw std::logic_error("unreachable");
}

ProveResult weak_provable(LogicId base, const LogicalNucleus& n, const Sequent& s) {
    return prove(base, Sequent{s.context, apply_nucleus(n, s.goal)});
}

ProveResult strong_provable(LogicId base, const LogicalNucleus& n, const Sequent& s) {
    switch (n.kind) {
        case LogicalNucleus::Kind::Glivenko:
            if (base != LogicId::Intuitionistic)
                throw PairMismatch("glivenko strong extension is fixed over intuitionistic logic");
            return prove(LogicId::Classical, s);
        case LogicalNucleus::Kind::DragalinFriedman:
            if (base != LogicId::Minimal)
                throw PairMismatch("df strong extension is fixed over minimal logic");
            return prove(LogicId::Intuitionistic, s);
        case LogicalNucleus::Kind::Deduction: {
            std::vector<FormulaId> ctx = s.context;
            ctx.push_back(n.deduction_a);
            return prove(base, make_sequent(std::move(ctx), s.goal));
        }
        case LogicalNucleus::Kind::Peirce:
            throw PairMismatch("no fixed strong-extension identification for the peirce nucleus");
    }
    throw std::logic_error("unreachable");
}

bool check_imp_criterion(LogicId base, const LogicalNucleus& n, FormulaId f, FormulaId g) {
    Sequent s = make_sequent({imp(f, apply_nucleus(n, g))}, apply_nucleus(n, imp(f, g)));
    return prove(base, s).provable;
}

GlivenkoCheck glivenko_check(const Sequent& s) {
    GlivenkoCheck c;
    c.classical = classical_valid(s);
    c.weak = weak_provable(LogicId::Intuitionistic, LogicalNucleus::glivenko(), s).provable;
    c.agree = (c.classical == c.weak);
    return c;
}

DfCheck df_check(const Sequent& s) {
    DfCheck c;
    c.weak = weak_provable(LogicId::Minimal, LogicalNucleus::dragalin_friedman(), s).provable;
    c.strong = prove(LogicId::Intuitionistic, s).provable;
    c.forward_weak_to_strong = !c.weak || c.strong;
    return c;
}

bool peirce_equiv_check(FormulaId f) {
    FormulaId gl = neg(neg(f));
    FormulaId pe = imp(neg(f), f);
    return prove(LogicId::Intuitionistic, make_sequent({gl}, pe)).provable &&
           prove(LogicId::Intuitionistic, make_sequent({pe}, gl)).provable;
}

bool deduction_check(LogicId base, FormulaId a, const Sequent& s) {
    std::vector<FormulaId> ctx = s.context;
    ctx.push_back(a);
    bool assumed = prove(base, make_sequent(std::move(ctx), s.goal)).provable;
    bool arrow = prove(base, Sequent{s.context, imp(a, s.goal)}).provable;
    return assumed == arrow;
}

}  // namespace entail
