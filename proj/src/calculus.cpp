#include "entail/calculus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "entail/semantics.hpp"

namespace entail {

const char* logic_name(LogicId l) {
    switch (l) {
        case LogicId::Positive: return "positive";
        case LogicId::Minimal: return "minimal";
        case LogicId::Intuitionistic: return "intuitionistic";
        case LogicId::Classical: return "classical";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Rewrites.

namespace {

FormulaId map_formula(FormulaId f, std::unordered_map<FormulaId, FormulaId>& memo,
                      FormulaId (*on_not)(FormulaId, std::unordered_map<FormulaId, FormulaId>&),
                      FormulaId bot_image) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    FormulaId r;
    switch (kind(f)) {
        case Conn::Atom:
        case Conn::Top: r = f; break;
        case Conn::Bot: r = bot_image; break;
        case Conn::Not: r = on_not(f, memo); break;
        case Conn::And:
            r = conj(map_formula(left(f), memo, on_not, bot_image),
                     map_formula(right(f), memo, on_not, bot_image));
            break;
        case Conn::Or:
            r = disj(map_formula(left(f), memo, on_not, bot_image),
                     map_formula(right(f), memo, on_not, bot_image));
            break;
        case Conn::Imp:
            r = imp(map_formula(left(f), memo, on_not, bot_image),
                    map_formula(right(f), memo, on_not, bot_image));
            break;
    }
    memo.emplace(f, r);
    return r;
}

FormulaId pc_not(FormulaId f, std::unordered_map<FormulaId, FormulaId>& memo) {
    return imp(map_formula(left(f), memo, pc_not, bot()), bot());
}

// Injective escaping of render(f) into the atom alphabet: alnum kept,
// '_' doubled, anything else becomes '_' plus its two hex digits.
std::string opaque_atom_name(FormulaId f) {
    std::string key = render(f);
    std::string out = "n_";
    char buf[4];
    for (char c : key) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out += c;
        } else if (c == '_') {
            out += "__";
        } else {
            std::snprintf(buf, sizeof buf, "_%02x", static_cast<unsigned char>(c));
            out += buf;
        }
    }
    return out;
}

FormulaId opaque_not(FormulaId f, std::unordered_map<FormulaId, FormulaId>&) {
    return atom(opaque_atom_name(left(f)));
}

FormulaId keep_not(FormulaId f, std::unordered_map<FormulaId, FormulaId>& memo) {
    return neg(map_formula(left(f), memo, keep_not, atom("_bot")));
}

Sequent map_sequent(const Sequent& s, FormulaId (*fn)(FormulaId)) {
    std::vector<FormulaId> ctx;
    for (FormulaId f : s.context) ctx.push_back(fn(f));
    return make_sequent(std::move(ctx), fn(s.goal));
}

}  // namespace

FormulaId reduce_pc(FormulaId f) {
    std::unordered_map<FormulaId, FormulaId> memo;
    return map_formula(f, memo, pc_not, bot());
}

FormulaId reduce_opaque_negation(FormulaId f) {
    std::unordered_map<FormulaId, FormulaId> memo;
    return map_formula(f, memo, opaque_not, atom("_bot"));
}

FormulaId demote_bot(FormulaId f) {
    std::unordered_map<FormulaId, FormulaId> memo;
    return map_formula(f, memo, keep_not, atom("_bot"));
}

Sequent reduce_pc(const Sequent& s) { return map_sequent(s, reduce_pc); }
Sequent reduce_opaque_negation(const Sequent& s) { return map_sequent(s, reduce_opaque_negation); }
Sequent demote_bot(const Sequent& s) { return map_sequent(s, demote_bot); }

// ---------------------------------------------------------------------------
// Contraction-free search (G4-style).  Inputs are ~-free.  Contexts are
// sorted unique vectors.  The absurdity rule L_bot fires only when efq is
// set; for minimal and positive logic bottom has been demoted to the atom
// _bot before the engine runs, so F never reaches it there.

namespace {

using Ctx = std::vector<FormulaId>;

bool ctx_has(const Ctx& c, FormulaId f) {
    return std::binary_search(c.begin(), c.end(), f);
}

Ctx ctx_add(Ctx c, FormulaId f) {
    auto it = std::lower_bound(c.begin(), c.end(), f);
    if (it == c.end() || *it != f) c.insert(it, f);
    return c;
}

Ctx ctx_remove(Ctx c, FormulaId f) {
    auto it = std::lower_bound(c.begin(), c.end(), f);
    if (it != c.end() && *it == f) c.erase(it);
    return c;
}

struct Engine {
    bool efq;
    std::uint64_t budget;
    std::uint64_t steps = 0;
    std::vector<TraceStep> trace;

    void step() {
        if (++steps > budget) throw StepBudgetExceeded("proof search exceeded step budget");
    }

    bool search(const Ctx& ctx, FormulaId goal) {
        step();
        std::size_t cp = trace.size();

        // closure rules
        if (kind(goal) == Conn::Top) {
            trace.push_back({"R_top", goal});
            return true;
        }
        if (efq && ctx_has(ctx, bot())) {
            trace.push_back({"L_bot", bot()});
            return true;
        }
        if (ctx_has(ctx, goal)) {
            trace.push_back({"axiom", goal});
            return true;
        }

        // invertible, non-branching left rules
        for (FormulaId f : ctx) {
            switch (kind(f)) {
                case Conn::Top:
                    trace.push_back({"L_top", f});
                    if (search(ctx_remove(ctx, f), goal)) return true;
                    trace.resize(cp);
                    return false;
                case Conn::And: {
                    trace.push_back({"L_and", f});
                    Ctx c = ctx_add(ctx_add(ctx_remove(ctx, f), left(f)), right(f));
                    if (search(c, goal)) return true;
                    trace.resize(cp);
                    return false;
                }
                case Conn::Imp: {
                    FormulaId a = left(f), b = right(f);
                    switch (kind(a)) {
                        case Conn::Top:
                            trace.push_back({"L_imp_top", f});
                            if (search(ctx_add(ctx_remove(ctx, f), b), goal)) return true;
                            trace.resize(cp);
                            return false;
                        case Conn::Bot:
                            trace.push_back({"L_imp_bot", f});
                            if (search(ctx_remove(ctx, f), goal)) return true;
                            trace.resize(cp);
                            return false;
                        case Conn::And: {
                            trace.push_back({"L_imp_and", f});
                            FormulaId g = imp(left(a), imp(right(a), b));
                            if (search(ctx_add(ctx_remove(ctx, f), g), goal)) return true;
                            trace.resize(cp);
                            return false;
                        }
                        case Conn::Or: {
                            trace.push_back({"L_imp_or", f});
                            Ctx c = ctx_remove(ctx, f);
                            c = ctx_add(c, imp(left(a), b));
                            c = ctx_add(c, imp(right(a), b));
                            if (search(c, goal)) return true;
                            trace.resize(cp);
                            return false;
                        }
                        case Conn::Atom:
                            if (ctx_has(ctx, a)) {
                                trace.push_back({"L_imp_atom", f});
                                if (search(ctx_add(ctx_remove(ctx, f), b), goal)) return true;
                                trace.resize(cp);
                                return false;
                            }
                            break;  // inert until the atom shows up
                        case Conn::Imp: break;  // non-invertible, handled below
                        case Conn::Not:
                            throw std::logic_error("negation reached the search engine");
                    }
                    break;
                }
                case Conn::Not: throw std::logic_error("negation reached the search engine");
                default: break;
            }
        }

        // invertible right rules
        if (kind(goal) == Conn::And) {
            trace.push_back({"R_and", goal});
            if (search(ctx, left(goal)) && search(ctx, right(goal))) return true;
            trace.resize(cp);
            return false;
        }
        if (kind(goal) == Conn::Imp) {
            trace.push_back({"R_imp", goal});
            if (search(ctx_add(ctx, left(goal)), right(goal))) return true;
            trace.resize(cp);
            return false;
        }

        // invertible branching: L_or
        for (FormulaId f : ctx) {
            if (kind(f) != Conn::Or) continue;
            trace.push_back({"L_or", f});
            Ctx base = ctx_remove(ctx, f);
            if (search(ctx_add(base, left(f)), goal) && search(ctx_add(base, right(f)), goal))
                return true;
            trace.resize(cp);
            return false;
        }

        // non-invertible choices
        if (kind(goal) == Conn::Or) {
            trace.push_back({"R_or1", goal});
            if (search(ctx, left(goal))) return true;
            trace.resize(cp);
            trace.push_back({"R_or2", goal});
            if (search(ctx, right(goal))) return true;
            trace.resize(cp);
        }
        for (FormulaId f : ctx) {
            if (kind(f) != Conn::Imp || kind(left(f)) != Conn::Imp) continue;
            FormulaId a = left(f), b = right(f);  // ((c -> d) -> b)
            FormulaId c = left(a), d = right(a);
            trace.push_back({"L_imp_imp", f});
            Ctx base = ctx_remove(ctx, f);
            if (search(ctx_add(base, imp(d, b)), imp(c, d)) && search(ctx_add(base, b), goal))
                return true;
            trace.resize(cp);
        }
        return false;
    }
};

}  // namespace

ProveResult prove(LogicId logic, const Sequent& s, std::uint64_t budget) {
    switch (logic) {
        case LogicId::Classical: {
            Sequent r = reduce_pc(s);
            bool v = classical_valid(r);
            ProveResult out{v, {}};
            if (v) out.trace.push_back({"truth_table", r.goal});
            return out;
        }
        case LogicId::Intuitionistic: {
            Sequent r = reduce_pc(s);
            Engine e{true, budget};
            bool v = e.search(r.context, r.goal);
            return {v, std::move(e.trace)};
        }
        case LogicId::Minimal: {
            Sequent r = demote_bot(reduce_pc(s));
            Engine e{false, budget};
            bool v = e.search(r.context, r.goal);
            return {v, std::move(e.trace)};
        }
        case LogicId::Positive: {
            Sequent r = reduce_opaque_negation(s);
            Engine e{false, budget};
            bool v = e.search(r.context, r.goal);
            return {v, std::move(e.trace)};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace entail
