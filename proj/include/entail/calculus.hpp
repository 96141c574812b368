#pragma once

// Decision procedures for the four propositional entailment relations:
// positive, minimal, intuitionistic (contraction-free sequent search) and
// classical (truth tables).

#include <cstdint>
#include <string>
#include <vector>

#include "entail/errors.hpp"
#include "entail/formula.hpp"

namespace entail {

enum class LogicId { Positive, Minimal, Intuitionistic, Classical };

const char* logic_name(LogicId l);

struct TraceStep {
    std::string rule;
    FormulaId principal = 0;
    bool operator==(const TraceStep&) const = default;
};

struct ProveResult {
    bool provable = false;
    std::vector<TraceStep> trace;  // pre-order rule applications, success path only
};

// Replaces every ~f by (f -> F), recursively; the output is ~-free.
FormulaId reduce_pc(FormulaId f);
Sequent reduce_pc(const Sequent& s);

// Replaces each outermost ~f wholesale by a fresh atom keyed by render(f)
// ("n_" plus an injective escaping), and F by the reserved atom _bot.
// Identical negated subformulas map to the same atom.
FormulaId reduce_opaque_negation(FormulaId f);
Sequent reduce_opaque_negation(const Sequent& s);

// Replaces F by the atom _bot (used to demote bottom for minimal logic).
FormulaId demote_bot(FormulaId f);
Sequent demote_bot(const Sequent& s);

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

// Total decision procedure.  Classical delegates to truth tables after the
// PC rewrite; the other three share one contraction-free engine (with the
// absurdity rule enabled only for intuitionistic logic).  Throws
// StepBudgetExceeded if the engine applies more than `budget` rules, which
// the termination ordering should make impossible at sane sizes.
ProveResult prove(LogicId logic, const Sequent& s, std::uint64_t budget = kDefaultStepBudget);

}  // namespace entail
