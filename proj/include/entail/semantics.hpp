#pragma once

// Independent oracles: classical truth-table validity and Kripke
// countermodel enumeration.  These are deliberately separate from the
// sequent-calculus engine so the two can cross-check each other.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "entail/errors.hpp"
#include "entail/formula.hpp"
#include "json.hpp"

namespace entail {

// Intuitionistic: bot is forced nowhere; ~f is forced at w iff f fails at
// every v >= w.  MinimalOrPositive: bot behaves like the ordinary atom
// "_bot" and ~ is rejected (callers pre-reduce).
enum class SemanticsMode { Intuitionistic, MinimalOrPositive };

inline constexpr int kAtomLimit = 24;
inline constexpr int kMaxWorlds = 5;

struct KripkeModel {
    int world_count = 0;
    std::vector<std::uint32_t> up;  // up[w] = bitmask of worlds v with w <= v (contains w)
    std::vector<std::vector<std::string>> valuation;  // sorted atom names per world

    // Validates that `order` is a preorder and the valuation is monotone;
    // throws std::invalid_argument otherwise.
    static KripkeModel make(int world_count, const std::vector<std::pair<int, int>>& order,
                            std::vector<std::vector<std::string>> valuation);

    nlohmann::ordered_json to_json() const;
};

// True iff every assignment satisfying the context satisfies the goal.
// Throws AtomLimitExceeded beyond kAtomLimit distinct atoms.
bool classical_valid(const Sequent& s);

// A falsifying assignment, if any (the atoms of s mapped to truth values).
std::optional<std::vector<std::pair<std::string, bool>>> classical_countermodel(const Sequent& s);

bool kripke_forces(const KripkeModel& m, int w, FormulaId f, SemanticsMode mode);

// Exhaustive search over preorders with <= max_worlds worlds (max_worlds <=
// kMaxWorlds) and monotone valuations over the atoms of s.  A returned model
// has some world forcing the whole context but not the goal.  std::nullopt
// only means "no countermodel up to the bound", never validity.
std::optional<KripkeModel> find_countermodel(const Sequent& s, SemanticsMode mode, int max_worlds);

// --- batch enumeration, used by the exhaustive small-scope suites ---------

struct SmallModel {
    int world_count = 0;
    std::array<std::uint8_t, 5> up{};   // up-set mask per world
    std::vector<std::uint8_t> val;      // extension mask per atom index
};

// Visits every (frame, monotone valuation) pair with 1..max_worlds worlds
// and atom_count atoms.  The visitor returns true to stop early; the
// function returns true iff stopped.
bool for_each_model(int atom_count, int max_worlds, const std::function<bool(const SmallModel&)>& visit);

// Worlds-forcing-f bitmask for a SmallModel.  atom_index maps atom node ids
// (and, in MinimalOrPositive mode, bot()) to positions in m.val; ids absent
// from the map get the empty extension.  memo caches per (model, formula).
std::uint8_t forcing_mask(const SmallModel& m, FormulaId f,
                          const std::unordered_map<FormulaId, int>& atom_index, SemanticsMode mode,
                          std::unordered_map<FormulaId, std::uint8_t>& memo);

// Expands a SmallModel into the public form; atoms[i] names position i.
KripkeModel expand_model(const SmallModel& m, const std::vector<std::string>& atoms);

}  // namespace entail
