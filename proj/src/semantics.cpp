#include "entail/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace entail {

// ---------------------------------------------------------------------------
// Classical truth tables.

namespace {

bool eval(FormulaId f, const std::unordered_map<FormulaId, int>& idx, std::uint32_t bits) {
    switch (kind(f)) {
        case Conn::Atom: return (bits >> idx.at(f)) & 1u;
        case Conn::Top: return true;
        case Conn::Bot: return false;
        case Conn::Not: return !eval(left(f), idx, bits);
        case Conn::And: return eval(left(f), idx, bits) && eval(right(f), idx, bits);
        case Conn::Or: return eval(left(f), idx, bits) || eval(right(f), idx, bits);
        case Conn::Imp: return !eval(left(f), idx, bits) || eval(right(f), idx, bits);
    }
    return false;
}

struct TruthTableSetup {
    std::vector<FormulaId> atoms;
    std::unordered_map<FormulaId, int> idx;
};

TruthTableSetup setup_atoms(const Sequent& s) {
    TruthTableSetup t;
    t.atoms = atoms_of(s);
    if (static_cast<int>(t.atoms.size()) > kAtomLimit)
        throw AtomLimitExceeded("sequent has " + std::to_string(t.atoms.size()) +
                                " atoms, limit is " + std::to_string(kAtomLimit));
    for (std::size_t i = 0; i < t.atoms.size(); ++i) t.idx[t.atoms[i]] = static_cast<int>(i);
    return t;
}

std::optional<std::uint32_t> falsifying_bits(const Sequent& s, const TruthTableSetup& t) {
    std::uint64_t rows = 1ull << t.atoms.size();
    for (std::uint64_t bits = 0; bits < rows; ++bits) {
        bool ctx_ok = true;
        for (FormulaId f : s.context)
            if (!eval(f, t.idx, static_cast<std::uint32_t>(bits))) {
                ctx_ok = false;
                break;
            }
        if (ctx_ok && !eval(s.goal, t.idx, static_cast<std::uint32_t>(bits)))
            return static_cast<std::uint32_t>(bits);
    }
    return std::nullopt;
}

}  // namespace

bool classical_valid(const Sequent& s) {
    auto t = setup_atoms(s);
    return !falsifying_bits(s, t).has_value();
}

std::optional<std::vector<std::pair<std::string, bool>>> classical_countermodel(const Sequent& s) {
    auto t = setup_atoms(s);
    auto bits = falsifying_bits(s, t);
    if (!bits) return std::nullopt;
    std::vector<std::pair<std::string, bool>> out;
    for (std::size_t i = 0; i < t.atoms.size(); ++i)
        out.emplace_back(atom_name(t.atoms[i]), ((*bits >> i) & 1u) != 0);
    return out;
}

// ---------------------------------------------------------------------------
// Kripke models.

KripkeModel KripkeModel::make(int world_count, const std::vector<std::pair<int, int>>& order,
                              std::vector<std::vector<std::string>> valuation) {
    if (world_count < 1 || static_cast<int>(valuation.size()) != world_count)
        throw std::invalid_argument("bad world count / valuation size");
    std::vector<std::uint32_t> up(world_count, 0);
    for (auto [a, b] : order) {
        if (a < 0 || a >= world_count || b < 0 || b >= world_count)
            throw std::invalid_argument("order pair out of range");
        up[a] |= 1u << b;
    }
    for (int w = 0; w < world_count; ++w)
        if (!((up[w] >> w) & 1u)) throw std::invalid_argument("order not reflexive");
    for (int a = 0; a < world_count; ++a)
        for (int b = 0; b < world_count; ++b)
            if ((up[a] >> b) & 1u)
                if ((up[b] & ~up[a]) != 0) throw std::invalid_argument("order not transitive");
    for (auto& v : valuation) std::sort(v.begin(), v.end());
    for (int a = 0; a < world_count; ++a)
        for (int b = 0; b < world_count; ++b)
            if ((up[a] >> b) & 1u)
                if (!std::includes(valuation[b].begin(), valuation[b].end(), valuation[a].begin(),
                                   valuation[a].end()))
                    throw std::invalid_argument("valuation not monotone");
    KripkeModel m;
    m.world_count = world_count;
    m.up = std::move(up);
    m.valuation = std::move(valuation);
    return m;
}

nlohmann::ordered_json KripkeModel::to_json() const {
    nlohmann::ordered_json j;
    std::vector<int> worlds;
    for (int w = 0; w < world_count; ++w) worlds.push_back(w);
    j["worlds"] = worlds;
    std::vector<std::vector<int>> pairs;
    for (int a = 0; a < world_count; ++a)
        for (int b = 0; b < world_count; ++b)
            if ((up[a] >> b) & 1u) pairs.push_back({a, b});
    j["order"] = pairs;
    nlohmann::ordered_json val;
    for (int w = 0; w < world_count; ++w) val[std::to_string(w)] = valuation[w];
    j["valuation"] = val;
    return j;
}

bool kripke_forces(const KripkeModel& m, int w, FormulaId f, SemanticsMode mode) {
    if (w < 0 || w >= m.world_count) throw std::invalid_argument("world out of range");
    auto has_atom = [&](int v, const std::string& name) {
        return std::binary_search(m.valuation[v].begin(), m.valuation[v].end(), name);
    };
    switch (kind(f)) {
        case Conn::Atom: return has_atom(w, atom_name(f));
        case Conn::Top: return true;
        case Conn::Bot:
            return mode == SemanticsMode::MinimalOrPositive ? has_atom(w, "_bot") : false;
        case Conn::Not: {
            if (mode == SemanticsMode::MinimalOrPositive)
                throw ModeViolation("negation is not interpreted in MinimalOrPositive mode");
            for (int v = 0; v < m.world_count; ++v)
                if (((m.up[w] >> v) & 1u) && kripke_forces(m, v, left(f), mode)) return false;
            return true;
        }
        case Conn::And:
            return kripke_forces(m, w, left(f), mode) && kripke_forces(m, w, right(f), mode);
        case Conn::Or:
            return kripke_forces(m, w, left(f), mode) || kripke_forces(m, w, right(f), mode);
        case Conn::Imp: {
            for (int v = 0; v < m.world_count; ++v)
                if (((m.up[w] >> v) & 1u) && kripke_forces(m, v, left(f), mode) &&
                    !kripke_forces(m, v, right(f), mode))
                    return false;
            return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Frame and model enumeration.

namespace {

// All preorders on k labeled worlds, as per-world up-set masks.
const std::vector<std::array<std::uint8_t, 5>>& frames(int k) {
    static std::vector<std::vector<std::array<std::uint8_t, 5>>> cache(kMaxWorlds + 1);
    auto& out = cache[k];
    if (!out.empty() || k == 0) return out;
    int offdiag = k * k - k;
    for (std::uint32_t code = 0; code < (1u << offdiag); ++code) {
        std::array<std::uint8_t, 5> up{};
        int bit = 0;
        for (int a = 0; a < k; ++a) {
            up[a] = static_cast<std::uint8_t>(1u << a);
            for (int b = 0; b < k; ++b) {
                if (a == b) continue;
                if ((code >> bit) & 1u) up[a] |= static_cast<std::uint8_t>(1u << b);
                ++bit;
            }
        }
        bool trans = true;
        for (int a = 0; a < k && trans; ++a)
            for (int b = 0; b < k && trans; ++b)
                if ((up[a] >> b) & 1u)
                    if (up[b] & ~up[a]) trans = false;
        if (trans) out.push_back(up);
    }
    return out;
}

std::vector<std::uint8_t> upsets(const std::array<std::uint8_t, 5>& up, int k) {
    std::vector<std::uint8_t> out;
    for (std::uint32_t s = 0; s < (1u << k); ++s) {
        bool closed = true;
        for (int w = 0; w < k && closed; ++w)
            if ((s >> w) & 1u)
                if (up[w] & ~s) closed = false;
        if (closed) out.push_back(static_cast<std::uint8_t>(s));
    }
    return out;
}

}  // namespace

bool for_each_model(int atom_count, int max_worlds,
                    const std::function<bool(const SmallModel&)>& visit) {
    if (max_worlds > kMaxWorlds)
        throw std::invalid_argument("max_worlds exceeds enumeration bound");
    SmallModel m;
    m.val.resize(atom_count);
    for (int k = 1; k <= max_worlds; ++k) {
        for (const auto& up : frames(k)) {
            m.world_count = k;
            m.up = up;
            auto us = upsets(up, k);
            // mixed-radix counter over per-atom up-sets
            std::vector<std::size_t> digit(atom_count, 0);
            while (true) {
                for (int i = 0; i < atom_count; ++i) m.val[i] = us[digit[i]];
                if (visit(m)) return true;
                int i = 0;
                for (; i < atom_count; ++i) {
                    if (++digit[i] < us.size()) break;
                    digit[i] = 0;
                }
                if (i == atom_count) break;  // includes the zero-atom case: visit once
            }
        }
    }
    return false;
}

std::uint8_t forcing_mask(const SmallModel& m, FormulaId f,
                          const std::unordered_map<FormulaId, int>& atom_index, SemanticsMode mode,
                          std::unordered_map<FormulaId, std::uint8_t>& memo) {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    std::uint8_t all = static_cast<std::uint8_t>((1u << m.world_count) - 1);
    std::uint8_t r = 0;
    switch (kind(f)) {
        case Conn::Atom: {
            auto a = atom_index.find(f);
            r = a == atom_index.end() ? 0 : m.val[a->second];
            break;
        }
        case Conn::Top: r = all; break;
        case Conn::Bot: {
            if (mode == SemanticsMode::MinimalOrPositive) {
                auto a = atom_index.find(f);  // bot() id registered by the caller
                r = a == atom_index.end() ? 0 : m.val[a->second];
            } else {
                r = 0;
            }
            break;
        }
        case Conn::Not: {
            if (mode == SemanticsMode::MinimalOrPositive)
                throw ModeViolation("negation is not interpreted in MinimalOrPositive mode");
            std::uint8_t c = forcing_mask(m, left(f), atom_index, mode, memo);
            for (int w = 0; w < m.world_count; ++w)
                if ((m.up[w] & c) == 0) r |= static_cast<std::uint8_t>(1u << w);
            break;
        }
        case Conn::And:
            r = forcing_mask(m, left(f), atom_index, mode, memo) &
                forcing_mask(m, right(f), atom_index, mode, memo);
            break;
        case Conn::Or:
            r = forcing_mask(m, left(f), atom_index, mode, memo) |
                forcing_mask(m, right(f), atom_index, mode, memo);
            break;
        case Conn::Imp: {
            std::uint8_t bad = forcing_mask(m, left(f), atom_index, mode, memo) &
                               static_cast<std::uint8_t>(~forcing_mask(m, right(f), atom_index, mode, memo));
            for (int w = 0; w < m.world_count; ++w)
                if ((m.up[w] & bad) == 0) r |= static_cast<std::uint8_t>(1u << w);
            break;
        }
    }
    memo.emplace(f, r);
    return r;
}

KripkeModel expand_model(const SmallModel& m, const std::vector<std::string>& atoms) {
    std::vector<std::pair<int, int>> order;
    for (int a = 0; a < m.world_count; ++a)
        for (int b = 0; b < m.world_count; ++b)
            if ((m.up[a] >> b) & 1u) order.emplace_back(a, b);
    std::vector<std::vector<std::string>> val(m.world_count);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (int w = 0; w < m.world_count; ++w)
            if ((m.val[i] >> w) & 1u) val[w].push_back(atoms[i]);
    return KripkeModel::make(m.world_count, order, std::move(val));
}

std::optional<KripkeModel> find_countermodel(const Sequent& s, SemanticsMode mode, int max_worlds) {
    if (max_worlds < 1 || max_worlds > kMaxWorlds)
        throw std::invalid_argument("max_worlds must be in 1.." + std::to_string(kMaxWorlds));
    if (mode == SemanticsMode::MinimalOrPositive) {
        for (FormulaId f : s.context)
            if (contains_not(f)) throw ModeViolation("negation in MinimalOrPositive sequent");
        if (contains_not(s.goal)) throw ModeViolation("negation in MinimalOrPositive sequent");
    }
    std::vector<FormulaId> atom_ids = atoms_of(s);
    std::vector<std::string> names;
    for (FormulaId a : atom_ids) names.push_back(atom_name(a));
    if (mode == SemanticsMode::MinimalOrPositive) {
        bool has_bot = contains_bot(s.goal);
        for (FormulaId f : s.context) has_bot = has_bot || contains_bot(f);
        // _bot may already occur as a literal atom; only add the pseudo-atom
        // for bot() nodes if it is not present yet.
        if (has_bot && std::find(names.begin(), names.end(), "_bot") == names.end()) {
            atom_ids.push_back(bot());
            names.push_back("_bot");
        }
    }
    std::unordered_map<FormulaId, int> idx;
    for (std::size_t i = 0; i < atom_ids.size(); ++i) idx[atom_ids[i]] = static_cast<int>(i);
    if (mode == SemanticsMode::MinimalOrPositive && !idx.count(bot())) {
        auto pos = std::find(names.begin(), names.end(), "_bot");
        if (pos != names.end()) idx[bot()] = static_cast<int>(pos - names.begin());
    }

    std::optional<KripkeModel> found;
    for_each_model(static_cast<int>(names.size()), max_worlds, [&](const SmallModel& m) {
        std::unordered_map<FormulaId, std::uint8_t> memo;
        std::uint8_t ctx = static_cast<std::uint8_t>((1u << m.world_count) - 1);
        for (FormulaId f : s.context) ctx &= forcing_mask(m, f, idx, mode, memo);
        if (ctx == 0) return false;
        std::uint8_t goal = forcing_mask(m, s.goal, idx, mode, memo);
        if ((ctx & static_cast<std::uint8_t>(~goal)) == 0) return false;
        found = expand_model(m, names);
        return true;
    });
    return found;
}

}  // namespace entail
