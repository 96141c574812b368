#include "entail/harness.hpp"

#include <algorithm>

#include "entail/nucleus_logic.hpp"
#include "entail/semantics.hpp"

namespace entail {

namespace {

constexpr std::size_t kMaxFailureSamples = 8;

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void record_failure(HarnessReport& rep, const std::string& sample) {
    ++rep.failures;
    if (rep.failure_samples.size() < kMaxFailureSamples) rep.failure_samples.push_back(sample);
}

constexpr LogicId kLogics[] = {LogicId::Positive, LogicId::Minimal, LogicId::Intuitionistic,
                               LogicId::Classical};

}  // namespace

nlohmann::ordered_json HarnessReport::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["seed"] = seed;
    j["samples"] = samples;
    j["failures"] = failures;
    j["ok"] = ok();
    nlohmann::ordered_json c;
    for (const auto& [k, v] : counters) c[k] = v;
    j["counters"] = c;
    j["failure_samples"] = failure_samples;
    return j;
}

// ---------------------------------------------------------------------------
// Logic-side campaigns.

HarnessReport run_glivenko_campaign(int samples, std::uint64_t seed) {
    HarnessReport rep{.check = "glivenko", .seed = seed, .samples = samples};
    for (int i = 0; i < samples; ++i) {
        Sequent s = random_sequent(4, 8, 3, 5, mix(seed, i));
        GlivenkoCheck c = glivenko_check(s);
        rep.counters["classical_valid"] += c.classical;
        if (!c.agree) record_failure(rep, render(s));
    }
    return rep;
}

HarnessReport run_df_campaign(int samples, std::uint64_t seed) {
    HarnessReport rep{.check = "df", .seed = seed, .samples = samples};
    for (int i = 0; i < samples; ++i) {
        Sequent s = random_sequent(4, 8, 3, 5, mix(seed, i));
        DfCheck c = df_check(s);
        rep.counters["weak_provable"] += c.weak;
        rep.counters["strong_provable"] += c.strong;
        if (!c.forward_weak_to_strong) record_failure(rep, render(s));
    }
    return rep;
}

HarnessReport run_peirce_campaign(int samples, std::uint64_t seed) {
    HarnessReport rep{.check = "peirce", .seed = seed, .samples = samples};
    for (int i = 0; i < samples; ++i) {
        FormulaId f = random_formula(3, 6, mix(seed, i));
        if (!peirce_equiv_check(f)) record_failure(rep, render(f));
    }
    return rep;
}

HarnessReport run_deduction_campaign(int samples, std::uint64_t seed) {
    HarnessReport rep{.check = "deduction", .seed = seed, .samples = samples};
    for (int i = 0; i < samples; ++i) {
        LogicId base = kLogics[i % 4];
        FormulaId a = random_formula(3, 4, mix(seed, 2 * i));
        Sequent s = random_sequent(3, 5, 2, 4, mix(seed, 2 * i + 1));
        if (!deduction_check(base, a, s))
            record_failure(rep, std::string(logic_name(base)) + " A=" + render(a) + " : " + render(s));
    }
    return rep;
}

HarnessReport run_logic_laws_campaign(int samples, std::uint64_t seed) {
    HarnessReport rep{.check = "logic_laws", .seed = seed, .samples = samples};
    for (int i = 0; i < samples; ++i) {
        std::uint64_t s0 = mix(seed, i);
        FormulaId phi = random_formula(3, 4, mix(s0, 1));
        FormulaId psi = random_formula(3, 4, mix(s0, 2));
        Sequent gamma = random_sequent(3, 5, 2, 4, mix(s0, 3));
        Sequent delta = random_sequent(3, 4, 2, 4, mix(s0, 4));

        for (LogicId logic : kLogics) {
            // (R)
            if (!prove(logic, make_sequent({phi}, phi)).provable)
                record_failure(rep, std::string("R ") + logic_name(logic) + ": " + render(phi));
            // (M)
            bool base = prove(logic, gamma).provable;
            if (base) {
                std::vector<FormulaId> bigger = gamma.context;
                bigger.insert(bigger.end(), delta.context.begin(), delta.context.end());
                bigger.push_back(psi);
                if (!prove(logic, make_sequent(std::move(bigger), gamma.goal)).provable)
                    record_failure(rep, std::string("M ") + logic_name(logic) + ": " + render(gamma));
            }
            // (T): gamma |- psi and delta,psi |- phi give gamma,delta |- phi
            bool cut_l = prove(logic, Sequent{gamma.context, psi}).provable;
            std::vector<FormulaId> dpsi = delta.context;
            dpsi.push_back(psi);
            bool cut_r = prove(logic, make_sequent(std::move(dpsi), phi)).provable;
            if (cut_l && cut_r) {
                ++rep.counters["cut_fired"];
                std::vector<FormulaId> both = gamma.context;
                both.insert(both.end(), delta.context.begin(), delta.context.end());
                if (!prove(logic, make_sequent(std::move(both), phi)).provable)
                    record_failure(rep, std::string("T ") + logic_name(logic) + ": " + render(gamma));
            }
            // deduction theorem
            std::vector<FormulaId> with_phi = gamma.context;
            with_phi.push_back(phi);
            bool l = prove(logic, make_sequent(std::move(with_phi), psi)).provable;
            bool r = prove(logic, Sequent{gamma.context, imp(phi, psi)}).provable;
            if (l != r)
                record_failure(rep, std::string("ded ") + logic_name(logic) + ": " + render(gamma));
        }
        // tower monotonicity: positive => minimal => intuitionistic => classical
        bool v[4];
        for (int k = 0; k < 4; ++k) v[k] = prove(kLogics[k], gamma).provable;
        for (int k = 0; k < 3; ++k)
            if (v[k] && !v[k + 1]) {
                record_failure(rep, std::string("tower ") + logic_name(kLogics[k + 1]) + ": " +
                                        render(gamma));
                break;
            }
        rep.counters["tower_provable_positive"] += v[0];
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Abstract-side campaigns.

EntailmentSystem random_system(std::mt19937_64& rng, int max_carrier, int max_axioms, int max_rules,
                               int max_premises) {
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    int n = 1 + pick(max_carrier);
    SubsetMask all = (SubsetMask{1} << n) - 1;
    EntailmentSystem sys;
    for (int i = 0; i < n; ++i) sys.carrier.push_back("e" + std::to_string(i));
    int na = pick(max_axioms + 1);
    for (int i = 0; i < na; ++i)
        sys.axioms.push_back({static_cast<SubsetMask>(rng()) & all, pick(n)});
    int nr = pick(max_rules + 1);
    for (int i = 0; i < nr; ++i) {
        RuleInstance r;
        int np = 1 + pick(max_premises);
        for (int p = 0; p < np; ++p)
            r.premises.push_back({static_cast<SubsetMask>(rng()) & all, pick(n)});
        r.conclusion = {static_cast<SubsetMask>(rng()) & all, pick(n)};
        sys.rules.push_back(std::move(r));
    }
    return sys;
}

std::optional<NucleusMap> random_nucleus(std::mt19937_64& rng, const EntailmentRelation& rel,
                                         int attempts) {
    int n = rel.carrier_size();
    // Candidate images satisfy Rj by construction; Lj is filtered.
    std::vector<std::vector<Element>> candidates(n);
    for (Element b = 0; b < n; ++b)
        for (Element a = 0; a < n; ++a)
            if (rel.entails(SubsetMask{1} << b, a)) candidates[b].push_back(a);
    for (int t = 0; t < attempts; ++t) {
        NucleusMap j(n);
        for (Element b = 0; b < n; ++b)
            j[b] = candidates[b][rng() % candidates[b].size()];
        if (check_nucleus(rel, j).is_nucleus()) return j;
    }
    return std::nullopt;
}

namespace {

struct Trial {
    EntailmentSystem sys;
    EntailmentRelation rel{0};
    NucleusMap j;
};

Trial draw_trial(std::mt19937_64& rng, HarnessReport& rep, int max_rules) {
    while (true) {
        ++rep.counters["systems_drawn"];
        EntailmentSystem sys = random_system(rng, 6, 4, max_rules, 3);
        EntailmentRelation rel = saturate(sys);
        if (auto j = random_nucleus(rng, rel))
            return {std::move(sys), std::move(rel), std::move(*j)};
        ++rep.counters["nucleus_rejected"];
    }
}

std::string describe(const EntailmentSystem& sys, const NucleusMap& j) {
    return system_to_json(sys, &j).dump();
}

}  // namespace

HarnessReport run_conservation_campaign(int trials, std::uint64_t seed) {
    HarnessReport rep{.check = "conservation", .seed = seed, .samples = trials};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trial tr = draw_trial(rng, rep, 3);
        if (!tr.rel.is_closed_entailment()) {
            record_failure(rep, "closure: " + describe(tr.sys, tr.j));
            continue;
        }
        ConservationReport c = conservation_report(tr.sys, tr.j);
        rep.counters["equal"] += c.equal;
        rep.counters["compatible"] += c.all_rules_compatible;
        if (!c.weak_subset_strong)
            record_failure(rep, "weak_not_subset: " + describe(tr.sys, tr.j));
        else if (!c.biconditional_ok)
            record_failure(rep, "biconditional: " + describe(tr.sys, tr.j));
    }
    return rep;
}

HarnessReport run_axiom_only_campaign(int trials, std::uint64_t seed) {
    HarnessReport rep{.check = "axiom_only", .seed = seed, .samples = trials};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trial tr = draw_trial(rng, rep, 0);
        ConservationReport c = conservation_report(tr.sys, tr.j);
        if (!c.equal) record_failure(rep, describe(tr.sys, tr.j));
    }
    return rep;
}

HarnessReport run_intermediate_campaign(int trials, std::uint64_t seed) {
    HarnessReport rep{.check = "intermediate", .seed = seed, .samples = trials};
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Trial tr = draw_trial(rng, rep, 3);
        EntailmentRelation strong = strong_extension(tr.sys, tr.j);
        int n = tr.sys.size();
        SubsetMask all = (SubsetMask{1} << n) - 1;
        EntailmentSystem ext = tr.sys;
        int stars = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < stars; ++k) {
            // a pair valid in the strong extension: a generator plus noise
            Element a = static_cast<Element>(rng() % n);
            const auto& gens = strong.generators(a);
            SubsetMask base = gens[rng() % gens.size()];
            ext.axioms.push_back({base | (static_cast<SubsetMask>(rng()) & all), a});
        }
        EntailmentRelation strong2 = strong_extension(ext, tr.j);
        if (!(strong2 == strong)) record_failure(rep, describe(tr.sys, tr.j));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Locale sweep.

namespace {

// All meet-semilattice tables with a top on n labeled elements, built from
// the symmetric idempotent candidates and filtered by validation.
std::vector<MeetSemilattice> enumerate_lattices(int n) {
    std::vector<MeetSemilattice> out;
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) cells.emplace_back(a, b);
    std::vector<int> digit(cells.size(), 0);
    while (true) {
        MeetSemilattice lat;
        lat.n = n;
        lat.meet.assign(n * n, 0);
        for (int a = 0; a < n; ++a) lat.meet[a * n + a] = a;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto [a, b] = cells[i];
            lat.meet[a * n + b] = digit[i];
            lat.meet[b * n + a] = digit[i];
        }
        // cheap associativity prefilter before the full validation
        bool assoc = true;
        for (int a = 0; a < n && assoc; ++a)
            for (int b = a; b < n && assoc; ++b)
                for (int c = b; c < n && assoc; ++c)
                    assoc = lat.meet[lat.meet[a * n + b] * n + c] ==
                            lat.meet[a * n + lat.meet[b * n + c]];
        if (assoc)
            for (int t = 0; t < n; ++t) {
                lat.top = t;
                try {
                    (void)lattice_relation(lat);  // validates
                    out.push_back(lat);
                    break;  // the unit is unique
                } catch (const NotALattice&) {
                }
            }
        std::size_t i = 0;
        for (; i < cells.size(); ++i) {
            if (++digit[i] < n) break;
            digit[i] = 0;
        }
        if (i == cells.size()) break;
    }
    return out;
}

}  // namespace

HarnessReport run_locale_sweep() {
    HarnessReport rep{.check = "locale_sweep"};
    for (int n = 1; n <= 5; ++n) {
        for (const MeetSemilattice& lat : enumerate_lattices(n)) {
            ++rep.counters["lattices"];
            EntailmentRelation rel = lattice_relation(lat);
            auto m = [&](Element a, Element b) { return lat.meet[a * n + b]; };
            auto leq = [&](Element a, Element b) { return m(a, b) == a; };
            NucleusMap j(n, 0);
            while (true) {
                ++rep.samples;
                bool ent = check_nucleus(rel, j).is_nucleus();
                bool loc = true;
                for (Element a = 0; a < n && loc; ++a) loc = leq(a, j[a]);
                for (Element a = 0; a < n && loc; ++a)
                    for (Element b = 0; b < n && loc; ++b) {
                        loc = leq(m(j[a], j[b]), j[m(a, b)]);
                        if (loc && leq(a, j[b])) loc = leq(j[a], j[b]);
                    }
                rep.counters["nuclei"] += loc;
                if (ent != loc)
                    record_failure(rep, "lattice n=" + std::to_string(n));
                int i = 0;
                for (; i < n; ++i) {
                    if (++j[i] < n) break;
                    j[i] = 0;
                }
                if (i == n) break;
            }
        }
    }
    return rep;
}

}  // namespace entail
