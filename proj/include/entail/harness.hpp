#pragma once

// Seeded randomized campaigns: the logic-side conservation checks and the
// brute-force verification of the abstract conservation theorem.  All runs
// are deterministic for a fixed seed; reports serialize to JSON.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "entail/entailment.hpp"
#include "entail/formula.hpp"
#include "json.hpp"

namespace entail {

struct HarnessReport {
    std::string check;
    std::uint64_t seed = 0;
    int samples = 0;
    int failures = 0;
    std::map<std::string, std::int64_t> counters;
    std::vector<std::string> failure_samples;  // rendered sequents / systems, capped

    bool ok() const { return failures == 0; }
    nlohmann::ordered_json to_json() const;
};

// Logic-side campaigns.  Sample shapes: <=4 atoms, goal <=8 connectives,
// context <=3 formulas of <=5 connectives, unless noted.
HarnessReport run_glivenko_campaign(int samples, std::uint64_t seed);
HarnessReport run_df_campaign(int samples, std::uint64_t seed);
HarnessReport run_peirce_campaign(int samples, std::uint64_t seed);        // formulas, 3 atoms, <=6 conn
HarnessReport run_deduction_campaign(int samples, std::uint64_t seed);     // cycles the four logics
// (R)/(M)/(T), tower monotonicity and the deduction theorem for all four provers.
HarnessReport run_logic_laws_campaign(int samples, std::uint64_t seed);

// Abstract-side campaigns over random finite systems (carrier <= 6,
// <=4 axioms, <=3 rule instances, 1..3 premises each) with random nucleus
// maps filtered through check_nucleus.
EntailmentSystem random_system(std::mt19937_64& rng, int max_carrier = 6, int max_axioms = 4,
                               int max_rules = 3, int max_premises = 3);
std::optional<NucleusMap> random_nucleus(std::mt19937_64& rng, const EntailmentRelation& rel,
                                         int attempts = 24);

// Theorem brute force: weak subset of strong, and equality iff all
// non-axiom rule instances compatible; also closure of every saturation.
HarnessReport run_conservation_campaign(int trials, std::uint64_t seed);
// Axiom-only corollary: weak == strong with no rules present.
HarnessReport run_axiom_only_campaign(int trials, std::uint64_t seed);
// Intermediate extensions: adding axioms valid in the strong extension
// leaves the strong extension unchanged.
HarnessReport run_intermediate_campaign(int trials, std::uint64_t seed);
// Locale sweep: entailment-nucleus verdict == locale-nucleus verdict for
// every self-map on every enumerated meet-semilattice of size <= 5.
HarnessReport run_locale_sweep();

}  // namespace entail
