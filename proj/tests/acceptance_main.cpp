// Acceptance suite: one test case per criterion, each printing a single
// [PASS]/[FAIL] line.  Seeds and budgets are pinned so reruns are
// reproducible bit for bit.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>
#include <cstdio>
#include <unordered_map>

#include "doctest.h"
#include "entail/calculus.hpp"
#include "entail/entailment.hpp"
#include "entail/harness.hpp"
#include "entail/nucleus_logic.hpp"
#include "entail/semantics.hpp"

using namespace entail;

namespace {

constexpr std::uint64_t kSeed = 20260823;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int num, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", num, what, detail.c_str());
    std::fflush(stdout);
    CHECK_MESSAGE(ok, "criterion ", num, ": ", what, " -- ", detail);
}

std::string stats(const HarnessReport& r, double secs) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d samples, %d failures, seed %llu, %.1f s", r.samples,
                  r.failures, static_cast<unsigned long long>(r.seed), secs);
    return buf;
}

Sequent seq(const std::string& text) {
    auto r = parse_sequent(text);
    REQUIRE(std::holds_alternative<Sequent>(r));
    return std::get<Sequent>(r);
}

}  // namespace

TEST_CASE("criterion 1") {
    Timer t;
    HarnessReport r = run_glivenko_campaign(10000, kSeed);
    double secs = t.seconds();
    report(1, "Glivenko: classical validity == intuitionistic double-negation provability",
           r.ok() && secs <= 60.0, stats(r, secs));
}

TEST_CASE("criterion 2") {
    bool minimal_unprovable = !prove(LogicId::Minimal, seq("|- (F -> q) | F")).provable;
    auto cm = find_countermodel(seq("|- (F -> q) | F"), SemanticsMode::MinimalOrPositive, 2);
    bool counter_ok = cm.has_value() && cm->world_count <= 2;
    bool int_provable = prove(LogicId::Intuitionistic, seq("|- F -> q")).provable;
    bool ok = minimal_unprovable && counter_ok && int_provable;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "minimal unprovable=%d, countermodel<=2 worlds=%d, intuitionistic provable=%d",
                  minimal_unprovable, counter_ok, int_provable);
    report(2, "exact separating witness for the closed nucleus", ok, buf);
}

TEST_CASE("criterion 3") {
    Timer t;
    HarnessReport r = run_conservation_campaign(10000, kSeed);
    double secs = t.seconds();
    report(3, "conservation theorem brute force: weak subset strong, equality iff compatible",
           r.ok() && secs <= 120.0, stats(r, secs));
}

TEST_CASE("criterion 4") {
    Timer t;
    HarnessReport r = run_axiom_only_campaign(2000, kSeed);
    report(4, "axiom-only systems: weak extension == strong extension", r.ok(),
           stats(r, t.seconds()));
}

TEST_CASE("criterion 5") {
    Timer t;
    HarnessReport r = run_intermediate_campaign(1000, kSeed);
    report(5, "intermediate extensions leave the strong extension fixed", r.ok(),
           stats(r, t.seconds()));
}

TEST_CASE("criterion 6") {
    Timer t;
    // all goals of tree size <= 5 over leaves {p, q, T, F}
    std::vector<std::vector<FormulaId>> by_size(6);
    by_size[1] = {atom("p"), atom("q"), top(), bot()};
    for (int sz = 2; sz <= 5; ++sz) {
        for (FormulaId f : by_size[sz - 1]) by_size[sz].push_back(neg(f));
        for (int ls = 1; ls < sz - 1; ++ls)
            for (FormulaId l : by_size[ls])
                for (FormulaId r : by_size[sz - 1 - ls]) {
                    by_size[sz].push_back(conj(l, r));
                    by_size[sz].push_back(disj(l, r));
                    by_size[sz].push_back(imp(l, r));
                }
    }
    std::vector<FormulaId> formulas;
    for (int sz = 1; sz <= 5; ++sz)
        formulas.insert(formulas.end(), by_size[sz].begin(), by_size[sz].end());
    int nf = static_cast<int>(formulas.size());

    // contexts: all subsets of {p, q, ~p}
    const FormulaId ctx_pool[3] = {atom("p"), atom("q"), neg(atom("p"))};
    std::vector<std::vector<FormulaId>> contexts(8);
    for (int c = 0; c < 8; ++c)
        for (int k = 0; k < 3; ++k)
            if ((c >> k) & 1) contexts[c].push_back(ctx_pool[k]);

    std::vector<std::array<bool, 8>> proved(nf), refuted(nf);
    for (int i = 0; i < nf; ++i)
        for (int c = 0; c < 8; ++c) {
            proved[i][c] = prove(LogicId::Intuitionistic, make_sequent(contexts[c], formulas[i])).provable;
            refuted[i][c] = false;
        }

    const std::unordered_map<FormulaId, int> idx{{atom("p"), 0}, {atom("q"), 1}};
    long models = 0;
    for_each_model(2, 4, [&](const SmallModel& m) {
        ++models;
        std::unordered_map<FormulaId, std::uint8_t> memo;
        std::uint8_t full = static_cast<std::uint8_t>((1u << m.world_count) - 1);
        std::uint8_t ctx_mask[8];
        for (int c = 0; c < 8; ++c) {
            std::uint8_t cm = full;
            for (FormulaId f : contexts[c])
                cm &= forcing_mask(m, f, idx, SemanticsMode::Intuitionistic, memo);
            ctx_mask[c] = cm;
        }
        for (int i = 0; i < nf; ++i) {
            std::uint8_t fm = forcing_mask(m, formulas[i], idx, SemanticsMode::Intuitionistic, memo);
            for (int c = 0; c < 8; ++c)
                if (ctx_mask[c] & static_cast<std::uint8_t>(~fm)) refuted[i][c] = true;
        }
        return false;
    });

    int disagreements = 0;
    for (int i = 0; i < nf; ++i)
        for (int c = 0; c < 8; ++c)
            if (proved[i][c] == refuted[i][c]) {
                ++disagreements;
                if (disagreements <= 3)
                    MESSAGE("disagreement: ", render(make_sequent(contexts[c], formulas[i])));
            }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d sequents, %ld models, %d disagreements, %.1f s", nf * 8,
                  models, disagreements, t.seconds());
    report(6, "exhaustive size<=5 prover verdicts match Kripke enumeration (max 4 worlds)",
           disagreements == 0, buf);
}

TEST_CASE("criterion 7") {
    Timer t;
    HarnessReport r = run_deduction_campaign(5000, kSeed);
    report(7, "deduction nucleus check across all four logics", r.ok(), stats(r, t.seconds()));
}

TEST_CASE("criterion 8") {
    Timer t;
    HarnessReport r = run_peirce_campaign(1000, kSeed);
    report(8, "Peirce nucleus pointwise equivalent to Glivenko", r.ok(), stats(r, t.seconds()));
}

TEST_CASE("criterion 9") {
    Timer t;
    HarnessReport r = run_locale_sweep();
    bool enough = r.counters["lattices"] >= 50;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%lld lattices, %d self-maps, %d disagreements, %.1f s",
                  static_cast<long long>(r.counters["lattices"]), r.samples, r.failures,
                  t.seconds());
    report(9, "locale-nucleus and entailment-nucleus verdicts coincide", r.ok() && enough, buf);
}

TEST_CASE("criterion 10") {
    Timer t;
    HarnessReport laws = run_logic_laws_campaign(10000, kSeed);
    // closure of saturate output, re-checked directly on fresh random systems
    std::mt19937_64 rng(kSeed);
    int closure_failures = 0;
    for (int i = 0; i < 500; ++i)
        if (!saturate(random_system(rng)).is_closed_entailment()) ++closure_failures;
    bool ok = laws.ok() && closure_failures == 0;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%d law samples, %d failures; 500 saturations, %d not closed, %.1f s",
                  laws.samples, laws.failures, closure_failures, t.seconds());
    report(10, "entailment laws (R)/(M)/(T) for the provers and closure of saturation", ok, buf);
}
