#pragma once

// Abstract finite-carrier machinery: saturation of entailment relations
// from axioms and rule instances, nucleus validation, weak/strong
// j-extensions, and the conservation checks.
//
// Subsets of the carrier are bitmasks; the carrier is capped at
// kMaxCarrier elements so the exhaustive 2^n sweeps stay cheap.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entail/errors.hpp"
#include "json.hpp"

namespace entail {

using Element = int;
using SubsetMask = std::uint32_t;

inline constexpr int kMaxCarrier = 14;

struct AxiomInst {
    SubsetMask from = 0;
    Element to = 0;
    bool operator==(const AxiomInst&) const = default;
};

struct RuleInstance {
    std::vector<AxiomInst> premises;  // at least one; zero-premise instances are axioms
    AxiomInst conclusion;
    bool operator==(const RuleInstance&) const = default;
};

struct EntailmentSystem {
    std::vector<std::string> carrier;
    std::vector<AxiomInst> axioms;
    std::vector<RuleInstance> rules;

    int size() const { return static_cast<int>(carrier.size()); }
    // Throws std::invalid_argument on out-of-range references or
    // premise-free rule instances; throws CarrierTooLarge past the cap.
    void validate() const;
};

// j as a total self-map on the carrier.
using NucleusMap = std::vector<Element>;

// Upward-closed family per element, stored as the antichain of its minimal
// generator subsets.  Immutable once saturated.
class EntailmentRelation {
  public:
    explicit EntailmentRelation(int carrier_size);

    int carrier_size() const { return n_; }
    bool entails(SubsetMask u, Element a) const;
    const std::vector<SubsetMask>& generators(Element a) const { return gens_[a]; }

    // Inserts a generator, keeping the antichain invariant.  Returns true
    // if the family actually grew.
    bool insert(SubsetMask u, Element a);

    void canonicalize();  // sorts generator lists, enabling ==
    bool operator==(const EntailmentRelation&) const = default;

    // Every generator pair of *this holds in `other`.
    bool subset_of(const EntailmentRelation& other) const;

    // (R) plus closure under the generator-level cut step and antichain
    // integrity; extensional (M) is built into `entails`.
    bool is_closed_entailment() const;

  private:
    int n_;
    std::vector<std::vector<SubsetMask>> gens_;
};

// Least relation containing the axioms, closed under (R), (M), (T) and all
// rule instances; monotone fixpoint over the generator antichains.
EntailmentRelation saturate(const EntailmentSystem& sys);

struct NucleusReport {
    bool rj_ok = true;
    bool lj_ok = true;
    std::vector<Element> rj_violations;                          // b with {b} |> j(b) failing
    std::vector<std::array<int, 3>> lj_violations;               // (U mask, a, b), capped
    bool is_nucleus() const { return rj_ok && lj_ok; }
};

NucleusReport check_nucleus(const EntailmentRelation& rel, const NucleusMap& j);

// U |>_j a  iff  U |> j(a).  Throws NotANucleus when check_nucleus fails;
// asserts (R)/(T) closure of the result.
EntailmentRelation weak_extension(const EntailmentRelation& rel, const NucleusMap& j);

// Saturation of sys extended by the stability axioms {j(a)} |> a.
EntailmentRelation strong_extension(const EntailmentSystem& sys, const NucleusMap& j);

// Without j: premises all hold => conclusion holds.  With j: the same read
// in the weak extension (compatibility of the instance with j).
bool rule_holds(const EntailmentRelation& rel, const RuleInstance& r,
                const NucleusMap* j = nullptr);

struct ConservationReport {
    bool weak_subset_strong = false;
    bool equal = false;
    bool all_rules_compatible = false;
    bool biconditional_ok = false;
};

ConservationReport conservation_report(const EntailmentSystem& sys, const NucleusMap& j);

// ---------------------------------------------------------------------------
// Substructure systems (algebras) and locales.

struct Operation {
    std::string name;
    int arity = 0;
    // table[i] for the tuple (t_0,...,t_{k-1}) with i = sum t_d * n^d.
    std::vector<Element> table;
};

struct Algebra {
    std::vector<std::string> carrier;
    std::vector<Operation> ops;  // should normally include the designated j
    NucleusMap j;
};

// Axioms a_1,...,a_k |> f(a_1,...,a_k) for every operation and tuple.
std::pair<EntailmentSystem, NucleusMap> substructure_system(const Algebra& alg);

struct MeetSemilattice {
    int n = 0;
    std::vector<Element> meet;  // meet[a * n + b]
    Element top = 0;
};

struct LocaleReport {
    bool entailment_nucleus = false;
    bool locale_nucleus = false;
    bool agree = false;
};

// Compares the two notions of nucleus on the entailment relation
// U |> a iff meet(U) <= a.  Throws NotALattice on a malformed table.
LocaleReport check_locale_nucleus(const MeetSemilattice& lat, const NucleusMap& j);

// Entailment relation of a validated meet-semilattice (meet(empty) = top).
EntailmentRelation lattice_relation(const MeetSemilattice& lat);

// ---------------------------------------------------------------------------
// JSON system format:
//   {"carrier": ["a","b"],
//    "axioms": [{"from": ["a"], "to": "b"}],
//    "rules": [{"premises": [...], "conclusion": {...}}],
//    "nucleus": {"a": "b", ...}}   (nucleus optional)

struct SystemFile {
    EntailmentSystem sys;
    std::optional<NucleusMap> nucleus;
};

SystemFile system_from_json(const nlohmann::json& j);
nlohmann::ordered_json system_to_json(const EntailmentSystem& sys,
                                      const NucleusMap* nucleus = nullptr);

}  // namespace entail
