#include "entail/entailment.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace entail {

namespace {
constexpr std::size_t kMaxStoredViolations = 16;

SubsetMask bit(Element a) { return SubsetMask{1} << a; }
}  // namespace

void EntailmentSystem::validate() const {
    int n = size();
    if (n > kMaxCarrier)
        throw CarrierTooLarge("carrier size " + std::to_string(n) + " exceeds " +
                              std::to_string(kMaxCarrier));
    SubsetMask all = n == 0 ? 0 : (SubsetMask{1} << n) - 1;
    auto check = [&](const AxiomInst& ax) {
        if ((ax.from & ~all) != 0 || ax.to < 0 || ax.to >= n)
            throw std::invalid_argument("axiom/rule references element outside carrier");
    };
    for (const auto& ax : axioms) check(ax);
    for (const auto& r : rules) {
        if (r.premises.empty())
            throw std::invalid_argument("rule instance without premises; register it as an axiom");
        for (const auto& p : r.premises) check(p);
        check(r.conclusion);
    }
}

EntailmentRelation::EntailmentRelation(int carrier_size) : n_(carrier_size), gens_(carrier_size) {}

bool EntailmentRelation::entails(SubsetMask u, Element a) const {
    for (SubsetMask g : gens_[a])
        if ((g & ~u) == 0) return true;
    return false;
}

bool EntailmentRelation::insert(SubsetMask u, Element a) {
    auto& g = gens_[a];
    for (SubsetMask m : g)
        if ((m & ~u) == 0) return false;  // subsumed by a smaller generator
    std::erase_if(g, [&](SubsetMask m) { return (u & ~m) == 0; });  // drop supersets
    g.push_back(u);
    return true;
}

void EntailmentRelation::canonicalize() {
    for (auto& g : gens_) std::sort(g.begin(), g.end());
}

bool EntailmentRelation::subset_of(const EntailmentRelation& other) const {
    for (Element a = 0; a < n_; ++a)
        for (SubsetMask u : gens_[a])
            if (!other.entails(u, a)) return false;
    return true;
}

bool EntailmentRelation::is_closed_entailment() const {
    for (Element a = 0; a < n_; ++a) {
        if (!entails(bit(a), a)) return false;  // (R)
        for (std::size_t i = 0; i < gens_[a].size(); ++i)
            for (std::size_t k = i + 1; k < gens_[a].size(); ++k) {
                SubsetMask x = gens_[a][i], y = gens_[a][k];
                if ((x & ~y) == 0 || (y & ~x) == 0) return false;  // antichain broken
            }
    }
    // (T) at the generator level: V |> b and W |> a with b in W give
    // V u (W \ {b}) |> a.
    for (Element a = 0; a < n_; ++a)
        for (SubsetMask w : gens_[a])
            for (Element b = 0; b < n_; ++b) {
                if (!((w >> b) & 1u)) continue;
                for (SubsetMask v : gens_[b])
                    if (!entails(v | (w & ~bit(b)), a)) return false;
            }
    return true;
}

EntailmentRelation saturate(const EntailmentSystem& sys) {
    sys.validate();
    int n = sys.size();
    EntailmentRelation rel(n);
    for (Element a = 0; a < n; ++a) rel.insert(bit(a), a);
    for (const auto& ax : sys.axioms) rel.insert(ax.from, ax.to);

    bool changed = true;
    while (changed) {
        changed = false;
        // cut step over generator snapshots
        for (Element a = 0; a < n; ++a) {
            auto ws = rel.generators(a);  // copy: insertions may reshuffle
            for (SubsetMask w : ws)
                for (Element b = 0; b < n; ++b) {
                    if (!((w >> b) & 1u)) continue;
                    auto vs = rel.generators(b);
                    for (SubsetMask v : vs)
                        changed |= rel.insert(v | (w & ~bit(b)), a);
                }
        }
        for (const auto& r : sys.rules) {
            bool fire = true;
            for (const auto& p : r.premises)
                if (!rel.entails(p.from, p.to)) {
                    fire = false;
                    break;
                }
            if (fire) changed |= rel.insert(r.conclusion.from, r.conclusion.to);
        }
    }
    rel.canonicalize();
    return rel;
}

NucleusReport check_nucleus(const EntailmentRelation& rel, const NucleusMap& j) {
    int n = rel.carrier_size();
    if (static_cast<int>(j.size()) != n) throw std::invalid_argument("nucleus map size mismatch");
    for (Element a : j)
        if (a < 0 || a >= n) throw std::invalid_argument("nucleus map out of range");
    NucleusReport rep;
    for (Element b = 0; b < n; ++b)
        if (!rel.entails(bit(b), j[b])) {
            rep.rj_ok = false;
            if (rep.rj_violations.size() < kMaxStoredViolations) rep.rj_violations.push_back(b);
        }
    SubsetMask all = (SubsetMask{1} << n) - 1;
    for (SubsetMask u = 0; u <= all; ++u)
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                if (rel.entails(u | bit(a), j[b]) && !rel.entails(u | bit(j[a]), j[b])) {
                    rep.lj_ok = false;
                    if (rep.lj_violations.size() < kMaxStoredViolations)
                        rep.lj_violations.push_back({static_cast<int>(u), a, b});
                }
            }
    return rep;
}

EntailmentRelation weak_extension(const EntailmentRelation& rel, const NucleusMap& j) {
    if (!check_nucleus(rel, j).is_nucleus()) throw NotANucleus("map fails Rj or Lj");
    int n = rel.carrier_size();
    EntailmentRelation out(n);
    for (Element a = 0; a < n; ++a)
        for (SubsetMask u : rel.generators(j[a])) out.insert(u, a);
    out.canonicalize();
    if (n <= 12 && !out.is_closed_entailment())
        throw std::logic_error("weak extension is not an entailment relation");
    return out;
}

EntailmentRelation strong_extension(const EntailmentSystem& sys, const NucleusMap& j) {
    EntailmentSystem ext = sys;
    for (Element a = 0; a < sys.size(); ++a)
        ext.axioms.push_back({bit(j[a]), a});  // stability
    return saturate(ext);
}

bool rule_holds(const EntailmentRelation& rel, const RuleInstance& r, const NucleusMap* j) {
    auto holds = [&](const AxiomInst& p) {
        return j ? rel.entails(p.from, (*j)[p.to]) : rel.entails(p.from, p.to);
    };
    for (const auto& p : r.premises)
        if (!holds(p)) return true;  // vacuous
    return holds(r.conclusion);
}

ConservationReport conservation_report(const EntailmentSystem& sys, const NucleusMap& j) {
    EntailmentRelation rel = saturate(sys);
    if (!check_nucleus(rel, j).is_nucleus()) throw NotANucleus("map fails Rj or Lj");
    EntailmentRelation weak = weak_extension(rel, j);
    EntailmentRelation strong = strong_extension(sys, j);
    ConservationReport rep;
    rep.weak_subset_strong = weak.subset_of(strong);
    rep.equal = rep.weak_subset_strong && strong.subset_of(weak);
    rep.all_rules_compatible = true;
    for (const auto& r : sys.rules)
        rep.all_rules_compatible = rep.all_rules_compatible && rule_holds(rel, r, &j);
    rep.biconditional_ok = (rep.equal == rep.all_rules_compatible);
    return rep;
}

// ---------------------------------------------------------------------------

std::pair<EntailmentSystem, NucleusMap> substructure_system(const Algebra& alg) {
    int n = static_cast<int>(alg.carrier.size());
    if (n > kMaxCarrier) throw CarrierTooLarge("carrier too large");
    EntailmentSystem sys;
    sys.carrier = alg.carrier;
    for (const auto& op : alg.ops) {
        if (op.arity < 0 || op.arity > 4) throw std::invalid_argument("unsupported arity");
        std::size_t count = 1;
        for (int d = 0; d < op.arity; ++d) count *= n;
        if (op.table.size() != count) throw std::invalid_argument("operation table size mismatch");
        for (std::size_t i = 0; i < count; ++i) {
            SubsetMask from = 0;
            std::size_t t = i;
            for (int d = 0; d < op.arity; ++d) {
                from |= bit(static_cast<Element>(t % n));
                t /= n;
            }
            sys.axioms.push_back({from, op.table[i]});
        }
    }
    sys.validate();
    return {sys, alg.j};
}

namespace {
void validate_lattice(const MeetSemilattice& lat) {
    int n = lat.n;
    if (n < 1 || static_cast<int>(lat.meet.size()) != n * n || lat.top < 0 || lat.top >= n)
        throw NotALattice("bad table shape");
    auto m = [&](Element a, Element b) { return lat.meet[a * n + b]; };
    for (Element a = 0; a < n; ++a) {
        if (m(a, a) != a) throw NotALattice("meet not idempotent");
        if (m(a, lat.top) != a || m(lat.top, a) != a) throw NotALattice("top is not a unit");
        for (Element b = 0; b < n; ++b) {
            Element ab = m(a, b);
            if (ab < 0 || ab >= n) throw NotALattice("meet out of range");
            if (ab != m(b, a)) throw NotALattice("meet not commutative");
            for (Element c = 0; c < n; ++c)
                if (m(ab, c) != m(a, m(b, c))) throw NotALattice("meet not associative");
        }
    }
}
}  // namespace

EntailmentRelation lattice_relation(const MeetSemilattice& lat) {
    validate_lattice(lat);
    int n = lat.n;
    auto m = [&](Element a, Element b) { return lat.meet[a * n + b]; };
    auto leq = [&](Element a, Element b) { return m(a, b) == a; };
    EntailmentRelation rel(n);
    SubsetMask all = (SubsetMask{1} << n) - 1;
    for (SubsetMask u = 0; u <= all; ++u) {
        Element inf = lat.top;
        for (Element e = 0; e < n; ++e)
            if ((u >> e) & 1u) inf = m(inf, e);
        for (Element a = 0; a < n; ++a)
            if (leq(inf, a)) rel.insert(u, a);
    }
    rel.canonicalize();
    return rel;
}

LocaleReport check_locale_nucleus(const MeetSemilattice& lat, const NucleusMap& j) {
    validate_lattice(lat);
    int n = lat.n;
    if (static_cast<int>(j.size()) != n) throw std::invalid_argument("nucleus map size mismatch");
    auto m = [&](Element a, Element b) { return lat.meet[a * n + b]; };
    auto leq = [&](Element a, Element b) { return m(a, b) == a; };

    LocaleReport rep;
    rep.entailment_nucleus = check_nucleus(lattice_relation(lat), j).is_nucleus();

    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = leq(a, j[a]);                  // inflationary
    for (Element a = 0; a < n && ok; ++a)
        for (Element b = 0; b < n && ok; ++b) {
            ok = leq(m(j[a], j[b]), j[m(a, b)]);                               // (4)
            if (ok && leq(a, j[b])) ok = leq(j[a], j[b]);                      // (5)
        }
    rep.locale_nucleus = ok;
    rep.agree = (rep.entailment_nucleus == rep.locale_nucleus);
    return rep;
}

// ---------------------------------------------------------------------------
// JSON.

namespace {

Element element_index(const std::vector<std::string>& carrier, const std::string& name) {
    auto it = std::find(carrier.begin(), carrier.end(), name);
    if (it == carrier.end()) throw std::invalid_argument("unknown carrier element: " + name);
    return static_cast<Element>(it - carrier.begin());
}

AxiomInst axiom_from_json(const std::vector<std::string>& carrier, const nlohmann::json& j) {
    AxiomInst ax;
    for (const auto& e : j.at("from")) ax.from |= SubsetMask{1} << element_index(carrier, e);
    ax.to = element_index(carrier, j.at("to"));
    return ax;
}

nlohmann::ordered_json axiom_to_json(const std::vector<std::string>& carrier, const AxiomInst& ax) {
    nlohmann::ordered_json j;
    std::vector<std::string> from;
    for (Element e = 0; e < static_cast<Element>(carrier.size()); ++e)
        if ((ax.from >> e) & 1u) from.push_back(carrier[e]);
    j["from"] = from;
    j["to"] = carrier[ax.to];
    return j;
}

}  // namespace

SystemFile system_from_json(const nlohmann::json& j) {
    SystemFile out;
    for (const auto& e : j.at("carrier")) out.sys.carrier.push_back(e.get<std::string>());
    if (j.contains("axioms"))
        for (const auto& a : j["axioms"]) out.sys.axioms.push_back(axiom_from_json(out.sys.carrier, a));
    if (j.contains("rules"))
        for (const auto& r : j["rules"]) {
            RuleInstance ri;
            for (const auto& p : r.at("premises"))
                ri.premises.push_back(axiom_from_json(out.sys.carrier, p));
            ri.conclusion = axiom_from_json(out.sys.carrier, r.at("conclusion"));
            out.sys.rules.push_back(std::move(ri));
        }
    out.sys.validate();
    if (j.contains("nucleus")) {
        NucleusMap nm(out.sys.carrier.size());
        for (std::size_t i = 0; i < out.sys.carrier.size(); ++i) {
            const std::string& name = out.sys.carrier[i];
            nm[i] = element_index(out.sys.carrier, j["nucleus"].at(name).get<std::string>());
        }
        out.nucleus = std::move(nm);
    }
    return out;
}

nlohmann::ordered_json system_to_json(const EntailmentSystem& sys, const NucleusMap* nucleus) {
    nlohmann::ordered_json j;
    j["carrier"] = sys.carrier;
    nlohmann::ordered_json axs = nlohmann::ordered_json::array();
    for (const auto& ax : sys.axioms) axs.push_back(axiom_to_json(sys.carrier, ax));
    j["axioms"] = axs;
    nlohmann::ordered_json rules = nlohmann::ordered_json::array();
    for (const auto& r : sys.rules) {
        nlohmann::ordered_json rj;
        nlohmann::ordered_json prems = nlohmann::ordered_json::array();
        for (const auto& p : r.premises) prems.push_back(axiom_to_json(sys.carrier, p));
        rj["premises"] = prems;
        rj["conclusion"] = axiom_to_json(sys.carrier, r.conclusion);
        rules.push_back(rj);
    }
    j["rules"] = rules;
    if (nucleus) {
        nlohmann::ordered_json nj;
        for (std::size_t i = 0; i < sys.carrier.size(); ++i)
            nj[sys.carrier[i]] = sys.carrier[(*nucleus)[i]];
        j["nucleus"] = nj;
    }
    return j;
}

}  // namespace entail
