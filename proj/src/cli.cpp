#include "entail/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "entail/calculus.hpp"
#include "entail/entailment.hpp"
#include "entail/harness.hpp"
#include "entail/nucleus_logic.hpp"
#include "entail/semantics.hpp"
#include "json.hpp"

namespace entail {

namespace {

std::optional<LogicId> logic_from_flag(const std::string& s) {
    if (s == "p" || s == "positive") return LogicId::Positive;
    if (s == "m" || s == "minimal") return LogicId::Minimal;
    if (s == "i" || s == "intuitionistic") return LogicId::Intuitionistic;
    if (s == "c" || s == "classical") return LogicId::Classical;
    return std::nullopt;
}

std::optional<LogicalNucleus> nucleus_from_flag(const std::string& s, std::ostream& err) {
    if (s == "glivenko") return LogicalNucleus::glivenko();
    if (s == "peirce") return LogicalNucleus::peirce();
    if (s == "df") return LogicalNucleus::dragalin_friedman();
    if (s.rfind("deduction:", 0) == 0) {
        auto parsed = parse_formula(s.substr(10));
        if (auto* e = std::get_if<ParseError>(&parsed)) {
            err << "bad deduction formula: " << e->message() << "\n";
            return std::nullopt;
        }
        return LogicalNucleus::deduction(std::get<FormulaId>(parsed));
    }
    err << "unknown nucleus '" << s << "' (glivenko|peirce|df|deduction:A)\n";
    return std::nullopt;
}

bool ci_strict() {
    const char* v = std::getenv("CI_STRICT");
    return v && std::string(v) == "1";
}

// Countermodel for an unprovable sequent, in the semantics matching the logic.
nlohmann::ordered_json countermodel_json(LogicId logic, const Sequent& s) {
    try {
        if (logic == LogicId::Classical) {
            auto cm = classical_countermodel(reduce_pc(s));
            if (!cm) return nullptr;
            nlohmann::ordered_json j;
            for (auto& [name, val] : *cm) j[name] = val;
            return nlohmann::ordered_json{{"assignment", j}};
        }
        Sequent reduced = logic == LogicId::Intuitionistic ? s
                          : logic == LogicId::Minimal      ? reduce_pc(s)
                                                           : reduce_opaque_negation(s);
        SemanticsMode mode = logic == LogicId::Intuitionistic ? SemanticsMode::Intuitionistic
                                                              : SemanticsMode::MinimalOrPositive;
        if (atoms_of(reduced).size() > 5) return nullptr;  // enumeration would be too wide
        auto cm = find_countermodel(reduced, mode, 4);
        return cm ? cm->to_json() : nlohmann::ordered_json(nullptr);
    } catch (const AtomLimitExceeded&) {
        return nullptr;
    }
}

int cmd_prove(const std::string& logic_flag, const std::string& seq_text, bool json_out,
              std::ostream& out, std::ostream& err) {
    auto logic = logic_from_flag(logic_flag);
    if (!logic) {
        err << "unknown logic '" << logic_flag << "' (p|m|i|c)\n";
        return 2;
    }
    auto parsed = parse_sequent(seq_text);
    if (auto* e = std::get_if<ParseError>(&parsed)) {
        err << e->message() << "\n";
        return 2;
    }
    const Sequent& s = std::get<Sequent>(parsed);
    ProveResult r = prove(*logic, s);
    nlohmann::ordered_json j;
    j["logic"] = logic_name(*logic);
    j["sequent"] = render(s);
    j["verdict"] = r.provable ? "provable" : "unprovable";
    if (r.provable) {
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const auto& st : r.trace) steps.push_back({{"rule", st.rule}, {"on", render(st.principal)}});
        j["trace"] = steps;
        j["countermodel"] = nullptr;
    } else {
        j["trace"] = nlohmann::ordered_json::array();
        j["countermodel"] = countermodel_json(*logic, s);
    }
    if (json_out) {
        out << j.dump(2) << "\n";
    } else {
        out << j["verdict"].get<std::string>() << "  (" << logic_name(*logic) << ", "
            << render(s) << ")\n";
        if (!r.provable && !j["countermodel"].is_null())
            out << "countermodel: " << j["countermodel"].dump() << "\n";
    }
    return r.provable ? 0 : 1;
}

int cmd_conserve(const std::string& check, int samples, std::uint64_t seed, bool json_out,
                 std::ostream& out, std::ostream& err) {
    HarnessReport rep;
    if (check == "glivenko")
        rep = run_glivenko_campaign(samples, seed);
    else if (check == "df")
        rep = run_df_campaign(samples, seed);
    else if (check == "peirce")
        rep = run_peirce_campaign(samples, seed);
    else if (check == "deduction")
        rep = run_deduction_campaign(samples, seed);
    else {
        err << "unknown check '" << check << "' (glivenko|df|peirce|deduction)\n";
        return 2;
    }
    if (json_out)
        out << rep.to_json().dump(2) << "\n";
    else
        out << rep.check << ": " << (rep.samples - rep.failures) << "/" << rep.samples
            << " agreed (seed " << rep.seed << ")\n";
    return rep.ok() ? 0 : 1;
}

int cmd_abstract(const std::string& path, bool nucleus_check, bool conservation, bool json_out,
                 std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot open " << path << "\n";
        return 2;
    }
    SystemFile sf;
    try {
        sf = system_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        err << "bad system file: " << e.what() << "\n";
        return 2;
    }
    if (!sf.nucleus) {
        err << "system file has no nucleus map\n";
        return 2;
    }
    EntailmentRelation rel = saturate(sf.sys);
    NucleusReport nr = check_nucleus(rel, *sf.nucleus);
    nlohmann::ordered_json j;
    j["file"] = path;
    j["carrier_size"] = sf.sys.size();
    j["is_nucleus"] = nr.is_nucleus();
    j["rj_violations"] = nr.rj_violations;
    int code = 0;
    if (nucleus_check && !nr.is_nucleus()) code = 1;
    if (conservation) {
        if (!nr.is_nucleus()) {
            j["conservation"] = nullptr;
            code = 1;
        } else {
            ConservationReport c = conservation_report(sf.sys, *sf.nucleus);
            j["conservation"] = {{"weak_subset_strong", c.weak_subset_strong},
                                 {"equal", c.equal},
                                 {"all_rules_compatible", c.all_rules_compatible},
                                 {"biconditional_ok", c.biconditional_ok}};
            if (!c.weak_subset_strong || !c.biconditional_ok) code = 1;
        }
    }
    if (json_out)
        out << j.dump(2) << "\n";
    else
        out << (nr.is_nucleus() ? "nucleus ok" : "not a nucleus") << "\n";
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"entailment-relation and nucleus workbench"};
    app.require_subcommand(1);

    std::string logic_flag = "i", seq_text, formula_text, nucleus_flag, check_flag, file_path;
    std::string format = "text";
    int samples = 1000, trials = 1000;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* prove_cmd = app.add_subcommand("prove", "decide a sequent");
    prove_cmd->add_option("--logic", logic_flag, "p|m|i|c");
    prove_cmd->add_option("sequent", seq_text, "e.g. \"p -> q, p |- q\"")->required();
    add_format(prove_cmd);

    CLI::App* translate_cmd = app.add_subcommand("translate", "apply a nucleus to a formula");
    translate_cmd->add_option("--nucleus", nucleus_flag, "glivenko|peirce|df|deduction:A")->required();
    translate_cmd->add_option("formula", formula_text)->required();

    CLI::App* conserve_cmd = app.add_subcommand("conserve", "run a conservation harness");
    conserve_cmd->add_option("--check", check_flag)->required();
    conserve_cmd->add_option("--samples", samples);
    CLI::Option* conserve_seed = conserve_cmd->add_option("--seed", seed);
    add_format(conserve_cmd);

    CLI::App* abstract_cmd = app.add_subcommand("abstract", "run the finite engine on a JSON system");
    abstract_cmd->add_option("--file", file_path)->required();
    bool flag_nucleus_check = false, flag_conservation = false;
    abstract_cmd->add_flag("--nucleus-check", flag_nucleus_check);
    abstract_cmd->add_flag("--conservation", flag_conservation);
    add_format(abstract_cmd);

    CLI::App* campaign_cmd = app.add_subcommand("campaign", "randomized conservation-theorem runs");
    campaign_cmd->add_option("--trials", trials);
    CLI::Option* campaign_seed = campaign_cmd->add_option("--seed", seed);
    add_format(campaign_cmd);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    bool json_out = format == "json";
    try {
        if (prove_cmd->parsed()) return cmd_prove(logic_flag, seq_text, json_out, out, err);
        if (translate_cmd->parsed()) {
            auto n = nucleus_from_flag(nucleus_flag, err);
            if (!n) return 2;
            auto parsed = parse_formula(formula_text);
            if (auto* e = std::get_if<ParseError>(&parsed)) {
                err << e->message() << "\n";
                return 2;
            }
            out << render(apply_nucleus(*n, std::get<FormulaId>(parsed))) << "\n";
            return 0;
        }
        if (conserve_cmd->parsed()) {
            if (ci_strict() && conserve_seed->count() == 0) {
                err << "CI_STRICT=1 requires an explicit --seed\n";
                return 2;
            }
            return cmd_conserve(check_flag, samples, seed, json_out, out, err);
        }
        if (abstract_cmd->parsed()) {
            if (!flag_nucleus_check && !flag_conservation) flag_nucleus_check = true;
            return cmd_abstract(file_path, flag_nucleus_check, flag_conservation, json_out, out, err);
        }
        if (campaign_cmd->parsed()) {
            if (ci_strict() && campaign_seed->count() == 0) {
                err << "CI_STRICT=1 requires an explicit --seed\n";
                return 2;
            }
            HarnessReport rep = run_conservation_campaign(trials, seed);
            if (json_out)
                out << rep.to_json().dump(2) << "\n";
            else
                out << "conservation: " << (rep.samples - rep.failures) << "/" << rep.samples
                    << " ok (seed " << rep.seed << ")\n";
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace entail
