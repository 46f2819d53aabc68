// Command-line front end: parse and sort-check programs, evaluate them over
// models, extract optimal run weights, decide bounded equivalence, and run
// the algebraic law suites.
//
// Exit codes: 0 success or EQUAL, 1 input error, 3 NOT-EQUAL,
// 2 evaluation error (star divergence, law violations).

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kawt/equivalence.hpp"
#include "kawt/io.hpp"
#include "kawt/parser.hpp"
#include "kawt/psg.hpp"
#include "kawt/tg.hpp"

using namespace kawt;

namespace {

Signature demo_signature() {
    return Signature({"p"}, {"a"}, {"f"});
}

// --weights name=value assignments against the declared weighting variables;
// every variable needs a value, each exactly once
std::vector<std::uint64_t> parse_weight_args(const std::vector<std::string>& args,
                                             const Signature& sig) {
    std::vector<std::uint64_t> out(sig.weightings().size(), 0);
    std::vector<char> seen(sig.weightings().size(), 0);
    for (const std::string& arg : args) {
        std::size_t eq = arg.find('=');
        if (eq == std::string::npos)
            throw IoError("--weights expects name=value, got '" + arg + "'");
        std::string name = arg.substr(0, eq);
        std::string value = arg.substr(eq + 1);
        auto hit = sig.lookup(name);
        if (!hit || hit->first != Signature::Sort::weighting)
            throw IoError("'" + name + "' is not a declared weighting variable");
        if (seen[hit->second]++)
            throw IoError("weighting '" + name + "' assigned twice");
        try {
            std::size_t used = 0;
            out[hit->second] = std::stoull(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw IoError("'" + value + "' is not a natural number");
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw IoError("weighting '" + sig.weightings()[i] +
                          "' is missing from --weights");
    return out;
}

// without an explicit assignment, weighting i costs i + 1 so that distinct
// variables stay distinguishable
std::vector<std::uint64_t> default_weights(const Signature& sig) {
    std::vector<std::uint64_t> out(sig.weightings().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i + 1;
    return out;
}

int cmd_check(const std::string& path) {
    ProgramFile pf = load_program_file(path);
    std::cout << pretty_print(pf.prog, pf.sig) << "\n";
    return 0;
}

int cmd_eval(const std::string& prog_path, const std::string& model_path, int cap) {
    ProgramFile pf = load_program_file(prog_path);
    TransitionSystem ts = load_model_file(model_path, pf.sig);
    std::cout << format_relation(interpret(*pf.prog, ts, cap));
    return 0;
}

int cmd_optimal(const std::string& prog_path, const std::vector<std::string>& weight_args,
                const std::string& from_spec, int bound) {
    ProgramFile pf = load_program_file(prog_path);
    std::vector<std::uint64_t> weights = parse_weight_args(weight_args, pf.sig);
    Atom from = parse_atom_spec(from_spec, pf.sig);

    CanonicalValuation v = canonical_valuation(pf.sig, weights);
    GuardedLanguage lang = gt_interpret(*pf.prog, v, bound);
    GuardedLanguage best = theta(lang, {from});

    if (count_stars(pf.prog) > 0) std::cout << "bound: " << bound << "\n";
    for (Atom a = 0; a < Atom(pf.sig.atom_count()); ++a) {
        std::cout << render_atom(a, pf.sig) << ": ";
        auto hit = best.find(atom_string(a));
        if (hit == best.end())
            std::cout << "unreachable\n";
        else
            std::cout << hit->second << "\n";
    }
    return 0;
}

int cmd_equiv(const std::string& p_path, const std::string& q_path,
              const std::vector<std::string>& hyp_paths,
              const std::vector<std::string>& weight_args, int bound,
              const std::string& models_dir, int cap) {
    ProgramFile p = load_program_file(p_path);
    ProgramFile q = load_program_file(q_path);
    if (!(p.sig == q.sig))
        throw IoError(p_path + " and " + q_path + " declare different signatures");

    std::vector<Hypothesis> hyps;
    for (const std::string& path : hyp_paths) {
        ProgramFile h = load_program_file(path);
        if (!(h.sig == p.sig))
            throw IoError(path + " declares a different signature");
        try {
            hyps.push_back(make_zero_hypothesis(h.prog));
        } catch (const SortError& e) {
            throw IoError(path + ": " + e.what());
        }
    }

    EquivVerdict verdict;
    std::string scope;
    if (!models_dir.empty()) {
        std::vector<std::string> paths;
        std::error_code ec;
        for (const auto& entry : std::filesystem::directory_iterator(models_dir, ec))
            if (entry.is_regular_file() && entry.path().extension() == ".model")
                paths.push_back(entry.path().string());
        if (ec) throw IoError(models_dir + ": cannot read directory");
        if (paths.empty()) throw IoError(models_dir + ": no .model files");
        std::sort(paths.begin(), paths.end());
        std::vector<TransitionSystem> models;
        for (const std::string& path : paths)
            models.push_back(load_model_file(path, p.sig));
        verdict = model_equiv(*p.prog, *q.prog, hyps, models, cap);
        scope = "models=" + std::to_string(models.size());
    } else {
        CanonicalValuation v = canonical_valuation(
            p.sig, weight_args.empty() ? default_weights(p.sig)
                                       : parse_weight_args(weight_args, p.sig));
        verdict = equiv_under_zero_hypotheses(*p.prog, *q.prog, hyps, v, bound);
        scope = "bound=" + std::to_string(bound);
    }

    if (verdict.equal) {
        std::cout << "EQUAL(" << scope << ")\n";
        return 0;
    }
    std::cout << "NOT-EQUAL\n";
    if (!verdict.detail.empty()) std::cout << verdict.detail << "\n";
    return 3;
}

int cmd_axioms(const std::string& suite, std::uint64_t seed, int samples, bool mutate) {
    std::vector<AxiomReport> reports;
    Signature pa = demo_signature();

    if (suite == "semiring") {
        if (mutate) {
            reports.push_back(check_semiring_axioms(broken_tropical_semiring(), samples, seed));
        } else {
            for (const Semiring* ring :
                 {&boolean_semiring(), &tropical_semiring(), &lukasiewicz_semiring()})
                reports.push_back(check_semiring_axioms(*ring, samples, seed));
        }
    } else if (suite == "lifted") {
        if (mutate) {
            reports.push_back(check_lifted_laws(broken_tropical_semiring(), 2, samples, seed));
        } else {
            for (const Semiring* ring :
                 {&boolean_semiring(), &tropical_semiring(), &lukasiewicz_semiring()})
                for (int n = 1; n <= 3; ++n)
                    reports.push_back(check_lifted_laws(*ring, n, samples, seed));
        }
    } else if (suite == "psg") {
        std::vector<PartialSemigroup> instances;
        if (mutate) {
            instances.push_back(make_broken_cart(3));
            instances.push_back(make_weak_assoc_psg());
            instances.push_back(make_string_psg(2, 3, false));
        } else {
            instances.push_back(make_cart(3));
            instances.push_back(make_guarded_psg(pa, 2));
            instances.push_back(make_string_psg(2, 3));
        }
        for (const PartialSemigroup& p : instances) {
            AxiomReport rep = check_psg_axioms(p);
            rep.seed = seed;
            reports.push_back(std::move(rep));
        }
    } else if (suite == "thm1") {
        std::vector<PartialSemigroup> instances;
        if (mutate) {
            instances.push_back(make_broken_cart(3));
            instances.push_back(make_weak_assoc_psg());
        } else {
            instances.push_back(make_cart(3));
            instances.push_back(make_guarded_psg(pa, 2));
        }
        for (const PartialSemigroup& p : instances)
            for (const Semiring* ring : {&tropical_semiring(), &lukasiewicz_semiring()})
                reports.push_back(check_theorem1(p, *ring, samples, seed));
    } else if (suite == "thm2") {
        if (mutate) throw IoError("the thm2 suite has no mutation instance");
        reports.push_back(check_tau_iso(3, pa, samples, seed));
    } else {
        throw IoError("unknown suite '" + suite +
                      "' (expected semiring, lifted, psg, thm1 or thm2)");
    }

    bool all_pass = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << reports[i].text();
        all_pass = all_pass && reports[i].pass();
    }
    return all_pass ? 0 : 2;
}

int cmd_ski_demo() {
    std::cout << "optimal ski-rental weight by trip length n and purchase price y\n";
    std::cout << "     ";
    for (int y = 0; y <= 8; ++y) std::cout << "  y=" << y;
    std::cout << "\n";
    for (int n = 0; n <= 8; ++n) {
        std::cout << "n=" << n << "  ";
        for (std::uint64_t y = 0; y <= 8; ++y) {
            SkiReport rep = ski_case_study(n, y);
            bool consistent = rep.relational_entry == rep.theta_scenario &&
                              rep.hypotheses_hold;
            if (!consistent || rep.theta_scenario.is_inf())
                throw StarDivergence("ski case study is inconsistent at n=" +
                                     std::to_string(n) + ", y=" + std::to_string(y));
            std::uint64_t w = rep.theta_scenario.value();
            std::string cell = std::to_string(w);
            std::cout << std::string(5 - cell.size(), ' ') << cell;
        }
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted regular programs: parsing, semantics, equivalence, law suites"};
    app.require_subcommand(1);

    std::string prog_path, model_path, q_path, from_spec, models_dir, suite;
    std::vector<std::string> hyp_paths, weight_args;
    int cap = 0, bound = 0, samples = 500;
    std::uint64_t seed = 0;
    bool mutate = false;

    CLI::App* check = app.add_subcommand("check", "parse and sort-check a program file");
    check->add_option("program", prog_path, "program file")->required();

    CLI::App* eval = app.add_subcommand("eval", "interpret a program over a model");
    eval->add_option("program", prog_path, "program file")->required();
    eval->add_option("model", model_path, "model file")->required();
    eval->add_option("--cap", cap, "star iteration cap (0 = number of states + 1)")
        ->check(CLI::NonNegativeNumber);

    CLI::App* optimal =
        app.add_subcommand("optimal", "optimal run weights per final atom");
    optimal->add_option("program", prog_path, "program file")->required();
    optimal->add_option("--weights", weight_args, "weighting values, name=value")
        ->required();
    optimal->add_option("--from", from_spec, "start atom, e.g. '{neq0}'")->required();
    optimal->add_option("--bound", bound, "trace length bound")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* equiv = app.add_subcommand("equiv", "decide program equivalence");
    equiv->add_option("p", prog_path, "left program file")->required();
    equiv->add_option("q", q_path, "right program file")->required();
    equiv->add_option("--hyp", hyp_paths, "hypothesis file(s), each read as lhs = 0");
    equiv->add_option("--weights", weight_args,
                      "weighting values for the bounded comparison, name=value");
    CLI::Option* bound_opt = equiv->add_option("--bound", bound, "trace length bound")
                                 ->check(CLI::PositiveNumber);
    CLI::Option* models_opt =
        equiv->add_option("--models", models_dir, "directory of .model files");
    equiv->add_option("--cap", cap, "star iteration cap for model comparison")
        ->check(CLI::NonNegativeNumber);
    bound_opt->excludes(models_opt);

    CLI::App* axioms = app.add_subcommand("axioms", "run an algebraic law suite");
    axioms->add_option("--suite", suite, "semiring | lifted | psg | thm1 | thm2")
        ->required();
    axioms->add_option("--seed", seed, "random seed, printed in each report");
    axioms->add_option("--samples", samples, "samples per law")
        ->check(CLI::PositiveNumber);
    axioms->add_flag("--mutate", mutate, "run the injected-defect instances instead");

    CLI::App* demo =
        app.add_subcommand("ski-demo", "the rental case study over a 9x9 grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (check->parsed()) return cmd_check(prog_path);
        if (eval->parsed()) return cmd_eval(prog_path, model_path, cap);
        if (optimal->parsed()) return cmd_optimal(prog_path, weight_args, from_spec, bound);
        if (equiv->parsed()) {
            if (models_dir.empty() && !bound_opt->count())
                throw IoError("equiv needs either --bound or --models");
            return cmd_equiv(prog_path, q_path, hyp_paths, weight_args, bound, models_dir,
                             cap);
        }
        if (axioms->parsed()) return cmd_axioms(suite, seed, samples, mutate);
        if (demo->parsed()) return cmd_ski_demo();
    } catch (const StarDivergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SortError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
