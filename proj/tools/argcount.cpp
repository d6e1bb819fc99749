#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <argcount/argcount.hpp>

namespace {

using namespace argcount;
using json = nlohmann::ordered_json;

enum class OutputKind { table, json, csv };

struct RunConfig {
    std::string input = "-";
    std::string format = "auto";
    double alpha = 0.98;
    double epsilon = 1e-3;
    std::size_t max_iter = 0;
    double tie_tol = -1.0;
    std::string output = "table";
    std::uint64_t seed = 7;
    std::vector<std::string> kinds;

    CountingOptions counting(bool direct = false) const { return {alpha, epsilon, max_iter, tie_tol, direct}; }
    OutputKind output_kind() const {
        if (output == "json") return OutputKind::json;
        if (output == "csv") return OutputKind::csv;
        return OutputKind::table;
    }
};

/// Distinguishes bad command-line values from library failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

std::string brace(const ArgumentationFramework &af, const ArgSet &s) {
    std::string out = "{";
    const auto names = af.names_of(s);
    for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
    return out + "}";
}

InputFormat input_format(const std::string &f) {
    if (f == "apx") return InputFormat::apx;
    if (f == "tgf") return InputFormat::tgf;
    return InputFormat::detect;
}

ArgumentationFramework load(const RunConfig &cfg) {
    std::string text;
    if (cfg.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) throw UsageError("cannot open '" + cfg.input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    auto res = parse_framework(text, input_format(cfg.format), cfg.input == "-" ? "" : cfg.input);
    for (const auto &w : res.warnings) std::cerr << cfg.input << ":" << w.to_string() << "\n";
    return std::move(res.framework);
}

std::string ranking_line(const ArgumentationFramework &af, const Ranking &r) {
    std::string out;
    for (std::size_t g = 0; g < r.groups().size(); ++g) {
        if (g) out += " > ";
        for (std::size_t k = 0; k < r.groups()[g].size(); ++k) out += (k ? " = " : "") + af.name(r.groups()[g][k]);
    }
    return out;
}

std::vector<SemanticsKind> selected_kinds(const RunConfig &cfg) {
    std::vector<SemanticsKind> out;
    if (cfg.kinds.empty()) return {all_semantics.begin(), all_semantics.end()};
    for (const auto &k : cfg.kinds) {
        auto s = parse_semantics(k);
        if (!s) throw UsageError("unknown semantics '" + k + "'");
        out.push_back(*s);
    }
    return out;
}

int cmd_solve(const RunConfig &cfg, bool direct, bool rank_view) {
    const auto af = load(cfg);
    const auto opt = cfg.counting(direct);
    const auto s = counting_strengths(af, opt);
    const auto r = derive_ranking(s, opt.resolved_tie_tol());

    ExtensionListing ext;
    if (!cfg.kinds.empty())
        for (auto k : selected_kinds(cfg)) ext.emplace_back(k, enumerate(af, k));

    switch (cfg.output_kind()) {
    case OutputKind::json: std::cout << emit_results(af, s, r, cfg.kinds.empty() ? nullptr : &ext); break;
    case OutputKind::csv:
        if (rank_view) {
            std::cout << "rank,argument,strength\n";
            for (std::size_t g = 0; g < r.groups().size(); ++g)
                for (auto x : r.groups()[g]) std::cout << g + 1 << "," << af.name(x) << "," << shortest_repr(s.values[x]) << "\n";
        } else {
            std::cout << emit_csv(af, s);
        }
        break;
    case OutputKind::table: {
        std::cout << "alpha " << shortest_repr(s.alpha) << ", epsilon " << shortest_repr(opt.epsilon) << ", "
                  << (direct ? std::string("direct solve") : std::to_string(s.iterations) + " iterations") << "\n";
        std::cout << "ranking: " << ranking_line(af, r) << "\n";
        for (const auto &[kind, sets] : ext) {
            std::cout << to_string(kind) << ":";
            if (sets.empty()) std::cout << " none";
            for (const auto &e : sets) std::cout << " " << brace(af, e);
            std::cout << "\n";
        }
        std::size_t width = 10;
        for (const auto &n : af.names()) width = std::max(width, n.size() + 2);
        std::cout << (rank_view ? "rank  " : "") << pad("argument", width) << "strength\n";
        for (std::size_t g = 0; g < r.groups().size(); ++g)
            for (auto x : r.groups()[g])
                std::cout << (rank_view ? pad(std::to_string(g + 1), 6) : "") << pad(af.name(x), width)
                          << fixed2(s.values[x]) << "\n";
        break;
    }
    }
    return 0;
}

int cmd_extensions(const RunConfig &cfg, const std::string &grounded_via, std::size_t cap) {
    const auto af = load(cfg);
    ExtensionListing ext;
    for (auto k : selected_kinds(cfg)) {
        if (k == SemanticsKind::grounded && grounded_via == "boolean")
            ext.emplace_back(k, std::vector<ArgSet>{grounded_fixpoint(BooleanMatrix::from(af))});
        else if (k == SemanticsKind::stable && grounded_via == "boolean")
            ext.emplace_back(k, find_stable_by_operator(BooleanMatrix::from(af), cap));
        else
            ext.emplace_back(k, enumerate(af, k, cap));
    }

    switch (cfg.output_kind()) {
    case OutputKind::json: {
        json j;
        j["arguments"] = af.names();
        auto &e = j["extensions"] = json::object();
        for (const auto &[kind, sets] : ext) {
            auto list = json::array();
            for (const auto &s : sets) list.push_back(af.names_of(s));
            e[std::string(to_string(kind))] = std::move(list);
        }
        std::cout << j.dump(2) << "\n";
        break;
    }
    case OutputKind::csv:
        std::cout << "semantics,extension\n";
        for (const auto &[kind, sets] : ext)
            for (const auto &s : sets) {
                std::string members;
                for (const auto &n : af.names_of(s)) members += (members.empty() ? "" : " ") + n;
                std::cout << to_string(kind) << "," << members << "\n";
            }
        break;
    case OutputKind::table:
        for (const auto &[kind, sets] : ext) {
            std::cout << to_string(kind) << ":";
            if (sets.empty()) std::cout << " none";
            for (const auto &s : sets) std::cout << " " << brace(af, s);
            std::cout << "\n";
        }
        break;
    }
    return 0;
}

int cmd_grounded(const RunConfig &cfg) {
    const auto af = load(cfg);
    const auto steps = grounded_iterates(BooleanMatrix::from(af));
    const auto &fix = steps.back();
    if (cfg.output_kind() == OutputKind::json) {
        json j;
        j["arguments"] = af.names();
        j["grounded"] = af.names_of(fix);
        auto &it = j["iterates"] = json::array();
        for (const auto &g : steps) it.push_back(af.names_of(g));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (cfg.output_kind() == OutputKind::csv) {
        std::cout << "step,members\n";
        for (std::size_t k = 0; k < steps.size(); ++k) {
            std::string members;
            for (const auto &n : af.names_of(steps[k])) members += (members.empty() ? "" : " ") + n;
            std::cout << k << "," << members << "\n";
        }
        return 0;
    }
    for (std::size_t k = 0; k < steps.size(); ++k) std::cout << "F^" << k << " = " << brace(af, steps[k]) << "\n";
    std::cout << "grounded: " << brace(af, fix) << "\n";
    return 0;
}

int cmd_estimate(const RunConfig &cfg, double rho, bool measure) {
    if (measure) rho = spectral_radius(load(cfg).attack_matrix());
    if (!(rho >= 0.0)) throw UsageError("pass --rho or --measure-rho with an input file");
    const auto est = estimate_iterations(cfg.epsilon, cfg.alpha, rho);
    switch (cfg.output_kind()) {
    case OutputKind::json: {
        json j;
        j["alpha"] = cfg.alpha;
        j["epsilon"] = cfg.epsilon;
        j["rho"] = est.rho;
        j["k_max"] = est.k_max;
        j["iterations"] = est.k_max_ceil;
        std::cout << j.dump(2) << "\n";
        break;
    }
    case OutputKind::csv:
        std::cout << "alpha,epsilon,rho,k_max,iterations\n"
                  << shortest_repr(cfg.alpha) << "," << shortest_repr(cfg.epsilon) << "," << shortest_repr(est.rho)
                  << "," << shortest_repr(est.k_max) << "," << est.k_max_ceil << "\n";
        break;
    case OutputKind::table:
        std::cout << "rho        " << shortest_repr(est.rho) << "\n"
                  << "k_max      " << shortest_repr(est.k_max) << "\n"
                  << "iterations " << est.k_max_ceil << "\n";
        break;
    }
    return 0;
}

std::string describe_witness(const ArgumentationFramework &af, const Witness &w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.arguments.size(); ++i) out += (i ? ", " : "") + af.name(w.arguments[i]);
    out += ")";
    for (std::size_t i = 0; i < w.values.size(); ++i) out += (i ? " " : " v=") + shortest_repr(w.values[i]);
    return out + " " + w.note;
}

int cmd_axioms_file(const RunConfig &cfg) {
    const auto af = load(cfg);
    const auto opt = cfg.counting();
    const auto rank = counting_ranking(af, opt);
    std::vector<AxiomReport> reps;
    for (auto a : all_axioms) {
        if (a == Axiom::Ab)
            reps.push_back(check_abstraction(af, opt, cfg.seed));
        else if (a == Axiom::In)
            reps.push_back(check_independence(af, opt));
        else
            reps.push_back(check_axiom(af, rank, a));
    }
    switch (cfg.output_kind()) {
    case OutputKind::json: {
        json j;
        j["arguments"] = af.names();
        auto &ax = j["axioms"] = json::object();
        for (const auto &r : reps) {
            json e;
            e["holds"] = r.holds;
            auto &v = e["violations"] = json::array();
            for (const auto &w : r.violations) {
                json item;
                std::vector<std::string> names;
                for (auto x : w.arguments) names.push_back(af.name(x));
                item["arguments"] = names;
                item["values"] = w.values;
                item["note"] = w.note;
                v.push_back(std::move(item));
            }
            ax[std::string(to_string(r.axiom))] = std::move(e);
        }
        std::cout << j.dump(2) << "\n";
        break;
    }
    case OutputKind::csv:
        std::cout << "axiom,holds,violations\n";
        for (const auto &r : reps)
            std::cout << to_string(r.axiom) << "," << (r.holds ? "yes" : "no") << "," << r.violations.size() << "\n";
        break;
    case OutputKind::table:
        for (const auto &r : reps) {
            std::cout << pad(std::string(to_string(r.axiom)), 5) << (r.holds ? "holds" : "violated");
            if (!r.holds)
                std::cout << " (" << r.violations.size() << ") e.g. " << describe_witness(af, r.violations.front());
            std::cout << "\n";
        }
        break;
    }
    return 0;
}

int cmd_axioms_survey(const RunConfig &cfg, std::size_t trials, bool user_eps, bool user_tie) {
    SurveyConfig sc;
    sc.trials = trials;
    sc.seed = cfg.seed;
    sc.counting.alpha = cfg.alpha;
    sc.counting.max_iter = cfg.max_iter;
    if (user_eps) sc.counting.epsilon = cfg.epsilon;
    if (user_tie) sc.counting.tie_tol = cfg.tie_tol;
    const auto rep = axiom_survey(sc);
    switch (cfg.output_kind()) {
    case OutputKind::json: {
        json j;
        j["trials"] = sc.trials;
        j["seed"] = sc.seed;
        j["alpha"] = sc.counting.alpha;
        j["epsilon"] = sc.counting.epsilon;
        j["tie_tol"] = sc.counting.resolved_tie_tol();
        j["solver_runs"] = rep.solver_runs;
        j["bound_failures"] = rep.bound_failures;
        auto &ax = j["axioms"] = json::object();
        for (const auto &t : rep.tallies) {
            json e;
            e["violating_frameworks"] = t.violating_frameworks;
            e["violating_pairs"] = t.violating_pairs;
            auto &ex = e["examples"] = json::array();
            for (const auto &c : t.examples) {
                json item;
                item["trial"] = c.trial;
                item["framework"] = write_apx(c.framework);
                item["witness"] = describe_witness(c.framework, c.witness);
                ex.push_back(std::move(item));
            }
            ax[std::string(to_string(t.axiom))] = std::move(e);
        }
        std::cout << j.dump(2) << "\n";
        break;
    }
    case OutputKind::csv:
        std::cout << "axiom,violating_frameworks,violating_pairs\n";
        for (const auto &t : rep.tallies)
            std::cout << to_string(t.axiom) << "," << t.violating_frameworks << "," << t.violating_pairs << "\n";
        break;
    case OutputKind::table:
        std::cout << sc.trials << " frameworks, seed " << sc.seed << ", alpha " << shortest_repr(sc.counting.alpha)
                  << ", epsilon " << shortest_repr(sc.counting.epsilon) << ", tie tolerance "
                  << shortest_repr(sc.counting.resolved_tie_tol()) << "\n";
        std::cout << "axiom  frameworks  pairs\n";
        for (const auto &t : rep.tallies)
            std::cout << pad(std::string(to_string(t.axiom)), 7) << pad(std::to_string(t.violating_frameworks), 12)
                      << t.violating_pairs << "\n";
        std::cout << "solver runs " << rep.solver_runs << ", bound failures " << rep.bound_failures.size() << "\n";
        break;
    }
    return 0;
}

int cmd_compare(const RunConfig &cfg) {
    const auto af = load(cfg);
    const auto opt = cfg.counting();
    const auto cs = counting_strengths(af, opt);
    const auto gs = categoriser_valuation(af.attack_matrix(), cfg.epsilon * 1e-3);
    const double tol = opt.resolved_tie_tol();
    const auto cr = derive_ranking(cs, tol);
    const auto gr = derive_ranking(gs, tol);

    std::size_t pairs = 0, agree = 0;
    for (std::size_t x = 0; x < af.size(); ++x)
        for (std::size_t y = x + 1; y < af.size(); ++y) {
            ++pairs;
            if (cr.cmp(x, y) == gr.cmp(x, y)) ++agree;
        }

    switch (cfg.output_kind()) {
    case OutputKind::json: {
        json j;
        j["arguments"] = af.names();
        json c = json::object(), g = json::object();
        for (std::size_t i = 0; i < af.size(); ++i) {
            c[af.name(i)] = cs.values[i];
            g[af.name(i)] = gs.values[i];
        }
        j["counting"] = std::move(c);
        j["categoriser"] = std::move(g);
        j["pairs"] = pairs;
        j["agreeing_pairs"] = agree;
        std::cout << j.dump(2) << "\n";
        break;
    }
    case OutputKind::csv:
        std::cout << "argument,counting,counting_rank,categoriser,categoriser_rank\n";
        for (std::size_t i = 0; i < af.size(); ++i)
            std::cout << af.name(i) << "," << shortest_repr(cs.values[i]) << "," << cr.group_of(i) + 1 << ","
                      << shortest_repr(gs.values[i]) << "," << gr.group_of(i) + 1 << "\n";
        break;
    case OutputKind::table:
        std::cout << "counting:    " << ranking_line(af, cr) << "\n";
        std::cout << "categoriser: " << ranking_line(af, gr) << "\n";
        std::cout << "argument  counting  categoriser\n";
        for (std::size_t i = 0; i < af.size(); ++i)
            std::cout << pad(af.name(i), 10) << pad(fixed2(cs.values[i]), 10) << fixed2(gs.values[i]) << "\n";
        std::cout << "agreeing pairs " << agree << " / " << pairs << "\n";
        break;
    }
    return 0;
}

int cmd_generate(std::size_t n, double p, std::uint64_t seed, const std::string &format) {
    const auto af = generate_random(n, p, seed);
    std::cout << (format == "tgf" ? write_tgf(af) : write_apx(af));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Counting-semantics strengths, rankings and extensions for abstract argumentation frameworks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto alpha_check = CLI::Validator(
        [](std::string &s) -> std::string {
            double a = 0.0;
            try {
                a = std::stod(s);
            } catch (...) {
                return "alpha must be a number";
            }
            if (!(a > 0.0 && a < 1.0)) return "alpha must lie strictly between 0 and 1; values in [0.90, 0.98] are typical";
            return {};
        },
        "(0,1)");

    auto add_input = [&](CLI::App *c) {
        c->add_option("input", cfg.input, "APX or TGF file, '-' for standard input");
        c->add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"apx", "tgf", "auto"}));
    };
    auto add_output = [&](CLI::App *c) {
        c->add_option("--output", cfg.output, "Output style")->check(CLI::IsMember({"table", "json", "csv"}));
    };
    auto add_solver = [&](CLI::App *c) {
        c->add_option("--alpha", cfg.alpha, "Damping factor")->check(alpha_check);
        c->add_option("--epsilon", cfg.epsilon, "Convergence tolerance")->check(CLI::PositiveNumber);
        c->add_option("--max-iter", cfg.max_iter, "Iteration cap (0 picks one from alpha and epsilon)");
        c->add_option("--tie-tol", cfg.tie_tol, "Values this close are tied (default 10 * epsilon)")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_kinds = [&](CLI::App *c) {
        c->add_option("--kind", cfg.kinds, "Semantics: cf, admissible, complete, grounded, preferred, stable");
    };

    auto *solve = app.add_subcommand("solve", "Counting-semantics strengths and ranking");
    bool direct = false;
    add_input(solve);
    add_solver(solve);
    add_output(solve);
    add_kinds(solve);
    solve->add_flag("--direct", direct, "Solve the linear system instead of iterating");

    auto *rank = app.add_subcommand("rank", "Ranking with tie groups");
    add_input(rank);
    add_solver(rank);
    add_output(rank);
    rank->add_flag("--direct", direct, "Solve the linear system instead of iterating");

    auto *exts = app.add_subcommand("extensions", "Enumerate extensions");
    std::string grounded_via = "enum";
    std::size_t cap = default_subset_cap;
    add_input(exts);
    add_output(exts);
    add_kinds(exts);
    exts->add_option("--grounded-via", grounded_via, "Grounded and stable via boolean operators or enumeration")
        ->check(CLI::IsMember({"boolean", "enum"}));
    exts->add_option("--cap", cap, "Largest framework enumerated exhaustively");

    auto *grounded = app.add_subcommand("grounded", "Grounded extension by boolean fixpoint iteration");
    add_input(grounded);
    add_output(grounded);

    auto *estimate = app.add_subcommand("estimate", "Iterations needed for a tolerance");
    double rho = -1.0;
    bool measure = false;
    estimate->add_option("--alpha", cfg.alpha, "Damping factor")->check(alpha_check);
    estimate->add_option("--epsilon", cfg.epsilon, "Convergence tolerance")->check(CLI::Range(0.0, 1.0));
    estimate->add_option("--rho", rho, "Spectral radius of the normalized matrix")->check(CLI::Range(0.0, 1.0));
    estimate->add_flag("--measure-rho", measure, "Measure the spectral radius of the input framework");
    add_input(estimate);
    add_output(estimate);

    auto *axioms = app.add_subcommand("axioms", "Check ranking axioms on a file or a random survey");
    bool survey = false;
    std::size_t trials = 1000;
    add_input(axioms);
    add_solver(axioms);
    add_output(axioms);
    axioms->add_option("--seed", cfg.seed, "Seed for relabeling and survey frameworks");
    axioms->add_flag("--survey", survey, "Survey seeded random frameworks instead of reading input");
    axioms->add_option("--trials", trials, "Survey size");

    auto *compare = app.add_subcommand("compare", "Counting and categoriser rankings side by side");
    add_input(compare);
    add_solver(compare);
    add_output(compare);

    auto *generate = app.add_subcommand("generate", "Seeded random framework");
    std::size_t gen_n = 0;
    double gen_p = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_format = "apx";
    generate->add_option("n", gen_n, "Number of arguments")->required();
    generate->add_option("p", gen_p, "Attack probability")->required()->check(CLI::Range(0.0, 1.0));
    generate->add_option("seed", gen_seed, "Seed")->required();
    generate->add_option("--format", gen_format, "Output format")->check(CLI::IsMember({"apx", "tgf"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*solve) return cmd_solve(cfg, direct, false);
        if (*rank) return cmd_solve(cfg, direct, true);
        if (*exts) return cmd_extensions(cfg, grounded_via, cap);
        if (*grounded) return cmd_grounded(cfg);
        if (*estimate) return cmd_estimate(cfg, rho, measure);
        if (*axioms)
            return survey ? cmd_axioms_survey(cfg, trials, axioms->count("--epsilon") > 0, axioms->count("--tie-tol") > 0)
                          : cmd_axioms_file(cfg);
        if (*compare) return cmd_compare(cfg);
        if (*generate) return cmd_generate(gen_n, gen_p, gen_seed, gen_format);
    } catch (const ParseError &e) {
        for (const auto &d : e.diagnostics()) std::cerr << cfg.input << ":" << d.to_string() << "\n";
        return 1;
    } catch (const NonConvergenceError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
