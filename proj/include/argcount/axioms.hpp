#ifndef ARGCOUNT_AXIOMS_HPP_
#define ARGCOUNT_AXIOMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arg_set.hpp"
#include "counting.hpp"
#include "framework.hpp"
#include "generate.hpp"
#include "ranking.hpp"

namespace argcount {

enum class Axiom { Ab, In, VP, DP, CT, SCT, CP, QP, DDP };

inline constexpr std::array<Axiom, 9> all_axioms{Axiom::Ab, Axiom::In, Axiom::VP, Axiom::DP, Axiom::CT,
                                                 Axiom::SCT, Axiom::CP, Axiom::QP, Axiom::DDP};

inline std::string_view to_string(Axiom a) {
    switch (a) {
    case Axiom::Ab: return "Ab";
    case Axiom::In: return "In";
    case Axiom::VP: return "VP";
    case Axiom::DP: return "DP";
    case Axiom::CT: return "CT";
    case Axiom::SCT: return "SCT";
    case Axiom::CP: return "CP";
    case Axiom::QP: return "QP";
    case Axiom::DDP: return "DDP";
    }
    return "?";
}

/// Parameters of one counting-semantics run and the ranking derived from it.
struct CountingOptions {
    double alpha = 0.98;
    double epsilon = 1e-3;
    std::size_t max_iter = 0;
    /// Negative selects 10 * epsilon.
    double tie_tol = -1.0;
    bool direct = false;

    double resolved_tie_tol() const { return tie_tol >= 0.0 ? tie_tol : 10.0 * epsilon; }
};

inline StrengthVector counting_strengths(const ArgumentationFramework &af, const CountingOptions &opt) {
    if (opt.direct) {
        auto s = solve_counting_direct(af.attack_matrix(), opt.alpha);
        s.epsilon = opt.epsilon;
        return s;
    }
    return solve_counting(af.attack_matrix(), opt.alpha, opt.epsilon, opt.max_iter);
}

inline Ranking counting_ranking(const ArgumentationFramework &af, const CountingOptions &opt) {
    return derive_ranking(counting_strengths(af, opt), opt.resolved_tie_tol());
}

/**
 * Bound properties every iterative counting run must meet: values within
 * [1 - alpha - epsilon, 1], unattacked arguments exactly 1, and successive
 * changes contracting by alpha (first change at most alpha).
 * Returns one message per failed property; empty means all hold.
 */
inline std::vector<std::string> audit_bounds(const AttackMatrix &a, const StrengthVector &s, double slack = 1e-12) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const double v = s.values[i];
        if (v < 1.0 - s.alpha - s.epsilon || v > 1.0)
            out.push_back("value " + shortest_repr(v) + " of argument " + std::to_string(i) + " out of range");
        if (a.row_sum(i) == 0 && v != 1.0)
            out.push_back("unattacked argument " + std::to_string(i) + " scored " + shortest_repr(v));
    }
    for (std::size_t k = 0; k < s.changes.size(); ++k) {
        const double bound = (k == 0 ? 1.0 : s.changes[k - 1]) * s.alpha + slack;
        if (s.changes[k] > bound)
            out.push_back("change " + std::to_string(k + 1) + " = " + shortest_repr(s.changes[k]) +
                          " exceeds alpha times the previous change");
    }
    return out;
}

/// One violating instance: the arguments involved, their values, and a short note.
struct Witness {
    std::vector<std::size_t> arguments;
    std::vector<double> values;
    std::string note;
};

struct AxiomReport {
    Axiom axiom = Axiom::VP;
    bool holds = true;
    std::vector<Witness> violations;

    void add(Witness w) {
        holds = false;
        violations.push_back(std::move(w));
    }
};

/// Per-argument structure the pairwise axioms look at.
struct ArgumentProfile {
    ArgSet attackers;
    ArgSet defenders;
    bool simple_defense = true;
    bool distributed_defense = true;
};

inline std::vector<ArgumentProfile> argument_profiles(const ArgumentationFramework &af) {
    std::vector<ArgumentProfile> out;
    out.reserve(af.size());
    for (std::size_t x = 0; x < af.size(); ++x) {
        ArgumentProfile p;
        ArgSet self(af.size());
        self.insert(x);
        p.attackers = attackers(af, self);
        p.defenders = attackers(af, p.attackers);
        for (auto d : p.defenders.members()) {
            ArgSet dset(af.size());
            dset.insert(d);
            if ((attacked_by(af, dset) & p.attackers).size() != 1) p.simple_defense = false;
        }
        for (auto y : p.attackers.members())
            if (af.attackers_of(y).empty()) p.distributed_defense = false;
        out.push_back(std::move(p));
    }
    return out;
}

/**
 * Scans every ordered pair (x, y), x != y, whose structure meets the axiom's
 * antecedent and records those where the ranking breaks the consequent.
 * Covers VP, DP, CT, SCT, CP, QP and DDP; Ab and In need recomputation and
 * have their own checks.
 */
inline AxiomReport check_axiom(const ArgumentationFramework &af, const Ranking &rank, Axiom axiom) {
    if (rank.size() != af.size()) throw std::invalid_argument("ranking does not match framework");
    if (axiom == Axiom::Ab || axiom == Axiom::In)
        throw std::invalid_argument("Ab and In are checked with check_abstraction / check_independence");
    AxiomReport rep;
    rep.axiom = axiom;
    const auto prof = argument_profiles(af);
    const auto &v = rank.values();
    auto witness = [&](std::size_t x, std::size_t y, std::string note) {
        rep.add({{x, y}, {v[x], v[y]}, std::move(note)});
    };

    for (std::size_t x = 0; x < af.size(); ++x)
        for (std::size_t y = 0; y < af.size(); ++y) {
            if (x == y) continue;
            const auto &px = prof[x];
            const auto &py = prof[y];
            const auto nx = px.attackers.size(), ny = py.attackers.size();
            switch (axiom) {
            case Axiom::VP:
                if (nx == 0 && ny != 0 && !rank.strictly_above(x, y)) witness(x, y, "unattacked x not above attacked y");
                break;
            case Axiom::DP:
                if (nx == ny && !px.defenders.empty() && py.defenders.empty() && !rank.strictly_above(x, y))
                    witness(x, y, "defended x not above undefended y");
                break;
            case Axiom::CT:
                if (group_compare(rank, py.attackers, px.attackers).weak() && !rank.at_least(x, y))
                    witness(x, y, "R-(y) >= R-(x) but y above x");
                break;
            case Axiom::SCT:
                if (group_compare(rank, py.attackers, px.attackers).strict() && !rank.strictly_above(x, y))
                    witness(x, y, "R-(y) > R-(x) but x not above y");
                break;
            case Axiom::CP:
                if (nx < ny && !rank.strictly_above(x, y)) witness(x, y, "fewer attackers but x not above y");
                break;
            case Axiom::QP: {
                if (nx == 0) break;
                bool stronger_exists = false;
                for (auto yp : py.attackers.members()) {
                    bool beats_all = true;
                    for (auto xp : px.attackers.members())
                        if (!rank.strictly_above(yp, xp)) {
                            beats_all = false;
                            break;
                        }
                    if (beats_all) {
                        stronger_exists = true;
                        break;
                    }
                }
                if (stronger_exists && !rank.strictly_above(x, y))
                    witness(x, y, "y has an attacker above all attackers of x but x not above y");
                break;
            }
            case Axiom::DDP:
                if (nx == ny && px.defenders.size() == py.defenders.size() && px.simple_defense &&
                    px.distributed_defense && py.simple_defense && !py.distributed_defense &&
                    !rank.strictly_above(x, y))
                    witness(x, y, "simple distributed defense of x not above simple undistributed defense of y");
                break;
            case Axiom::Ab:
            case Axiom::In: break;
            }
        }
    return rep;
}

/// Abstraction: relabels the framework by a seeded random permutation and compares every pair.
inline AxiomReport check_abstraction(const ArgumentationFramework &af, const CountingOptions &opt, std::uint64_t seed,
                                     std::optional<std::vector<std::size_t>> perm = std::nullopt) {
    AxiomReport rep;
    rep.axiom = Axiom::Ab;
    const auto tau = perm ? *perm : random_permutation(af.size(), seed);
    const auto original = counting_ranking(af, opt);
    const auto relabeled = counting_ranking(permute(af, tau), opt);
    for (std::size_t x = 0; x < af.size(); ++x)
        for (std::size_t y = x + 1; y < af.size(); ++y)
            if (original.cmp(x, y) != relabeled.cmp(tau[x], tau[y]))
                rep.add({{x, y},
                         {original.values()[x], original.values()[y], relabeled.values()[tau[x]],
                          relabeled.values()[tau[y]]},
                         "order changes under relabeling"});
    return rep;
}

/**
 * Independence across weakly connected components.
 *
 * Each component is solved on its own; the pieced-together values are ranked
 * and every pair is compared with the ranking of the whole framework. With
 * three or more components, each union of two components is also solved and
 * its internal pairs compared. Frameworks with one component hold vacuously.
 */
inline AxiomReport check_independence(const ArgumentationFramework &af, const CountingOptions &opt) {
    AxiomReport rep;
    rep.axiom = Axiom::In;
    const auto comps = component_sets(af);
    if (comps.size() <= 1) return rep;
    const auto full = counting_ranking(af, opt);

    std::vector<double> pieced(af.size(), 0.0);
    for (const auto &c : comps) {
        const auto local = counting_strengths(induced_subframework(af, c), opt);
        const auto members = c.members();
        for (std::size_t k = 0; k < members.size(); ++k) pieced[members[k]] = local.values[k];
    }
    const auto separate = derive_ranking(pieced, opt.resolved_tie_tol());
    for (std::size_t x = 0; x < af.size(); ++x)
        for (std::size_t y = x + 1; y < af.size(); ++y)
            if (full.cmp(x, y) != separate.cmp(x, y))
                rep.add({{x, y},
                         {full.values()[x], full.values()[y], pieced[x], pieced[y]},
                         "order differs between whole framework and components solved separately"});

    if (comps.size() >= 3)
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                const auto both = comps[i] | comps[j];
                const auto members = both.members();
                const auto sub = counting_ranking(induced_subframework(af, both), opt);
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b)
                        if (full.cmp(members[a], members[b]) != sub.cmp(a, b))
                            rep.add({{members[a], members[b]},
                                     {full.values()[members[a]], full.values()[members[b]], sub.values()[a],
                                      sub.values()[b]},
                                     "order differs between whole framework and a union of two components"});
            }
    return rep;
}

/// Random-framework settings for the survey.
struct SurveyConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 7;
    std::size_t min_arguments = 2;
    std::size_t max_arguments = 8;
    std::vector<double> probabilities{0.1, 0.25, 0.5};
    CountingOptions counting{0.98, 1e-12, 0, 1e-9, false};
    std::size_t stored_per_axiom = 3;
};

struct Counterexample {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double probability = 0.0;
    ArgumentationFramework framework;
    Witness witness;
};

struct AxiomTally {
    Axiom axiom = Axiom::VP;
    std::size_t violating_frameworks = 0;
    std::size_t violating_pairs = 0;
    std::vector<Counterexample> examples;
};

struct SurveyReport {
    SurveyConfig config;
    std::vector<AxiomTally> tallies;
    std::size_t solver_runs = 0;
    std::vector<std::string> bound_failures;

    const AxiomTally &tally(Axiom a) const {
        for (const auto &t : tallies)
            if (t.axiom == a) return t;
        throw std::out_of_range("axiom not surveyed");
    }
};

/// Framework for one survey trial: size uniform in [min, max], probability by trial index.
inline std::pair<ArgumentationFramework, std::uint64_t> survey_framework(const SurveyConfig &cfg, std::size_t trial,
                                                                         double *probability = nullptr) {
    if (cfg.probabilities.empty() || cfg.max_arguments < cfg.min_arguments)
        throw std::invalid_argument("invalid survey configuration");
    const std::uint64_t s = mix_seed(cfg.seed ^ mix_seed(trial));
    std::mt19937_64 rng(s);
    const auto n = cfg.min_arguments + bounded_draw(rng, cfg.max_arguments - cfg.min_arguments + 1);
    const double p = cfg.probabilities[trial % cfg.probabilities.size()];
    if (probability) *probability = p;
    return {generate_random(n, p, s), s};
}

/**
 * Runs every axiom check on `cfg.trials` seeded random frameworks and counts
 * violations. Each iterative solver run of the main framework is also audited
 * against the bound properties.
 */
inline SurveyReport axiom_survey(const SurveyConfig &cfg) {
    SurveyReport rep;
    rep.config = cfg;
    for (auto a : all_axioms) rep.tallies.push_back({a, 0, 0, {}});
    auto record = [&](AxiomTally &t, const AxiomReport &r, std::size_t trial, std::uint64_t seed, double p,
                      const ArgumentationFramework &af) {
        if (r.holds) return;
        ++t.violating_frameworks;
        t.violating_pairs += r.violations.size();
        if (t.examples.size() < cfg.stored_per_axiom) t.examples.push_back({trial, seed, p, af, r.violations.front()});
    };

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        double p = 0.0;
        auto [af, seed] = survey_framework(cfg, trial, &p);
        const auto strengths = counting_strengths(af, cfg.counting);
        ++rep.solver_runs;
        if (!cfg.counting.direct)
            for (auto &msg : audit_bounds(af.attack_matrix(), strengths))
                rep.bound_failures.push_back("trial " + std::to_string(trial) + ": " + msg);
        const auto rank = derive_ranking(strengths, cfg.counting.resolved_tie_tol());
        if (!cfg.counting.direct) {
            auto audit = [&](const ArgumentationFramework &g, const char *what) {
                const auto s2 = counting_strengths(g, cfg.counting);
                ++rep.solver_runs;
                for (auto &msg : audit_bounds(g.attack_matrix(), s2))
                    rep.bound_failures.push_back("trial " + std::to_string(trial) + " (" + what + "): " + msg);
            };
            audit(permute(af, random_permutation(af.size(), mix_seed(seed))), "relabeled");
            for (const auto &c : weak_connected_components(af)) audit(c, "component");
        }
        for (auto &t : rep.tallies) {
            AxiomReport r;
            if (t.axiom == Axiom::Ab)
                r = check_abstraction(af, cfg.counting, mix_seed(seed));
            else if (t.axiom == Axiom::In)
                r = check_independence(af, cfg.counting);
            else
                r = check_axiom(af, rank, t.axiom);
            record(t, r, trial, seed, p, af);
        }
    }
    return rep;
}

} // namespace argcount

#endif // ARGCOUNT_AXIOMS_HPP_
