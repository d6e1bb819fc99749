#ifndef ARGCOUNT_CONVERGENCE_HPP_
#define ARGCOUNT_CONVERGENCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "framework.hpp"

namespace argcount {

/// Predicted iteration budget for the damped counting recurrence.
struct ConvergenceEstimate {
    double rho = 0.0;
    double k_max = 0.0;
    std::size_t k_max_ceil = 0;
};

/**
 * Iterations needed for the successive change (alpha * rho)^k to fall to epsilon:
 * k = log10(epsilon) / log10(alpha * rho).
 *
 * rho = 0 means the recurrence settles immediately and yields 1.
 */
inline ConvergenceEstimate estimate_iterations(double epsilon, double alpha, double rho) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0,1)");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
    if (!(rho >= 0.0) || rho > 1.0) throw std::invalid_argument("rho must lie in [0,1]");
    ConvergenceEstimate est;
    est.rho = rho;
    if (rho == 0.0) {
        est.k_max = 1.0;
        est.k_max_ceil = 1;
        return est;
    }
    const double rate = alpha * rho;
    if (rate >= 1.0) throw std::invalid_argument("alpha * rho must be below 1");
    est.k_max = std::log10(epsilon) / std::log10(rate);
    est.k_max_ceil = static_cast<std::size_t>(std::ceil(est.k_max));
    return est;
}

/// Default cap on solver iterations: ten times the worst-case (rho = 1) estimate, at least 1000.
inline std::size_t default_max_iterations(double alpha, double epsilon) {
    const auto est = estimate_iterations(std::min(epsilon, 0.5), alpha, 1.0);
    return std::max<std::size_t>(1000, 10 * est.k_max_ceil);
}

namespace detail {

/// Strongly connected components of the graph with an edge i -> j for each a_ij = 1.
inline std::vector<std::vector<std::size_t>> strong_components(const AttackMatrix &a) {
    const std::size_t n = a.size();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> out;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &f = call.back();
            auto row = a.row(f.v);
            if (f.next < row.size()) {
                auto w = row[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            const auto v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                out.push_back(std::move(comp));
            }
        }
    }
    return out;
}

} // namespace detail

/**
 * Spectral radius of the normalized attack matrix A / N.
 *
 * The matrix is block triangular over its strongly connected components, so the
 * radius is the largest radius of an irreducible diagonal block. Trivial blocks
 * contribute 1/N with a self-attack and 0 otherwise, which makes nilpotent
 * (acyclic) matrices report exactly 0. Each nontrivial block B runs power
 * iteration on B + I, which is primitive, from the all-ones vector and stops
 * once the Collatz-Wielandt bounds min_i (Mx)_i / x_i <= rho(M) <= max_i (Mx)_i / x_i
 * are within `tol` of each other.
 */
inline double spectral_radius(const AttackMatrix &a, double tol = 1e-10, std::size_t max_iter = 1000000) {
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
    if (a.norm() == 0) return 0.0;
    const double inv_n = 1.0 / static_cast<double>(a.norm());
    double rho = 0.0;
    std::vector<std::size_t> local(a.size(), a.size());
    for (const auto &comp : detail::strong_components(a)) {
        if (comp.size() == 1) {
            if (a.entry(comp[0], comp[0]) != 0) rho = std::max(rho, inv_n);
            continue;
        }
        for (std::size_t k = 0; k < comp.size(); ++k) local[comp[k]] = k;
        const std::size_t m = comp.size();
        std::vector<double> x(m, 1.0), y(m);
        double lo = 0.0, hi = 0.0;
        for (std::size_t it = 0; it < max_iter; ++it) {
            for (std::size_t k = 0; k < m; ++k) {
                double acc = 0.0;
                for (auto j : a.row(comp[k]))
                    if (local[j] < m && comp[local[j]] == j) acc += x[local[j]];
                y[k] = x[k] + acc * inv_n;
            }
            lo = std::numeric_limits<double>::infinity();
            hi = 0.0;
            double top = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double r = y[k] / x[k];
                lo = std::min(lo, r);
                hi = std::max(hi, r);
                top = std::max(top, y[k]);
            }
            if (hi - lo <= tol) break;
            for (std::size_t k = 0; k < m; ++k) x[k] = y[k] / top;
        }
        rho = std::max(rho, 0.5 * (lo + hi) - 1.0);
        for (auto v : comp) local[v] = a.size();
    }
    return std::clamp(rho, 0.0, 1.0);
}

} // namespace argcount

#endif // ARGCOUNT_CONVERGENCE_HPP_
