#ifndef ARGCOUNT_COUNTING_HPP_
#define ARGCOUNT_COUNTING_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "convergence.hpp"
#include "framework.hpp"

namespace argcount {

/// Raised when an integer walk count no longer fits in 64 bits.
class CountOverflowError : public std::overflow_error {
public:
    CountOverflowError(std::size_t length, std::size_t argument)
        : std::overflow_error("walk count overflows 64-bit integers at length " + std::to_string(length) +
                              " (argument index " + std::to_string(argument) + ")"),
          length_(length), argument_(argument) {}

    std::size_t length() const noexcept { return length_; }
    std::size_t argument() const noexcept { return argument_; }

private:
    std::size_t length_;
    std::size_t argument_;
};

/// Exact integer counts for the un-damped model.
struct IntCountVector {
    std::vector<std::int64_t> values;
    std::size_t length = 0;
};

/// Real-valued counts for the damped model.
struct CountVector {
    std::vector<double> values;
    std::size_t length = 0;
};

/// Converged (or categoriser) strengths together with the run that produced them.
struct StrengthVector {
    std::vector<double> values;
    double alpha = 0.0;
    double epsilon = 0.0;
    std::size_t iterations = 0;
    /// Infinity-norm change of every iteration, in order. Empty for the direct solve.
    std::vector<double> changes;
};

/// Iterative solve hit its cap. Carries the last iterate and its change.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(std::vector<double> last, double change, std::size_t iterations)
        : std::runtime_error("no convergence after " + std::to_string(iterations) +
                             " iterations (last change " + std::to_string(change) + ")"),
          last_(std::move(last)), change_(change), iterations_(iterations) {}

    const std::vector<double> &last_iterate() const noexcept { return last_; }
    double last_change() const noexcept { return change_; }
    std::size_t iterations() const noexcept { return iterations_; }

private:
    std::vector<double> last_;
    double change_;
    std::size_t iterations_;
};

/// Shortest decimal text that reads back to the same double.
inline std::string shortest_repr(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

namespace detail {

inline void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("damping factor alpha must lie in (0,1)");
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline void integer_step(const AttackMatrix &a, std::vector<std::int64_t> &cur, std::size_t length) {
    std::vector<std::int64_t> next(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t acc = 0;
        for (auto j : a.row(i))
            if (__builtin_add_overflow(acc, cur[j], &acc)) throw CountOverflowError(length, i);
        next[i] = acc;
    }
    cur = std::move(next);
}

} // namespace detail

/// A^length e: per argument, the number of walks of that length ending there.
inline IntCountVector graded_counts(const AttackMatrix &a, std::size_t length) {
    std::vector<std::int64_t> cur(a.size(), 1);
    for (std::size_t l = 1; l <= length; ++l) detail::integer_step(a, cur, l);
    return {std::move(cur), length};
}

/// Alternating sum of graded counts, sum_{l=0..k} (-1)^l A^l e, in exact integers.
inline IntCountVector simple_counting(const AttackMatrix &a, std::size_t k) {
    std::vector<std::int64_t> term(a.size(), 1), sum(a.size(), 1);
    for (std::size_t l = 1; l <= k; ++l) {
        detail::integer_step(a, term, l);
        for (std::size_t i = 0; i < sum.size(); ++i) {
            const bool bad = (l % 2 == 1) ? __builtin_sub_overflow(sum[i], term[i], &sum[i])
                                          : __builtin_add_overflow(sum[i], term[i], &sum[i]);
            if (bad) throw CountOverflowError(l, i);
        }
    }
    return {std::move(sum), k};
}

/// Truncated damped series sum_{l=0..k} (-1)^l alpha^l (A/N)^l e, summed term by term.
inline CountVector damped_partial(const AttackMatrix &a, double alpha, std::size_t k) {
    detail::check_alpha(alpha);
    const std::size_t n = a.size();
    std::vector<double> term(n, 1.0), next(n), sum(n, 1.0);
    for (std::size_t l = 1; l <= k; ++l) {
        a.scaled_normalized_multiply(alpha, term, next);
        term.swap(next);
        const double sign = (l % 2 == 1) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) sum[i] += sign * term[i];
    }
    return {std::move(sum), k};
}

/// One step of the recurrence v <- e - alpha (A/N) v.
inline std::vector<double> iterate_counting(const AttackMatrix &a, double alpha, std::span<const double> prev) {
    detail::check_alpha(alpha);
    if (prev.size() != a.size()) throw std::invalid_argument("iterate_counting: vector length mismatch");
    std::vector<double> out(a.size());
    a.scaled_normalized_multiply(alpha, prev, out);
    for (auto &v : out) v = 1.0 - v;
    return out;
}

/**
 * Counting semantics by fixed-point iteration from the all-ones vector.
 *
 * Stops at the first iteration whose infinity-norm change is at most epsilon.
 * `max_iter = 0` selects default_max_iterations(alpha, epsilon).
 */
inline StrengthVector solve_counting(const AttackMatrix &a, double alpha, double epsilon, std::size_t max_iter = 0) {
    detail::check_alpha(alpha);
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (max_iter == 0) max_iter = default_max_iterations(alpha, epsilon);

    StrengthVector out;
    out.alpha = alpha;
    out.epsilon = epsilon;
    std::vector<double> v(a.size(), 1.0);
    for (std::size_t k = 1; k <= max_iter; ++k) {
        auto next = iterate_counting(a, alpha, v);
        const double change = detail::max_abs_diff(next, v);
        out.changes.push_back(change);
        v = std::move(next);
        if (change <= epsilon) {
            out.values = std::move(v);
            out.iterations = k;
            return out;
        }
    }
    throw NonConvergenceError(std::move(v), out.changes.back(), max_iter);
}

/// Counting semantics as the solution of (I + alpha A/N) v = e, via sparse LU.
inline StrengthVector solve_counting_direct(const AttackMatrix &a, double alpha) {
    detail::check_alpha(alpha);
    const auto n = static_cast<Eigen::Index>(a.size());
    StrengthVector out;
    out.alpha = alpha;
    if (n == 0) return out;

    const double w = a.norm() == 0 ? 0.0 : alpha / static_cast<double>(a.norm());
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(a.size() + a.nonzeros());
    for (std::size_t i = 0; i < a.size(); ++i) {
        double diag = 1.0;
        for (auto j : a.row(i)) {
            if (j == i)
                diag += w;
            else
                trips.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), w);
        }
        trips.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), diag);
    }
    Eigen::SparseMatrix<double> m(n, n);
    m.setFromTriplets(trips.begin(), trips.end());
    m.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(m);
    if (lu.info() != Eigen::Success) throw std::runtime_error("direct solve: factorization failed");
    Eigen::VectorXd rhs = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw std::runtime_error("direct solve: back substitution failed");
    out.values.assign(x.data(), x.data() + n);
    return out;
}

/// Categoriser valuation v(x) = 1 / (1 + sum of v over direct attackers), iterated from all ones.
inline StrengthVector categoriser_valuation(const AttackMatrix &a, double epsilon, std::size_t max_iter = 100000) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (max_iter == 0) throw std::invalid_argument("max_iter must be at least 1");
    StrengthVector out;
    out.epsilon = epsilon;
    std::vector<double> v(a.size(), 1.0), sums(a.size()), next(a.size());
    for (std::size_t k = 1; k <= max_iter; ++k) {
        a.multiply<double>(v, sums);
        for (std::size_t i = 0; i < v.size(); ++i) next[i] = 1.0 / (1.0 + sums[i]);
        const double change = detail::max_abs_diff(next, v);
        out.changes.push_back(change);
        v.swap(next);
        if (change <= epsilon) {
            out.values = std::move(v);
            out.iterations = k;
            return out;
        }
    }
    throw NonConvergenceError(std::move(v), out.changes.back(), max_iter);
}

} // namespace argcount

#endif // ARGCOUNT_COUNTING_HPP_
