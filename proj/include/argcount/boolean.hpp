#ifndef ARGCOUNT_BOOLEAN_HPP_
#define ARGCOUNT_BOOLEAN_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arg_set.hpp"
#include "framework.hpp"

namespace argcount {

/// Square boolean matrix stored as packed rows.
class BooleanMatrix {
public:
    BooleanMatrix() = default;

    explicit BooleanMatrix(std::vector<ArgSet> rows) : rows_(std::move(rows)) {
        for (const auto &r : rows_)
            if (r.universe() != rows_.size()) throw std::invalid_argument("boolean matrix must be square");
        if (rows_.size() <= 64) {
            masks_.reserve(rows_.size());
            for (const auto &r : rows_) masks_.push_back(r.mask());
        }
    }

    /// Boolean view of an attack matrix: row i holds the attackers of argument i.
    static BooleanMatrix from(const AttackMatrix &a) {
        std::vector<ArgSet> rows;
        rows.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            ArgSet r(a.size());
            for (auto j : a.row(i)) r.insert(j);
            rows.push_back(std::move(r));
        }
        return BooleanMatrix(std::move(rows));
    }

    static BooleanMatrix from(const ArgumentationFramework &af) { return from(af.attack_matrix()); }

    std::size_t size() const noexcept { return rows_.size(); }
    const ArgSet &row(std::size_t i) const { return rows_.at(i); }
    bool at(std::size_t i, std::size_t j) const { return rows_.at(i).contains(j); }

    BooleanMatrix transposed() const {
        std::vector<ArgSet> rows(size(), ArgSet(size()));
        for (std::size_t i = 0; i < size(); ++i)
            for (auto j : rows_[i].members()) rows[j].insert(i);
        return BooleanMatrix(std::move(rows));
    }

    /// OR-AND product on 64-bit masks; only for matrices with at most 64 rows.
    std::uint64_t product_mask(std::uint64_t g) const {
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < masks_.size(); ++i)
            if (masks_[i] & g) out |= std::uint64_t{1} << i;
        return out;
    }

    bool has_masks() const noexcept { return masks_.size() == rows_.size(); }

private:
    std::vector<ArgSet> rows_;
    std::vector<std::uint64_t> masks_;
};

namespace detail {
inline void check_vector(const BooleanMatrix &m, const BoolSet &g) {
    if (g.universe() != m.size()) throw InvalidSetError("boolean vector length does not match matrix");
}

inline int sgn(long long x) {
    if (x < 0) throw std::logic_error("sgn applied to a negative value from nonnegative operands");
    return x > 0 ? 1 : 0;
}

inline int sgn(double x) {
    if (x < 0.0) throw std::logic_error("sgn applied to a negative value from nonnegative operands");
    return x > 0.0 ? 1 : 0;
}
} // namespace detail

/// (M ⊙ g)_i = OR_j (m_ij AND g_j), evaluated word-parallel per row.
inline BoolSet bool_product(const BooleanMatrix &m, const BoolSet &g) {
    detail::check_vector(m, g);
    BoolSet out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.row(i).intersects(g)) out.insert(i);
    return out;
}

/// sgn(M · g) with integer arithmetic; equal to bool_product.
inline BoolSet bool_product_arith(const BooleanMatrix &m, const BoolSet &g) {
    detail::check_vector(m, g);
    BoolSet out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < m.size(); ++j) acc += static_cast<long long>(m.at(i, j)) * (g.contains(j) ? 1 : 0);
        if (detail::sgn(acc)) out.insert(i);
    }
    return out;
}

/// sgn(alpha (A/N) · g) in floating point; sgn ignores the positive scaling.
inline BoolSet scaled_sign_product(const AttackMatrix &a, double alpha, const BoolSet &g) {
    if (g.universe() != a.size()) throw InvalidSetError("boolean vector length does not match matrix");
    std::vector<double> x(a.size()), y(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) x[j] = g.contains(j) ? 1.0 : 0.0;
    a.scaled_normalized_multiply(alpha, x, y);
    BoolSet out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (detail::sgn(y[i])) out.insert(i);
    return out;
}

/// Cellwise negation, e - g.
inline BoolSet bool_negation(const BoolSet &g) { return g.complement(); }

/// Indicator of R+(S): A ⊙ g.
inline BoolSet forward_image(const BooleanMatrix &a, const BoolSet &g) { return bool_product(a, g); }

/// Indicator of R-(S): A^T ⊙ g. Pass the transposed matrix when calling repeatedly.
inline BoolSet backward_image(const BooleanMatrix &a, const BoolSet &g) { return bool_product(a.transposed(), g); }

/// Characteristic function ¬(A ⊙ ¬(A ⊙ g)): the arguments defended by g.
inline BoolSet characteristic(const BooleanMatrix &a, const BoolSet &g) {
    return bool_negation(bool_product(a, bool_negation(bool_product(a, g))));
}

/// Every iterate g(0) = 0, g(k) = F(g(k-1)) up to and including the first repeat.
inline std::vector<BoolSet> grounded_iterates(const BooleanMatrix &a) {
    std::vector<BoolSet> seq{BoolSet(a.size())};
    for (;;) {
        auto next = characteristic(a, seq.back());
        const bool done = next == seq.back();
        seq.push_back(std::move(next));
        if (done) return seq;
    }
}

/// Grounded extension as the least fixpoint of the characteristic function.
inline BoolSet grounded_fixpoint(const BooleanMatrix &a) { return grounded_iterates(a).back(); }

/// Stable operator ¬(A ⊙ g): arguments not attacked by g.
inline BoolSet stable_operator(const BooleanMatrix &a, const BoolSet &g) { return bool_negation(bool_product(a, g)); }

/// All conflict-free fixpoints of the stable operator, in ascending subset order.
inline std::vector<BoolSet> find_stable_by_operator(const BooleanMatrix &a, std::size_t cap = default_subset_cap) {
    const std::size_t n = a.size();
    if (n > cap || n > 63) throw SizeLimitError(n, std::min<std::size_t>(cap, 63));
    const std::uint64_t all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    std::vector<BoolSet> out;
    for (std::uint64_t g = 0;; ++g) {
        const std::uint64_t hit = a.product_mask(g);
        const bool conflict_free = (hit & g) == 0;
        if (conflict_free && ((~hit) & all) == g) out.push_back(BoolSet::from_mask(n, g));
        if (g == all) break;
    }
    return out;
}

} // namespace argcount

#endif // ARGCOUNT_BOOLEAN_HPP_
