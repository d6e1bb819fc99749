#ifndef ARGCOUNT_FRAMEWORK_HPP_
#define ARGCOUNT_FRAMEWORK_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arg_set.hpp"

namespace argcount {

/// Raised when a framework violates its structural invariants.
class FrameworkError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exhaustive subset scans when the framework exceeds the configured size cap.
class SizeLimitError : public std::length_error {
public:
    SizeLimitError(std::size_t n, std::size_t cap)
        : std::length_error(std::to_string(n) + " arguments exceed the subset-scan cap of " + std::to_string(cap)),
          n_(n), cap_(cap) {}

    std::size_t arguments() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t n_;
    std::size_t cap_;
};

/// Default cap for exhaustive 2^n subset scans.
inline constexpr std::size_t default_subset_cap = 24;

/// Directed attack `attacker -> target`, both as argument indices.
struct Attack {
    std::size_t attacker;
    std::size_t target;

    friend auto operator<=>(const Attack &, const Attack &) = default;
};

/**
 * Attack matrix with a_ij = 1 iff argument j attacks argument i.
 *
 * Row i therefore lists the direct attackers of argument i. Rows are stored
 * sparse (ascending column indices); frameworks with fewer than
 * `dense_threshold` arguments additionally keep a dense copy. Both layouts sum
 * a row in ascending column order, so products are bit-identical either way.
 */
class AttackMatrix {
public:
    static constexpr std::size_t dense_threshold = 64;

    AttackMatrix() = default;

    /// `rows[i]` holds the attackers of argument i; each row must be sorted and duplicate free.
    AttackMatrix(std::size_t n, std::vector<std::vector<std::size_t>> rows) : n_(n) {
        if (rows.size() != n) throw FrameworkError("attack matrix needs one row per argument");
        row_start_.assign(1, 0);
        row_start_.reserve(n + 1);
        for (const auto &r : rows) {
            for (auto j : r) {
                if (j >= n) throw FrameworkError("attack matrix column out of range");
                cols_.push_back(j);
            }
            row_start_.push_back(cols_.size());
            norm_ = std::max<std::int64_t>(norm_, static_cast<std::int64_t>(r.size()));
        }
        if (n < dense_threshold) {
            dense_.assign(n * n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (auto j : row(i)) dense_[i * n + j] = 1;
        }
    }

    std::size_t size() const noexcept { return n_; }

    /// Normalization factor N: the infinity norm (largest row sum).
    std::int64_t norm() const noexcept { return norm_; }

    bool is_dense() const noexcept { return !dense_.empty() || n_ == 0; }

    std::span<const std::size_t> row(std::size_t i) const {
        return {cols_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
    }

    std::size_t row_sum(std::size_t i) const { return row_start_[i + 1] - row_start_[i]; }

    int entry(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_) throw InvalidSetError("matrix index out of range");
        if (!dense_.empty()) return dense_[i * n_ + j];
        auto r = row(i);
        return std::binary_search(r.begin(), r.end(), j) ? 1 : 0;
    }

    /// Entry of the normalized matrix A / N; the zero matrix when N = 0.
    double normalized(std::size_t i, std::size_t j) const {
        return norm_ == 0 ? 0.0 : static_cast<double>(entry(i, j)) / static_cast<double>(norm_);
    }

    std::size_t nonzeros() const noexcept { return cols_.size(); }

    /// y = A x with a fixed ascending summation order per row.
    template <typename T>
    void multiply(std::span<const T> x, std::span<T> y) const {
        if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("multiply: dimension mismatch");
        if (!dense_.empty()) {
            for (std::size_t i = 0; i < n_; ++i) {
                T acc{};
                const auto *r = dense_.data() + i * n_;
                for (std::size_t j = 0; j < n_; ++j)
                    if (r[j]) acc += x[j];
                y[i] = acc;
            }
            return;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            T acc{};
            for (auto j : row(i)) acc += x[j];
            y[i] = acc;
        }
    }

    /// y = scale * (A / N) x; leaves y zero when N = 0.
    void scaled_normalized_multiply(double scale, std::span<const double> x, std::span<double> y) const {
        multiply<double>(x, y);
        if (norm_ == 0) {
            std::fill(y.begin(), y.end(), 0.0);
            return;
        }
        const double n = static_cast<double>(norm_);
        for (auto &v : y) v = scale * (v / n);
    }

private:
    std::size_t n_ = 0;
    std::int64_t norm_ = 0;
    std::vector<std::size_t> row_start_{0};
    std::vector<std::size_t> cols_;
    std::vector<std::uint8_t> dense_;
};

/**
 * Immutable abstract argumentation framework: named arguments plus an attack
 * relation. Argument indices follow the order of `names`.
 *
 * Self-attacks and mutual attacks are ordinary members of the relation.
 */
class ArgumentationFramework {
public:
    ArgumentationFramework() : cache_(std::make_shared<MatrixCache>()) {}

    ArgumentationFramework(std::vector<std::string> names, std::vector<Attack> attacks)
        : names_(std::move(names)), attacks_(std::move(attacks)), cache_(std::make_shared<MatrixCache>()) {
        const std::size_t n = names_.size();
        index_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (names_[i].empty()) throw FrameworkError("argument names must be nonempty");
            if (!index_.emplace(names_[i], i).second)
                throw FrameworkError("duplicate argument name '" + names_[i] + "'");
        }
        std::sort(attacks_.begin(), attacks_.end());
        if (std::adjacent_find(attacks_.begin(), attacks_.end()) != attacks_.end())
            throw FrameworkError("attack relation contains a duplicate pair");
        attackers_.resize(n);
        targets_.resize(n);
        for (const auto &a : attacks_) {
            if (a.attacker >= n || a.target >= n) throw FrameworkError("attack references an unknown argument");
            attackers_[a.target].push_back(a.attacker);
            targets_[a.attacker].push_back(a.target);
        }
        for (auto &v : attackers_) std::sort(v.begin(), v.end());
    }

    /// Convenience constructor from attack pairs given by name.
    static ArgumentationFramework from_names(std::vector<std::string> names,
                                             const std::vector<std::pair<std::string, std::string>> &attacks) {
        std::unordered_map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], i);
        std::vector<Attack> att;
        att.reserve(attacks.size());
        for (const auto &[from, to] : attacks) {
            auto f = idx.find(from), t = idx.find(to);
            if (f == idx.end() || t == idx.end())
                throw FrameworkError("attack (" + from + ", " + to + ") names an undeclared argument");
            att.push_back({f->second, t->second});
        }
        return {std::move(names), std::move(att)};
    }

    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string> &names() const noexcept { return names_; }
    const std::string &name(std::size_t i) const { return names_.at(i); }

    std::optional<std::size_t> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require_index(std::string_view name) const {
        if (auto i = index_of(name)) return *i;
        throw InvalidSetError("unknown argument '" + std::string(name) + "'");
    }

    /// Attack pairs sorted by (attacker, target).
    const std::vector<Attack> &attacks() const noexcept { return attacks_; }

    bool has_attack(std::size_t attacker, std::size_t target) const {
        const auto &t = targets_.at(attacker);
        return std::find(t.begin(), t.end(), target) != t.end();
    }

    /// Direct attackers of x, ascending.
    std::span<const std::size_t> attackers_of(std::size_t x) const { return attackers_.at(x); }
    /// Arguments directly attacked by x, ascending.
    std::span<const std::size_t> targets_of(std::size_t x) const { return targets_.at(x); }

    /// Builds the set of the given argument names.
    ArgSet set_of(std::initializer_list<std::string_view> members) const {
        ArgSet s(size());
        for (auto m : members) s.insert(require_index(m));
        return s;
    }

    std::vector<std::string> names_of(const ArgSet &s) const {
        std::vector<std::string> out;
        for (auto i : s.members()) out.push_back(names_.at(i));
        return out;
    }

    /// Attack matrix, built on first use and shared between copies.
    const AttackMatrix &attack_matrix() const {
        std::call_once(cache_->once, [this] {
            cache_->matrix = AttackMatrix(size(), attackers_);
        });
        return cache_->matrix;
    }

    friend bool operator==(const ArgumentationFramework &a, const ArgumentationFramework &b) {
        return a.names_ == b.names_ && a.attacks_ == b.attacks_;
    }

private:
    struct MatrixCache {
        std::once_flag once;
        AttackMatrix matrix;
    };

    std::vector<std::string> names_;
    std::vector<Attack> attacks_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<std::vector<std::size_t>> targets_;
    std::unordered_map<std::string, std::size_t> index_;
    std::shared_ptr<MatrixCache> cache_;
};

inline AttackMatrix build_attack_matrix(const ArgumentationFramework &af) { return af.attack_matrix(); }

namespace detail {
inline void check_set(const ArgumentationFramework &af, const ArgSet &s) {
    if (s.universe() != af.size())
        throw InvalidSetError("set over " + std::to_string(s.universe()) + " arguments used with a framework of " +
                              std::to_string(af.size()));
}
inline void check_arg(const ArgumentationFramework &af, std::size_t x) {
    if (x >= af.size()) throw InvalidSetError("argument index " + std::to_string(x) + " out of range");
}
} // namespace detail

/// R-(S): arguments attacking some member of S.
inline ArgSet attackers(const ArgumentationFramework &af, const ArgSet &s) {
    detail::check_set(af, s);
    ArgSet out(af.size());
    for (auto y : s.members())
        for (auto x : af.attackers_of(y)) out.insert(x);
    return out;
}

/// R+(S): arguments attacked by some member of S.
inline ArgSet attacked_by(const ArgumentationFramework &af, const ArgSet &s) {
    detail::check_set(af, s);
    ArgSet out(af.size());
    for (auto y : s.members())
        for (auto x : af.targets_of(y)) out.insert(x);
    return out;
}

/// D(x) = R-(R-(x)): arguments attacking an attacker of x.
inline ArgSet defenders_of(const ArgumentationFramework &af, std::size_t x) {
    detail::check_arg(af, x);
    ArgSet s(af.size());
    s.insert(x);
    return attackers(af, attackers(af, s));
}

inline bool is_conflict_free(const ArgumentationFramework &af, const ArgSet &s) {
    return !s.intersects(attackers(af, s));
}

/// True iff every attacker of x is attacked by some member of S.
inline bool defends(const ArgumentationFramework &af, const ArgSet &s, std::size_t x) {
    detail::check_arg(af, x);
    ArgSet single(af.size());
    single.insert(x);
    return attackers(af, single).is_subset_of(attacked_by(af, s));
}

/// Framework restricted to `keep`, preserving the parent's argument order.
inline ArgumentationFramework induced_subframework(const ArgumentationFramework &af, const ArgSet &keep) {
    detail::check_set(af, keep);
    std::vector<std::size_t> local(af.size(), af.size());
    std::vector<std::string> names;
    for (auto i : keep.members()) {
        local[i] = names.size();
        names.push_back(af.name(i));
    }
    std::vector<Attack> att;
    for (const auto &a : af.attacks())
        if (keep.contains(a.attacker) && keep.contains(a.target)) att.push_back({local[a.attacker], local[a.target]});
    return {std::move(names), std::move(att)};
}

/// Member sets of the weakly connected components, ordered by smallest member.
inline std::vector<ArgSet> component_sets(const ArgumentationFramework &af) {
    const std::size_t n = af.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto &a : af.attacks()) {
        auto r1 = find(a.attacker), r2 = find(a.target);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
    }
    std::vector<ArgSet> out;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = find(i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.emplace_back(n);
        }
        out[slot[r]].insert(i);
    }
    return out;
}

inline std::vector<ArgumentationFramework> weak_connected_components(const ArgumentationFramework &af) {
    std::vector<ArgumentationFramework> out;
    for (const auto &c : component_sets(af)) out.push_back(induced_subframework(af, c));
    return out;
}

} // namespace argcount

#endif // ARGCOUNT_FRAMEWORK_HPP_
