#ifndef ARGCOUNT_RANKING_HPP_
#define ARGCOUNT_RANKING_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arg_set.hpp"
#include "counting.hpp"

namespace argcount {

/**
 * Total preorder over arguments, stored as tie groups from best to worst.
 *
 * cmp(x, y) is `greater` when x ranks strictly above y.
 */
class Ranking {
public:
    Ranking() = default;

    Ranking(std::vector<std::vector<std::size_t>> groups, std::vector<double> values, double tie_tol)
        : groups_(std::move(groups)), values_(std::move(values)), tie_tol_(tie_tol), group_of_(values_.size(), 0) {
        std::vector<bool> seen(values_.size(), false);
        for (std::size_t g = 0; g < groups_.size(); ++g)
            for (auto x : groups_[g]) {
                if (x >= values_.size() || seen[x]) throw std::invalid_argument("tie groups must partition the arguments");
                seen[x] = true;
                group_of_[x] = g;
            }
        if (std::find(seen.begin(), seen.end(), false) != seen.end())
            throw std::invalid_argument("tie groups must cover every argument");
    }

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<std::vector<std::size_t>> &groups() const noexcept { return groups_; }
    const std::vector<double> &values() const noexcept { return values_; }
    double tie_tolerance() const noexcept { return tie_tol_; }
    std::size_t group_of(std::size_t x) const { return group_of_.at(x); }

    std::weak_ordering cmp(std::size_t x, std::size_t y) const { return group_of(y) <=> group_of(x); }

    bool at_least(std::size_t x, std::size_t y) const { return cmp(x, y) >= 0; }
    bool strictly_above(std::size_t x, std::size_t y) const { return cmp(x, y) > 0; }
    bool tied(std::size_t x, std::size_t y) const { return cmp(x, y) == 0; }

private:
    std::vector<std::vector<std::size_t>> groups_;
    std::vector<double> values_;
    double tie_tol_ = 0.0;
    std::vector<std::size_t> group_of_;
};

/**
 * Ranks arguments by descending value. Values within `tie_tol` of each other
 * share a group, closed transitively along the sorted order.
 */
inline Ranking derive_ranking(std::span<const double> values, double tie_tol) {
    if (!(tie_tol >= 0.0)) throw std::invalid_argument("tie tolerance must be nonnegative");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] > values[b]; });
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || values[order[k - 1]] - values[order[k]] > tie_tol) groups.emplace_back();
        groups.back().push_back(order[k]);
    }
    for (auto &g : groups) std::sort(g.begin(), g.end());
    return Ranking(std::move(groups), std::vector<double>(values.begin(), values.end()), tie_tol);
}

inline Ranking derive_ranking(const StrengthVector &v, double tie_tol) { return derive_ranking(v.values, tie_tol); }

/// Outcome of lifting a ranking to sets.
struct GroupComparison {
    enum class Relation { none, weak, strict };

    Relation relation = Relation::none;
    /// Injective mapping as (member of S2, its image in S1). Empty when relation is none.
    std::vector<std::pair<std::size_t, std::size_t>> witness;

    bool weak() const noexcept { return relation != Relation::none; }
    bool strict() const noexcept { return relation == Relation::strict; }
};

namespace detail {

struct MatchSearch {
    const Ranking &rank;
    const std::vector<std::size_t> &left;  // S2
    const std::vector<std::size_t> &right; // S1
    std::vector<int> used;
    std::vector<std::size_t> image;
    std::vector<std::size_t> first_weak;
    std::vector<std::size_t> strict_found;

    // Exhaustive: records the first complete mapping and the first one with a strict pair.
    bool search(std::size_t k, bool has_strict) {
        if (k == left.size()) {
            if (first_weak.empty() && !left.empty()) first_weak = image;
            if (has_strict) {
                strict_found = image;
                return true;
            }
            return false;
        }
        for (std::size_t r = 0; r < right.size(); ++r) {
            if (used[r] || !rank.at_least(right[r], left[k])) continue;
            used[r] = 1;
            image[k] = r;
            const bool stop = search(k + 1, has_strict || rank.strictly_above(right[r], left[k]));
            used[r] = 0;
            if (stop) return true;
        }
        return false;
    }
};

/// Kuhn augmenting-path matching of `left` into `right`, skipping one fixed pair when requested.
inline bool augmenting_match(const Ranking &rank, const std::vector<std::size_t> &left,
                             const std::vector<std::size_t> &right, std::vector<std::size_t> &image,
                             std::size_t skip_left, std::size_t skip_right) {
    const std::size_t none = right.size();
    std::vector<std::size_t> owner(right.size(), left.size());
    image.assign(left.size(), none);
    std::vector<int> visited;
    auto try_assign = [&](auto &&self, std::size_t l) -> bool {
        for (std::size_t r = 0; r < right.size(); ++r) {
            if (r == skip_right || visited[r] || !rank.at_least(right[r], left[l])) continue;
            visited[r] = 1;
            if (owner[r] == left.size() || self(self, owner[r])) {
                owner[r] = l;
                image[l] = r;
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < left.size(); ++l) {
        if (l == skip_left) continue;
        visited.assign(right.size(), 0);
        if (!try_assign(try_assign, l)) return false;
    }
    return true;
}

} // namespace detail

/**
 * S1 ≽ S2 iff some injective mapping δ: S2 -> S1 has δ(x) ≽ x for every x.
 * Strict when one such mapping also has |S1| > |S2| or a pair with δ(x) ≻ x;
 * all mappings are considered, not only the first one found.
 *
 * Small sets (S2 at most 8 members, S1 at most 12) are searched exhaustively;
 * larger ones use augmenting-path matching.
 */
inline GroupComparison group_compare(const Ranking &rank, const ArgSet &s1, const ArgSet &s2) {
    if (s1.universe() != rank.size() || s2.universe() != rank.size())
        throw InvalidSetError("group_compare: set universe does not match ranking");
    const auto right = s1.members();
    const auto left = s2.members();
    GroupComparison out;
    if (left.size() > right.size()) return out;

    auto to_witness = [&](const std::vector<std::size_t> &image) {
        std::vector<std::pair<std::size_t, std::size_t>> w;
        for (std::size_t k = 0; k < left.size(); ++k) w.emplace_back(left[k], right[image[k]]);
        return w;
    };

    const bool larger = right.size() > left.size();
    if (left.size() <= 8 && right.size() <= 12) {
        detail::MatchSearch ms{rank, left, right, std::vector<int>(right.size(), 0),
                               std::vector<std::size_t>(left.size(), 0), {}, {}};
        ms.search(0, larger);
        if (left.empty()) {
            out.relation = larger ? GroupComparison::Relation::strict : GroupComparison::Relation::weak;
            return out;
        }
        if (!ms.strict_found.empty()) {
            out.relation = GroupComparison::Relation::strict;
            out.witness = to_witness(ms.strict_found);
        } else if (!ms.first_weak.empty()) {
            out.relation = GroupComparison::Relation::weak;
            out.witness = to_witness(ms.first_weak);
        }
        return out;
    }

    std::vector<std::size_t> image;
    if (!detail::augmenting_match(rank, left, right, image, left.size(), right.size())) return out;
    out.relation = larger ? GroupComparison::Relation::strict : GroupComparison::Relation::weak;
    out.witness = to_witness(image);
    if (larger) return out;
    // Equal sizes: look for a perfect matching through some strict pair.
    for (std::size_t l = 0; l < left.size(); ++l)
        for (std::size_t r = 0; r < right.size(); ++r) {
            if (!rank.strictly_above(right[r], left[l])) continue;
            std::vector<std::size_t> rest;
            if (detail::augmenting_match(rank, left, right, rest, l, r)) {
                rest[l] = r;
                out.relation = GroupComparison::Relation::strict;
                out.witness = to_witness(rest);
                return out;
            }
        }
    return out;
}

} // namespace argcount

#endif // ARGCOUNT_RANKING_HPP_
