#ifndef ARGCOUNT_EXTENSIONS_HPP_
#define ARGCOUNT_EXTENSIONS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "arg_set.hpp"
#include "framework.hpp"

namespace argcount {

enum class SemanticsKind { conflict_free, admissible, complete, grounded, preferred, stable };

inline constexpr std::array<SemanticsKind, 6> all_semantics{SemanticsKind::conflict_free, SemanticsKind::admissible,
                                                            SemanticsKind::complete,      SemanticsKind::grounded,
                                                            SemanticsKind::preferred,     SemanticsKind::stable};

inline std::string_view to_string(SemanticsKind k) {
    switch (k) {
    case SemanticsKind::conflict_free: return "conflict-free";
    case SemanticsKind::admissible: return "admissible";
    case SemanticsKind::complete: return "complete";
    case SemanticsKind::grounded: return "grounded";
    case SemanticsKind::preferred: return "preferred";
    case SemanticsKind::stable: return "stable";
    }
    return "?";
}

inline std::optional<SemanticsKind> parse_semantics(std::string_view s) {
    for (auto k : all_semantics)
        if (to_string(k) == s) return k;
    if (s == "cf") return SemanticsKind::conflict_free;
    return std::nullopt;
}

namespace detail {

/// Attack relation as 64-bit masks for the exhaustive scan.
struct MaskRelation {
    std::size_t n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> attackers; // attackers[x]: R-(x)
    std::vector<std::uint64_t> targets;   // targets[x]: R+(x)

    explicit MaskRelation(const ArgumentationFramework &af) : n(af.size()), attackers(n, 0), targets(n, 0) {
        all = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
        for (const auto &a : af.attacks()) {
            attackers[a.target] |= std::uint64_t{1} << a.attacker;
            targets[a.attacker] |= std::uint64_t{1} << a.target;
        }
    }

    std::uint64_t attacked_by(std::uint64_t s) const {
        std::uint64_t out = 0;
        for (std::uint64_t w = s; w != 0; w &= w - 1) out |= targets[static_cast<std::size_t>(__builtin_ctzll(w))];
        return out;
    }

    bool conflict_free(std::uint64_t s) const { return (attacked_by(s) & s) == 0; }

    /// Arguments all of whose attackers are hit by s.
    std::uint64_t defended(std::uint64_t s) const {
        const std::uint64_t hit = attacked_by(s);
        std::uint64_t out = 0;
        for (std::size_t x = 0; x < n; ++x)
            if ((attackers[x] & ~hit) == 0) out |= std::uint64_t{1} << x;
        return out;
    }
};

inline std::vector<std::uint64_t> maximal_only(const std::vector<std::uint64_t> &sets) {
    std::vector<std::uint64_t> out;
    for (auto s : sets) {
        bool maximal = true;
        for (auto t : sets)
            if (t != s && (s & ~t) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(s);
    }
    return out;
}

} // namespace detail

/**
 * All subsets satisfying the given semantics, in ascending binary order
 * (bit i is argument i). The empty set counts as admissible and complete when
 * it meets the definition.
 */
inline std::vector<ArgSet> enumerate(const ArgumentationFramework &af, SemanticsKind kind,
                                     std::size_t cap = default_subset_cap) {
    const std::size_t n = af.size();
    if (n > cap || n > 63) throw SizeLimitError(n, std::min<std::size_t>(cap, 63));
    const detail::MaskRelation rel(af);

    std::vector<std::uint64_t> hits;
    for (std::uint64_t s = 0;; ++s) {
        bool ok = false;
        switch (kind) {
        case SemanticsKind::conflict_free: ok = rel.conflict_free(s); break;
        case SemanticsKind::admissible: ok = rel.conflict_free(s) && (s & ~rel.defended(s)) == 0; break;
        // Maximal admissible sets are exactly the maximal complete ones; the latter are fewer.
        case SemanticsKind::complete:
        case SemanticsKind::preferred:
        case SemanticsKind::grounded: ok = rel.conflict_free(s) && rel.defended(s) == s; break;
        case SemanticsKind::stable: ok = (~rel.attacked_by(s) & rel.all) == s; break;
        }
        if (ok) hits.push_back(s);
        if (s == rel.all) break;
    }

    if (kind == SemanticsKind::preferred) hits = detail::maximal_only(hits);
    if (kind == SemanticsKind::grounded) {
        std::uint64_t meet = rel.all;
        for (auto s : hits) meet &= s;
        if (std::find(hits.begin(), hits.end(), meet) == hits.end())
            throw std::logic_error("complete extensions have no least element");
        hits = {meet};
    }

    std::vector<ArgSet> out;
    out.reserve(hits.size());
    for (auto s : hits) out.push_back(ArgSet::from_mask(n, s));
    return out;
}

/// Membership test for a single set, evaluated with the set-valued operators.
inline bool verify(const ArgumentationFramework &af, SemanticsKind kind, const ArgSet &s,
                   std::size_t cap = default_subset_cap) {
    detail::check_set(af, s);
    auto characteristic = [&](const ArgSet &t) {
        ArgSet out(af.size());
        for (std::size_t x = 0; x < af.size(); ++x)
            if (defends(af, t, x)) out.insert(x);
        return out;
    };
    const bool cf = is_conflict_free(af, s);
    switch (kind) {
    case SemanticsKind::conflict_free: return cf;
    case SemanticsKind::admissible: return cf && s.is_subset_of(characteristic(s));
    case SemanticsKind::complete: return cf && s == characteristic(s);
    case SemanticsKind::stable: return s == attacked_by(af, s).complement();
    case SemanticsKind::grounded: {
        ArgSet g(af.size());
        for (;;) {
            auto next = characteristic(g);
            if (next == g) break;
            g = std::move(next);
        }
        return s == g;
    }
    case SemanticsKind::preferred: {
        if (!(cf && s.is_subset_of(characteristic(s)))) return false;
        for (const auto &t : enumerate(af, SemanticsKind::admissible, cap))
            if (t != s && s.is_subset_of(t)) return false;
        return true;
    }
    }
    return false;
}

} // namespace argcount

#endif // ARGCOUNT_EXTENSIONS_HPP_
