#ifndef ARGCOUNT_GENERATE_HPP_
#define ARGCOUNT_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "framework.hpp"

namespace argcount {

/// Uniform double in [0,1) from the top 53 bits of one 64-bit draw.
inline double unit_draw(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, bound) by rejection, independent of the standard library's distributions.
inline std::uint64_t bounded_draw(std::mt19937_64 &rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("bounded_draw: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

/// SplitMix64 finalizer; used to derive per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Random framework with arguments a1..an. Every ordered pair (i, j), self pairs
 * included, is visited attacker-major and becomes an attack when one
 * mt19937_64 draw mapped to [0,1) falls below p.
 */
inline ArgumentationFramework generate_random(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("attack probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    std::vector<Attack> attacks;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (unit_draw(rng) < p) attacks.push_back({i, j});
    return {std::move(names), std::move(attacks)};
}

/// Same framework with argument i moved to position perm[i].
inline ArgumentationFramework permute(const ArgumentationFramework &af, const std::vector<std::size_t> &perm) {
    if (perm.size() != af.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::string> names(af.size());
    std::vector<bool> hit(af.size(), false);
    for (std::size_t i = 0; i < af.size(); ++i) {
        if (perm[i] >= af.size() || hit[perm[i]]) throw std::invalid_argument("not a permutation");
        hit[perm[i]] = true;
        names[perm[i]] = af.name(i);
    }
    std::vector<Attack> att;
    att.reserve(af.attacks().size());
    for (const auto &a : af.attacks()) att.push_back({perm[a.attacker], perm[a.target]});
    return {std::move(names), std::move(att)};
}

/// Fisher-Yates permutation of 0..n-1 driven by bounded_draw.
inline std::vector<std::size_t> random_permutation(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[bounded_draw(rng, i)]);
    return p;
}

} // namespace argcount

#endif // ARGCOUNT_GENERATE_HPP_
