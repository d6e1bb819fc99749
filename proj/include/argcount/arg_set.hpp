#ifndef ARGCOUNT_ARG_SET_HPP_
#define ARGCOUNT_ARG_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace argcount {

/// Thrown when a set or argument index does not fit the framework it is used with.
class InvalidSetError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/**
 * Packed subset of the argument indices {0, ..., n-1}.
 *
 * The same object doubles as the boolean indicator vector of the subset: bit i
 * set means argument i is a member. Bits past the universe size are always zero.
 */
class ArgSet {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    ArgSet() = default;

    explicit ArgSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

    ArgSet(std::size_t universe, std::initializer_list<std::size_t> members) : ArgSet(universe) {
        for (auto m : members) insert(m);
    }

    static ArgSet full(std::size_t universe) {
        ArgSet s(universe);
        for (auto &w : s.words_) w = ~word_type{0};
        s.trim();
        return s;
    }

    /// Builds the subset whose indicator is the low `universe` bits of `mask`.
    static ArgSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > word_bits)
            throw InvalidSetError("from_mask: universe larger than 64");
        if (universe < word_bits && (mask >> universe) != 0)
            throw InvalidSetError("from_mask: bits outside the universe");
        ArgSet s(universe);
        if (universe > 0) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(std::size_t i) const {
        check(i);
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void insert(std::size_t i) {
        check(i);
        words_[i / word_bits] |= word_type{1} << (i % word_bits);
    }

    void erase(std::size_t i) {
        check(i);
        words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Low 64 bits; only meaningful when universe() <= 64.
    std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            word_type w = words_[wi];
            while (w != 0) {
                out.push_back(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    ArgSet complement() const {
        ArgSet r(*this);
        for (auto &w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool is_subset_of(const ArgSet &o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const ArgSet &o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    ArgSet &operator|=(const ArgSet &o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    ArgSet &operator&=(const ArgSet &o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend ArgSet operator|(ArgSet a, const ArgSet &b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet &b) { return a &= b; }

    friend bool operator==(const ArgSet &, const ArgSet &) = default;

    /// Orders by the binary encoding, most significant argument first, so that
    /// sorting matches ascending subset enumeration.
    friend bool operator<(const ArgSet &a, const ArgSet &b) {
        if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    std::span<const word_type> words() const noexcept { return words_; }

private:
    static std::size_t word_count(std::size_t n) { return (n + word_bits - 1) / word_bits; }

    void check(std::size_t i) const {
        if (i >= universe_)
            throw InvalidSetError("argument index " + std::to_string(i) + " out of range for " +
                                  std::to_string(universe_) + " arguments");
    }

    void same_universe(const ArgSet &o) const {
        if (o.universe_ != universe_) throw InvalidSetError("set universes differ");
    }

    void trim() noexcept {
        if (universe_ % word_bits != 0 && !words_.empty())
            words_.back() &= (word_type{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<word_type> words_;
};

/// Boolean column-vector view of a subset. Shares the packed representation of ArgSet.
using BoolSet = ArgSet;

} // namespace argcount

#endif // ARGCOUNT_ARG_SET_HPP_
