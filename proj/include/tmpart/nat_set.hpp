// nat_set.hpp
// Bounded sets of nonnegative integers backed by a packed bit-vector,
// plus the Thue-Morse classification (A = even digit sum, B = odd).

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tmpart {

enum class TmClass { EvenOnes, OddOnes };

constexpr TmClass tm_class(std::uint64_t n) noexcept {
    return (std::popcount(n) & 1) == 0 ? TmClass::EvenOnes : TmClass::OddOnes;
}

constexpr TmClass complement(TmClass c) noexcept {
    return c == TmClass::EvenOnes ? TmClass::OddOnes : TmClass::EvenOnes;
}

const char* to_string(TmClass c) noexcept;

// Immutable finite set S with an explicit bound; every member is <= bound.
// Equality compares members only, so two sets with different bounds but the
// same elements are equal.
class NatSet {
public:
    using Word = std::uint64_t;
    static constexpr unsigned kWordBits = 64;

    // Empty set, bound 0.
    NatSet() : bound_(0), words_(1, 0) {}

    // Bound defaults to the largest element (0 for the empty set).
    static NatSet from_elements(std::span<const std::uint64_t> elems);
    static NatSet from_elements(std::initializer_list<std::uint64_t> elems);
    // Throws std::invalid_argument if an element exceeds bound.
    static NatSet from_elements(std::span<const std::uint64_t> elems, std::uint64_t bound);
    // [lo, hi]; empty when lo > hi.
    static NatSet interval(std::uint64_t lo, std::uint64_t hi);
    // {n in [0, bound] : tm_class(n) == cls}
    static NatSet tm_range(std::uint64_t bound, TmClass cls);

    std::uint64_t bound() const noexcept { return bound_; }

    // Characteristic function; 0 for anything above bound.
    bool contains(std::uint64_t n) const noexcept {
        if (n > bound_) return false;
        return (words_[n / kWordBits] >> (n % kWordBits)) & 1U;
    }
    int chi(std::int64_t n) const noexcept {
        return n >= 0 && contains(static_cast<std::uint64_t>(n)) ? 1 : 0;
    }

    std::uint64_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    // Requires !empty().
    std::uint64_t min() const;
    std::uint64_t max() const;
    std::vector<std::uint64_t> elements() const;

    std::span<const Word> words() const noexcept { return words_; }

    NatSet shift(std::uint64_t t) const;
    // {m - s}; throws std::invalid_argument if some member exceeds m.
    NatSet reflect(std::uint64_t m) const;
    // S ∩ [lo, hi], bound min(bound, hi).
    NatSet slice(std::uint64_t lo, std::uint64_t hi) const;

    friend NatSet operator|(const NatSet& a, const NatSet& b);
    friend NatSet operator&(const NatSet& a, const NatSet& b);
    // a \ b
    friend NatSet operator-(const NatSet& a, const NatSet& b);
    friend bool operator==(const NatSet& a, const NatSet& b) noexcept;

private:
    explicit NatSet(std::uint64_t bound);
    void set(std::uint64_t n) noexcept { words_[n / kWordBits] |= Word{1} << (n % kWordBits); }

    std::uint64_t bound_;
    std::vector<Word> words_;
};

// Thue-Morse prefix A_l (EvenOnes) or B_l (OddOnes); bound 2^l - 1, 1 <= l <= 32.
NatSet tm_prefix(unsigned l, TmClass cls);

}  // namespace tmpart
