#include "tmpart/nat_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tmpart {

const char* to_string(TmClass c) noexcept {
    return c == TmClass::EvenOnes ? "EVEN_ONES" : "ODD_ONES";
}

NatSet::NatSet(std::uint64_t bound) : bound_(bound), words_(bound / kWordBits + 1, 0) {}

NatSet NatSet::from_elements(std::span<const std::uint64_t> elems) {
    std::uint64_t bound = 0;
    for (auto e : elems) bound = std::max(bound, e);
    return from_elements(elems, bound);
}

NatSet NatSet::from_elements(std::initializer_list<std::uint64_t> elems) {
    return from_elements(std::span<const std::uint64_t>(elems.begin(), elems.size()));
}

NatSet NatSet::from_elements(std::span<const std::uint64_t> elems, std::uint64_t bound) {
    NatSet s(bound);
    for (auto e : elems) {
        if (e > bound)
            throw std::invalid_argument("element " + std::to_string(e) + " exceeds bound " +
                                        std::to_string(bound));
        s.set(e);
    }
    return s;
}

NatSet NatSet::interval(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) return NatSet{};
    NatSet s(hi);
    for (std::uint64_t n = lo; n <= hi; ++n) s.set(n);
    return s;
}

NatSet NatSet::tm_range(std::uint64_t bound, TmClass cls) {
    NatSet s(bound);
    for (std::uint64_t n = 0; n <= bound; ++n)
        if (tm_class(n) == cls) s.set(n);
    return s;
}

std::uint64_t NatSet::size() const noexcept {
    std::uint64_t total = 0;
    for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
    return total;
}

std::uint64_t NatSet::min() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(words_[i]));
    throw std::logic_error("min() of empty set");
}

std::uint64_t NatSet::max() const {
    for (std::size_t i = words_.size(); i-- > 0;)
        if (words_[i])
            return i * kWordBits + (kWordBits - 1) - static_cast<std::uint64_t>(std::countl_zero(words_[i]));
    throw std::logic_error("max() of empty set");
}

std::vector<std::uint64_t> NatSet::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        Word w = words_[i];
        while (w) {
            out.push_back(i * kWordBits + static_cast<std::uint64_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

NatSet NatSet::shift(std::uint64_t t) const {
    NatSet out(bound_ + t);
    for (auto e : elements()) out.set(e + t);
    return out;
}

NatSet NatSet::reflect(std::uint64_t m) const {
    NatSet out(m);
    if (empty()) return out;
    if (max() > m)
        throw std::invalid_argument("reflect: element " + std::to_string(max()) + " exceeds " +
                                    std::to_string(m));
    for (auto e : elements()) out.set(m - e);
    return out;
}

NatSet NatSet::slice(std::uint64_t lo, std::uint64_t hi) const {
    NatSet out(std::min(bound_, hi));
    for (auto e : elements())
        if (e >= lo && e <= hi) out.set(e);
    return out;
}

NatSet operator|(const NatSet& a, const NatSet& b) {
    NatSet out(std::max(a.bound_, b.bound_));
    for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] |= a.words_[i];
    for (std::size_t i = 0; i < b.words_.size(); ++i) out.words_[i] |= b.words_[i];
    return out;
}

NatSet operator&(const NatSet& a, const NatSet& b) {
    NatSet out(std::min(a.bound_, b.bound_));
    for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
    return out;
}

NatSet operator-(const NatSet& a, const NatSet& b) {
    NatSet out = a;
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) out.words_[i] &= ~b.words_[i];
    return out;
}

bool operator==(const NatSet& a, const NatSet& b) noexcept {
    const auto& lo = a.words_.size() <= b.words_.size() ? a.words_ : b.words_;
    const auto& hi = a.words_.size() <= b.words_.size() ? b.words_ : a.words_;
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (lo[i] != hi[i]) return false;
    for (std::size_t i = lo.size(); i < hi.size(); ++i)
        if (hi[i]) return false;
    return true;
}

NatSet tm_prefix(unsigned l, TmClass cls) {
    if (l == 0 || l > 32) throw std::invalid_argument("tm_prefix: l must be in [1, 32]");
    return NatSet::tm_range((std::uint64_t{1} << l) - 1, cls);
}

}  // namespace tmpart
