#include "tmpart/repfn.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

namespace tmpart {
namespace {

using Word = NatSet::Word;
constexpr std::int64_t kBits = NatSet::kWordBits;

// Bit-reversed copy of s over [0, bound]: bit j is chi_s(bound - j).
std::vector<Word> reversed_words(const NatSet& s) {
    std::vector<Word> out(s.words().size(), 0);
    const auto b = s.bound();
    for (auto e : s.elements()) {
        const auto j = b - e;
        out[j / kBits] |= Word{1} << (j % kBits);
    }
    return out;
}

// 64 bits of v starting at bit `start`; bits outside v read as zero.
inline Word load_bits(const std::vector<Word>& v, std::int64_t start) {
    if (start <= -kBits) return 0;
    if (start < 0) return v.empty() ? 0 : v[0] << (-start);
    const auto i = static_cast<std::size_t>(start / kBits);
    const auto o = static_cast<unsigned>(start % kBits);
    if (i >= v.size()) return 0;
    Word w = v[i] >> o;
    if (o != 0 && i + 1 < v.size()) w |= v[i + 1] << (kBits - o);
    return w;
}

// #{c in C : n - c in D}, with D given as its reversed bit-vector.
std::uint64_t ordered_count(std::span<const Word> c_words, const std::vector<Word>& d_rev,
                            std::int64_t d_bound, std::int64_t n) {
    // T bit c = d_rev bit (c - (n - d_bound)).
    const std::int64_t offset = n - d_bound;
    const std::int64_t k_lo = std::max<std::int64_t>(0, offset) / kBits;
    const std::int64_t k_hi = std::min<std::int64_t>(static_cast<std::int64_t>(c_words.size()) - 1, n / kBits);
    std::uint64_t total = 0;
    for (std::int64_t k = k_lo; k <= k_hi; ++k)
        total += static_cast<std::uint64_t>(
            std::popcount(c_words[static_cast<std::size_t>(k)] & load_bits(d_rev, k * kBits - offset)));
    return total;
}

std::vector<std::uint64_t> ordered_profile(const NatSet& c, const NatSet& d, std::uint64_t n_max) {
    std::vector<std::uint64_t> counts(n_max + 1, 0);
    if (c.empty() || d.empty()) return counts;
    const auto d_rev = reversed_words(d);
    const auto d_bound = static_cast<std::int64_t>(d.bound());
    const auto c_words = c.words();
    // Sums never exceed c.bound + d.bound.
    const auto top = static_cast<std::int64_t>(std::min(n_max, c.bound() + d.bound()));
#pragma omp parallel for schedule(static)
    for (std::int64_t n = 0; n <= top; ++n)
        counts[static_cast<std::size_t>(n)] = ordered_count(c_words, d_rev, d_bound, n);
    return counts;
}

}  // namespace

const char* to_string(ProfileKind k) noexcept { return k == ProfileKind::Same ? "SAME" : "CROSS"; }

std::uint64_t rep_cross(const NatSet& c, const NatSet& d, std::uint64_t n) {
    if (c.empty() || d.empty() || n > c.bound() + d.bound()) return 0;
    return ordered_count(c.words(), reversed_words(d), static_cast<std::int64_t>(d.bound()),
                         static_cast<std::int64_t>(n));
}

std::uint64_t rep_same(const NatSet& s, std::uint64_t n) {
    std::uint64_t total = 0;
    for (auto x : s.elements()) {
        if (2 * x >= n) break;
        if (s.contains(n - x)) ++total;
    }
    return total;
}

RepProfile rep_cross_profile(const NatSet& c, const NatSet& d, std::uint64_t n_max) {
    return {ProfileKind::Cross, n_max, ordered_profile(c, d, n_max)};
}

RepProfile rep_profile(const NatSet& s, std::uint64_t n_max) {
    auto counts = ordered_profile(s, s, n_max);
    // Ordered self-count includes (n/2, n/2) once and every other pair twice.
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (n % 2 == 0 && s.contains(n / 2)) --counts[n];
        counts[n] /= 2;
    }
    return {ProfileKind::Same, n_max, std::move(counts)};
}

std::optional<std::uint64_t> first_divergence(const NatSet& c, const NatSet& d, std::uint64_t n_max) {
    const auto pc = rep_profile(c, n_max);
    const auto pd = rep_profile(d, n_max);
    for (std::uint64_t n = 0; n <= n_max; ++n)
        if (pc.counts[n] != pd.counts[n]) return n;
    return std::nullopt;
}

}  // namespace tmpart
