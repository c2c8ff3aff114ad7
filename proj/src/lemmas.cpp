#include "tmpart/lemmas.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>

#include <omp.h>

#include "tmpart/repfn.hpp"

namespace tmpart {

unsigned ceil_log2(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("ceil_log2(0)");
    return static_cast<unsigned>(std::bit_width(m - 1));
}

bool is_mersenne(std::uint64_t m) { return (m & (m + 1)) == 0; }

bool digit_premise(std::uint64_t m, TmClass cls) {
    const unsigned L = ceil_log2(m);
    for (unsigned i = 0; i < L; ++i)
        if (tm_class(m - (std::uint64_t{1} << i)) != cls) return false;
    return true;
}

bool digit_conclusion(std::uint64_t m, TmClass cls) {
    const unsigned L = ceil_log2(m);
    const bool parity_ok = cls == TmClass::EvenOnes ? L % 2 == 1 : L % 2 == 0;
    return parity_ok && L < 64 && m == (std::uint64_t{1} << L) - 1;
}

LemmaReport verify_digit_lemma(std::uint64_t m_max, TmClass cls, bool include_boundary) {
    if (m_max < 3) throw std::invalid_argument("verify_digit_lemma: M_max must be at least 3");
    const auto t0 = std::chrono::steady_clock::now();

    LemmaReport rep;
    rep.lemma = cls == TmClass::EvenOnes ? "digit-A" : "digit-B";
    rep.range_lo = include_boundary ? 1 : 3;
    rep.range_hi = m_max;

    const std::uint64_t count = m_max - rep.range_lo + 1;
    std::vector<std::uint8_t> hit(count, 0), ok(count, 0);
#pragma omp parallel for schedule(static)
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto m = rep.range_lo + i;
        if (digit_premise(m, cls)) {
            hit[i] = 1;
            ok[i] = digit_conclusion(m, cls);
        }
    }

    for (std::uint64_t i = 0; i < count; ++i) {
        if (!hit[i]) continue;
        const auto m = rep.range_lo + i;
        const unsigned L = ceil_log2(m);
        std::string detail;
        if (!ok[i])
            detail = "ceil(log2 M) = " + std::to_string(L) + ", expected " +
                     (cls == TmClass::EvenOnes ? "odd" : "even") + " with M = 2^L - 1";
        if (m < 3) {
            rep.boundary.push_back({m, ok[i] ? "premise holds, conclusion holds" : detail});
            continue;
        }
        rep.hits.push_back(m);
        if (!ok[i]) rep.violations.push_back({m, detail});
    }
    rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::uint64_t thue_morse_witness(std::uint64_t m) {
    if (m == 0 || is_mersenne(m))
        throw std::invalid_argument("thue_morse_witness: m = " + std::to_string(m) + " has the form 2^l - 1");
    const auto a = NatSet::tm_range(m, TmClass::EvenOnes);
    const auto b = NatSet::tm_range(m, TmClass::OddOnes);
    for (std::uint64_t n = m + 1; n < 2 * m; ++n)
        if (rep_same(a, n) != rep_same(b, n)) return n;
    throw std::logic_error("thue_morse_witness: no witness in (m, 2m) for m = " + std::to_string(m));
}

ReflectReport reflect_check(std::uint64_t m, const NatSet& c, const NatSet& d) {
    ReflectReport rep;
    if (auto why = PartitionPair::validate(m, c, d); !why.empty()) {
        rep.detail = "input violates pair invariants: " + why;
        return rep;
    }
    const PartitionPair original(m, c, d);
    const auto rc = c.reflect(m);
    const auto rd = d.reflect(m);
    try {
        rep.reflected = PartitionPair::canonical(m, rc, rd);
    } catch (const std::invalid_argument& e) {
        rep.detail = std::string("reflected pair violates invariants: ") + e.what();
        return rep;
    }
    const auto expected = original.intersection().reflect(m);
    if (!(rep.reflected->intersection() == expected)) {
        rep.detail = "reflected intersection is not {m - r}";
        return rep;
    }
    const bool equal_before = !first_divergence(c, d, 2 * m);
    const bool equal_after = !first_divergence(rep.reflected->c(), rep.reflected->d(), 2 * m);
    if (equal_before && !equal_after) {
        rep.detail = "profiles equal before reflection but not after";
        return rep;
    }
    rep.ok = true;
    return rep;
}

ReflectReport reflect_check(const PartitionPair& p) { return reflect_check(p.m(), p.c(), p.d()); }

}  // namespace tmpart
