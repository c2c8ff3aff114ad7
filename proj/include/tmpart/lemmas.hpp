// lemmas.hpp
// Finite-range checks of the auxiliary lemmas.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmpart/partition.hpp"

namespace tmpart {

struct LemmaViolation {
    std::uint64_t m;
    std::string detail;
};

struct LemmaReport {
    std::string lemma;  // "digit-A" or "digit-B"
    std::uint64_t range_lo = 0;
    std::uint64_t range_hi = 0;
    std::vector<std::uint64_t> hits;             // M >= 3 whose premise holds
    std::vector<LemmaViolation> violations;      // hits that break the conclusion
    std::vector<LemmaViolation> boundary;        // M < 3 anomalies, only with include_boundary
    double elapsed_seconds = 0.0;
};

// Premise: M-1, M-2, M-4, ..., M-2^{L-1} all have class `cls`, L = ceil(log2 M).
// Conclusion: M = 2^L - 1 with L odd (EvenOnes) or L even (OddOnes).
// Scans M in [3, m_max]; with include_boundary, M = 1, 2 are evaluated too and
// any premise hit there is filed under `boundary`.
LemmaReport verify_digit_lemma(std::uint64_t m_max, TmClass cls, bool include_boundary = false);

// The premise and conclusion for a single M.
bool digit_premise(std::uint64_t m, TmClass cls);
bool digit_conclusion(std::uint64_t m, TmClass cls);

// ceil(log2 m) for m >= 1.
unsigned ceil_log2(std::uint64_t m);

bool is_mersenne(std::uint64_t m);  // m = 2^l - 1 for some l >= 0

// Least n with m < n < 2m and R_{A∩[0,m]}(n) != R_{B∩[0,m]}(n).
// Throws std::invalid_argument when m = 2^l - 1, std::logic_error if none exists.
std::uint64_t thue_morse_witness(std::uint64_t m);

struct ReflectReport {
    bool ok = false;
    std::string detail;
    std::optional<PartitionPair> reflected;
};

// Reflects (m - C, m - D), reorients canonically, and checks the union, the
// reflected intersection, and that equal profiles stay equal through 2m.
ReflectReport reflect_check(std::uint64_t m, const NatSet& c, const NatSet& d);
ReflectReport reflect_check(const PartitionPair& p);

}  // namespace tmpart
