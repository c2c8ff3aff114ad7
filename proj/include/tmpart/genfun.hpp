// genfun.hpp
// Generating-function checks over exact integer polynomials.
//
// With p_S(x) = Σ χ_S(i) x^i and G_m(x) = 1 + x + ... + x^m:
//   universal:      p_S(x)^2 - p_S(x^2) = 2 Σ R_S(n) x^n
//   complement:     p_D = G_m - p_C + x^{r1} + x^{r2}
//   pair identity:  2 p_C(x^2) = G_m(x^2) + 2 p_C x^{r1} + 2 p_C x^{r2} + 2 p_C G_m
//                                - G_m^2 - 2 x^{r1} G_m - 2 x^{r2} G_m - 2 x^{r1+r2}
// The pair identity is equivalent to R_C ≡ R_D once the complement relation holds.

#pragma once

#include <cstdint>
#include <optional>

#include "tmpart/int_poly.hpp"
#include "tmpart/partition.hpp"

namespace tmpart {

IntPoly char_poly(const NatSet& s);

// Requires degree >= 2 max(S); throws std::invalid_argument otherwise.
bool check_square_identity(const NatSet& s, std::uint64_t degree);

struct IdentityResult {
    bool holds = false;
    std::optional<std::uint64_t> first_failure;  // least failing exponent
};

struct PairIdentityReport {
    std::uint64_t degree = 0;  // compared through this exponent (2m + 2)
    IdentityResult complement;    // p_D from p_C
    IdentityResult pair;          // 2 p_C(x^2) = ...
    bool ok() const noexcept { return complement.holds && pair.holds; }
};

// Requires |C ∩ D| == 2; throws std::invalid_argument otherwise.
PairIdentityReport check_pair_identities(const PartitionPair& p);
// Validates (m, C, D) first: union gaps and wrong intersection sizes throw.
PairIdentityReport check_pair_identities(std::uint64_t m, const NatSet& c, const NatSet& d);

enum class ChiRecurrence { Lower, UpperViaR1, UpperViaR2 };
enum class ProbeResult { Holds, Fails, NotApplicable };

const char* to_string(ChiRecurrence r) noexcept;
const char* to_string(ProbeResult r) noexcept;

// Evaluates one of the χ_C(k/2) recurrences at an even k inside its window:
//   Lower:       r1 <= k < k+1 < min(r2, 2 r1) <= m
//         χ(k/2) = χ(k-r1) - χ(k+1-r1) - χ(k+1) + 1
//   UpperViaR1:  r2 < k < k+1 < 2 r1, r1 + r2 <= m
//         χ(k/2) = χ(k-r1) - χ(k-1-r2) + χ(k)
//   UpperViaR2: same window as UpperViaR1
//         χ(k/2) = χ(k-r2) - χ(k+1-r1) - χ(k+1) + 1
// Throws std::invalid_argument if k is odd or non-positive, |C ∩ D| != 2, or R_C ≢ R_D.
ProbeResult chi_probe(const PartitionPair& p, ChiRecurrence which, std::int64_t k);

// r1/2 ∈ C. Requires R_C ≡ R_D, |C ∩ D| == 2, r1 even and r1 + r2 <= m.
bool check_half_r1(const PartitionPair& p);

}  // namespace tmpart
