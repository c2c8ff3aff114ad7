// repfn.hpp
// Representation functions:
//   R_S(n)     = #{(s, s') : s, s' in S, s < s', s + s' = n}
//   R_{C,D}(n) = #{(c, d) : c in C, d in D, c + d = n}   (ordered)
//
// rep_profile / rep_cross_profile are the word-parallel kernels (64 members
// per word, OpenMP over n). The naive double loops in tmpart::reference are
// kept as the serial oracle they are tested against.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tmpart/nat_set.hpp"

namespace tmpart {

enum class ProfileKind { Same, Cross };

struct RepProfile {
    ProfileKind kind = ProfileKind::Same;
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> counts;  // counts.size() == n_max + 1

    std::uint64_t operator[](std::uint64_t n) const { return n <= n_max ? counts[n] : 0; }
    friend bool operator==(const RepProfile&, const RepProfile&) = default;
};

const char* to_string(ProfileKind k) noexcept;

std::uint64_t rep_same(const NatSet& s, std::uint64_t n);
std::uint64_t rep_cross(const NatSet& c, const NatSet& d, std::uint64_t n);

RepProfile rep_profile(const NatSet& s, std::uint64_t n_max);
RepProfile rep_cross_profile(const NatSet& c, const NatSet& d, std::uint64_t n_max);

// Least n <= n_max with R_C(n) != R_D(n).
std::optional<std::uint64_t> first_divergence(const NatSet& c, const NatSet& d, std::uint64_t n_max);

namespace reference {

RepProfile rep_profile(const NatSet& s, std::uint64_t n_max);
RepProfile rep_cross_profile(const NatSet& c, const NatSet& d, std::uint64_t n_max);

}  // namespace reference

}  // namespace tmpart
