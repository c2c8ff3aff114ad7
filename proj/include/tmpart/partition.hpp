// partition.hpp
// (m, C, D) with C ∪ D = [0, m]. The intersection is computed once on
// construction. Orientation is canonical: 0 ∈ C, and when 0 is shared the
// least element outside the intersection lies in C.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tmpart/nat_set.hpp"

namespace tmpart {

class PartitionPair {
public:
    // Throws std::invalid_argument when C ∪ D != [0, m], an element exceeds m,
    // or the orientation is not canonical.
    PartitionPair(std::uint64_t m, NatSet c, NatSet d);

    // Same checks on the union, but swaps C and D into canonical orientation.
    static PartitionPair canonical(std::uint64_t m, NatSet c, NatSet d);

    // Empty string when (m, C, D) is a valid canonical pair, else the reason.
    static std::string validate(std::uint64_t m, const NatSet& c, const NatSet& d);

    std::uint64_t m() const noexcept { return m_; }
    const NatSet& c() const noexcept { return c_; }
    const NatSet& d() const noexcept { return d_; }
    const NatSet& intersection() const noexcept { return intersection_; }

    // Least and second-least intersection points, if present.
    std::optional<std::uint64_t> r1() const;
    std::optional<std::uint64_t> r2() const;

    friend bool operator==(const PartitionPair& a, const PartitionPair& b) noexcept {
        return a.m_ == b.m_ && a.c_ == b.c_ && a.d_ == b.d_;
    }

private:
    std::uint64_t m_;
    NatSet c_;
    NatSet d_;
    NatSet intersection_;
};

}  // namespace tmpart
