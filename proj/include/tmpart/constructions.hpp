// constructions.hpp
// Explicit solution families. All builders take l in [1, kMaxL].
//
//   theorem11(l): C = A_{2l+1} ∪ (2^{2l+1}-2 + B_{2l+1}),  m = 2^{2l+2}-3
//   remark12(l):  C = A_{2l} ∪ (2^{2l}-1 + B_{2l})
//                     ∪ (2^{2l+1}-1 + (B_{2l} ∪ (2^{2l}-1 + A_{2l}))),  m = 2^{2l+2}-3
//   theoremC(l):  C = A_{2l} ∪ (2^{2l}-1 + B_{2l}),  m = 2^{2l+1}-2
//   dombi(l):     C = A_l, D = B_l,  m = 2^l-1
// D is obtained by exchanging A and B throughout.

#pragma once

#include <optional>
#include <string_view>

#include "tmpart/partition.hpp"

namespace tmpart {

inline constexpr unsigned kMaxL = 12;

enum class Family { Theorem11, Remark12, TheoremC, Dombi };

PartitionPair theorem11_pair(unsigned l);
PartitionPair remark12_pair(unsigned l);
PartitionPair theoremC_pair(unsigned l);
PartitionPair dombi_pair(unsigned l);

PartitionPair build(Family f, unsigned l);

std::optional<Family> parse_family(std::string_view name);
const char* to_string(Family f) noexcept;

}  // namespace tmpart
