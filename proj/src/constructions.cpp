#include "tmpart/constructions.hpp"

#include <stdexcept>
#include <string>

namespace tmpart {
namespace {

void check_l(unsigned l, const char* who) {
    if (l == 0 || l > kMaxL)
        throw std::invalid_argument(std::string(who) + ": l must be in [1, " + std::to_string(kMaxL) +
                                    "], got " + std::to_string(l));
}

constexpr std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

const NatSet& a_or_b(bool even, const NatSet& a, const NatSet& b) { return even ? a : b; }

}  // namespace

PartitionPair theorem11_pair(unsigned l) {
    check_l(l, "theorem11_pair");
    const auto a = tm_prefix(2 * l + 1, TmClass::EvenOnes);
    const auto b = tm_prefix(2 * l + 1, TmClass::OddOnes);
    const auto t = pow2(2 * l + 1) - 2;
    return PartitionPair(pow2(2 * l + 2) - 3, a | b.shift(t), b | a.shift(t));
}

PartitionPair remark12_pair(unsigned l) {
    check_l(l, "remark12_pair");
    const auto a = tm_prefix(2 * l, TmClass::EvenOnes);
    const auto b = tm_prefix(2 * l, TmClass::OddOnes);
    const auto t1 = pow2(2 * l) - 1;
    const auto t2 = pow2(2 * l + 1) - 1;
    auto half = [&](bool even) {
        const auto& x = a_or_b(even, a, b);
        const auto& y = a_or_b(!even, a, b);
        return x | y.shift(t1) | (y | x.shift(t1)).shift(t2);
    };
    return PartitionPair(pow2(2 * l + 2) - 3, half(true), half(false));
}

PartitionPair theoremC_pair(unsigned l) {
    check_l(l, "theoremC_pair");
    const auto a = tm_prefix(2 * l, TmClass::EvenOnes);
    const auto b = tm_prefix(2 * l, TmClass::OddOnes);
    const auto t = pow2(2 * l) - 1;
    return PartitionPair(pow2(2 * l + 1) - 2, a | b.shift(t), b | a.shift(t));
}

PartitionPair dombi_pair(unsigned l) {
    check_l(l, "dombi_pair");
    return PartitionPair(pow2(l) - 1, tm_prefix(l, TmClass::EvenOnes), tm_prefix(l, TmClass::OddOnes));
}

PartitionPair build(Family f, unsigned l) {
    switch (f) {
        case Family::Theorem11: return theorem11_pair(l);
        case Family::Remark12: return remark12_pair(l);
        case Family::TheoremC: return theoremC_pair(l);
        case Family::Dombi: return dombi_pair(l);
    }
    throw std::logic_error("unknown family");
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "theorem11") return Family::Theorem11;
    if (name == "remark12") return Family::Remark12;
    if (name == "theoremC") return Family::TheoremC;
    if (name == "dombi") return Family::Dombi;
    return std::nullopt;
}

const char* to_string(Family f) noexcept {
    switch (f) {
        case Family::Theorem11: return "theorem11";
        case Family::Remark12: return "remark12";
        case Family::TheoremC: return "theoremC";
        case Family::Dombi: return "dombi";
    }
    return "?";
}

}  // namespace tmpart
