#include "tmpart/partition.hpp"

#include <stdexcept>
#include <utility>

namespace tmpart {
namespace {

std::string union_problem(std::uint64_t m, const NatSet& c, const NatSet& d) {
    if (!c.empty() && c.max() > m) return "C has element " + std::to_string(c.max()) + " > m";
    if (!d.empty() && d.max() > m) return "D has element " + std::to_string(d.max()) + " > m";
    const auto missing = NatSet::interval(0, m) - (c | d);
    if (!missing.empty()) return "C ∪ D misses " + std::to_string(missing.min());
    return {};
}

// True if (C, D) must be swapped to reach canonical orientation.
bool needs_swap(std::uint64_t m, const NatSet& c, const NatSet& d) {
    if (!c.contains(0)) return true;
    if (!d.contains(0)) return false;
    const auto outside = NatSet::interval(0, m) - (c & d);
    return !outside.empty() && !c.contains(outside.min());
}

}  // namespace

std::string PartitionPair::validate(std::uint64_t m, const NatSet& c, const NatSet& d) {
    if (auto why = union_problem(m, c, d); !why.empty()) return why;
    if (needs_swap(m, c, d)) return "orientation is not canonical (0 must lie in C)";
    return {};
}

PartitionPair::PartitionPair(std::uint64_t m, NatSet c, NatSet d)
    : m_(m), c_(std::move(c)), d_(std::move(d)) {
    if (auto why = validate(m_, c_, d_); !why.empty()) throw std::invalid_argument("invalid pair: " + why);
    intersection_ = c_ & d_;
}

PartitionPair PartitionPair::canonical(std::uint64_t m, NatSet c, NatSet d) {
    if (auto why = union_problem(m, c, d); !why.empty()) throw std::invalid_argument("invalid pair: " + why);
    if (needs_swap(m, c, d)) std::swap(c, d);
    return PartitionPair(m, std::move(c), std::move(d));
}

std::optional<std::uint64_t> PartitionPair::r1() const {
    if (intersection_.empty()) return std::nullopt;
    return intersection_.min();
}

std::optional<std::uint64_t> PartitionPair::r2() const {
    const auto elems = intersection_.elements();
    if (elems.size() < 2) return std::nullopt;
    return elems[1];
}

}  // namespace tmpart
