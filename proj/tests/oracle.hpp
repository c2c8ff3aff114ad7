// Test-only oracles: direct definitions over std::set, no bit tricks.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "tmpart/nat_set.hpp"

namespace oracle {

using Set = std::set<std::uint64_t>;

inline Set members(const tmpart::NatSet& s) {
    auto e = s.elements();
    return Set(e.begin(), e.end());
}

inline std::uint64_t rep_same(const Set& s, std::uint64_t n) {
    std::uint64_t c = 0;
    for (auto a : s)
        for (auto b : s)
            if (a < b && a + b == n) ++c;
    return c;
}

inline std::uint64_t rep_cross(const Set& c, const Set& d, std::uint64_t n) {
    std::uint64_t k = 0;
    for (auto a : c)
        for (auto b : d)
            if (a + b == n) ++k;
    return k;
}

inline bool even_ones(std::uint64_t n) {
    unsigned ones = 0;
    for (; n; n >>= 1) ones += n & 1;
    return ones % 2 == 0;
}

inline Set thue_morse(std::uint64_t bound, bool even) {
    Set s;
    for (std::uint64_t n = 0; n <= bound; ++n)
        if (even_ones(n) == even) s.insert(n);
    return s;
}

inline tmpart::NatSet random_set(std::mt19937_64& rng, std::uint64_t bound, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<std::uint64_t> e;
    for (std::uint64_t n = 0; n <= bound; ++n)
        if (coin(rng)) e.push_back(n);
    return tmpart::NatSet::from_elements(e, bound);
}

}  // namespace oracle
