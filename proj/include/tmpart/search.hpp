// search.hpp
// Exhaustive (BRUTE) and determinizer-driven (DETERMINIZED) searches for
// pairs with C ∪ D = [0, m], |C ∩ D| = k and R_C ≡ R_D.
//
// Work is split into tasks, one per (m, R). Tasks are numbered in a fixed
// order (m ascending, then R in lexicographic order) and shard i of N owns
// the tasks whose number is i mod N. Within a process tasks run under
// OpenMP; results are merged in task order, so output never depends on
// thread count or shard layout.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tmpart/partition.hpp"

namespace tmpart {

inline constexpr std::uint64_t kBruteMaxM = 20;

enum class SearchMode { Brute, Determinized };

const char* to_string(SearchMode m) noexcept;

struct SearchSolution {
    std::uint64_t m;
    NatSet r;
    PartitionPair pair;
};

struct Intersection {
    std::uint64_t m;
    NatSet r;
};

struct SearchCertificate {
    std::uint64_t m_min = 0;
    std::uint64_t m_max = 0;
    unsigned k = 0;
    SearchMode mode = SearchMode::Brute;
    unsigned shard_count = 1;
    std::vector<unsigned> shard_indices;  // shards folded into this certificate, ascending

    std::uint64_t intersections_examined = 0;
    std::uint64_t candidates_examined = 0;
    std::vector<SearchSolution> solutions;         // ordered by (m, R)
    std::vector<Intersection> uniqueness_violations;  // brute: more than one pair for one R
    std::vector<Intersection> solver_mismatches;      // uniqueness_report: brute vs determinizer
};

struct SearchParams {
    std::uint64_t m_min = 1;
    std::uint64_t m_max = 1;
    unsigned k = 0;
    SearchMode mode = SearchMode::Determinized;
    unsigned shard_count = 1;
    std::optional<unsigned> shard_index;  // nullopt: run every shard and merge
    bool cross_check = false;             // brute only: compare each R with the determinizer
};

// Every canonical pair for one (m, R), by enumerating all memberships.
// Requires m <= kBruteMaxM. `candidates`, if given, is incremented by the
// number of assignments tested.
std::vector<PartitionPair> brute_force_for(std::uint64_t m, const NatSet& r,
                                           std::uint64_t* candidates = nullptr);

// All canonical pairs with |C ∩ D| = k, k <= 2, m <= kBruteMaxM.
std::vector<PartitionPair> brute_force_pairs(std::uint64_t m, unsigned k);

SearchCertificate run_search(const SearchParams& params);

SearchCertificate scan_determinized(std::uint64_t m_min, std::uint64_t m_max, unsigned k);

// Brute force over every R ⊆ [0, m] of size k; records R with more than one
// pair and any R ⊆ [1, m] where the determinizer disagrees with brute force.
SearchCertificate uniqueness_report(std::uint64_t m, unsigned k);

// Combines certificates of distinct shards of the same search. Associative
// and commutative; throws std::invalid_argument on incompatible inputs.
SearchCertificate merge(const SearchCertificate& a, const SearchCertificate& b);

// k-subsets of [lo, hi], lexicographic.
std::vector<NatSet> subsets_of_size(std::uint64_t lo, std::uint64_t hi, unsigned k);

}  // namespace tmpart
