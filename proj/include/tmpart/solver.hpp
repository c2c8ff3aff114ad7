// solver.hpp
// Reconstructs the unique candidate pair for (m, R) element by element.
//
// With 0 ∈ C \ D, the only pair summing to n that involves n itself is
// (0, n). So if Δ(n) = R_C(n) - R_D(n) counted over elements < n, then
// R_C(n) = R_D(n) forces
//   n ∈ R        : Δ(n) = -1  (n joins both)
//   n ∉ R        : Δ(n) = -1 -> n ∈ C,  Δ(n) = 0 -> n ∈ D
// and anything else is infeasible at n.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmpart/partition.hpp"

namespace tmpart {

enum class SolveStatus { Solved, InfeasibleAt, TailFailure };

const char* to_string(SolveStatus s) noexcept;

struct TraceStep {
    std::uint64_t n;
    std::int64_t delta;
    const char* placed;  // "C", "D", "CD", or "none" on the failing step
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Solved;
    std::optional<PartitionPair> pair;
    std::optional<std::uint64_t> fail_at;
    std::string reason;
    std::vector<TraceStep> trace;  // filled only when requested
};

// R must be a subset of [1, m] and m >= 1; throws std::invalid_argument otherwise.
// On success R_C(n) = R_D(n) for all n <= m.
SolveOutcome determinize(std::uint64_t m, const NatSet& r, bool with_trace = false);

// determinize, then scans the profiles through 2m; a divergence there is TailFailure.
SolveOutcome solve_and_verify(std::uint64_t m, const NatSet& r, bool with_trace = false);

}  // namespace tmpart
