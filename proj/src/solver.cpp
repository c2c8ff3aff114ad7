#include "tmpart/solver.hpp"

#include <stdexcept>

#include "tmpart/repfn.hpp"

namespace tmpart {

const char* to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::Solved: return "SOLVED";
        case SolveStatus::InfeasibleAt: return "INFEASIBLE_AT";
        case SolveStatus::TailFailure: return "TAIL_FAILURE";
    }
    return "?";
}

SolveOutcome determinize(std::uint64_t m, const NatSet& r, bool with_trace) {
    if (m == 0) throw std::invalid_argument("determinize: m must be positive");
    if (r.contains(0)) throw std::invalid_argument("determinize: 0 may not lie in the intersection");
    if (!r.empty() && r.max() > m) throw std::invalid_argument("determinize: intersection exceeds m");

    // delta[n] = (pairs in C summing to n) - (pairs in D summing to n), placed elements only.
    std::vector<std::int64_t> delta(m + 1, 0);
    std::vector<std::uint64_t> in_c{0}, in_d;
    in_c.reserve(m + 1);
    in_d.reserve(m + 1);

    auto place = [&](std::vector<std::uint64_t>& side, std::uint64_t e, std::int64_t sign) {
        for (auto x : side) {
            if (x + e > m) break;
            delta[x + e] += sign;
        }
        side.push_back(e);
    };

    SolveOutcome out;
    for (std::uint64_t n = 1; n <= m; ++n) {
        const auto dn = delta[n];
        const char* placed = "none";
        if (r.contains(n)) {
            if (dn == -1) {
                place(in_c, n, +1);
                place(in_d, n, -1);
                placed = "CD";
            }
        } else if (dn == -1) {
            place(in_c, n, +1);
            placed = "C";
        } else if (dn == 0) {
            place(in_d, n, -1);
            placed = "D";
        }
        if (with_trace) out.trace.push_back({n, dn, placed});
        if (placed[0] == 'n') {
            out.status = SolveStatus::InfeasibleAt;
            out.fail_at = n;
            out.reason = r.contains(n) ? "shared element needs delta -1, got " + std::to_string(dn)
                                       : "delta " + std::to_string(dn) + " admits neither C nor D";
            return out;
        }
    }

    out.pair.emplace(m, NatSet::from_elements(in_c, m), NatSet::from_elements(in_d, m));
    return out;
}

SolveOutcome solve_and_verify(std::uint64_t m, const NatSet& r, bool with_trace) {
    auto out = determinize(m, r, with_trace);
    if (out.status != SolveStatus::Solved) return out;
    if (auto n = first_divergence(out.pair->c(), out.pair->d(), 2 * m)) {
        out.status = SolveStatus::TailFailure;
        out.fail_at = *n;
        out.reason = "R_C(" + std::to_string(*n) + ") != R_D(" + std::to_string(*n) + ")";
    }
    return out;
}

}  // namespace tmpart
