#include "tmpart/search.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "tmpart/solver.hpp"

namespace tmpart {
namespace {

using Mask = std::uint32_t;

// R_S(n) over a bitmask with bits 0..m.
inline unsigned mask_rep(Mask s, std::uint64_t m, std::uint64_t n) {
    unsigned count = 0;
    for (std::uint64_t x = n > m ? n - m : 0; 2 * x < n; ++x)
        count += ((s >> x) & (s >> (n - x)) & 1U);
    return count;
}

bool mask_profiles_equal(Mask c, Mask d, std::uint64_t m) {
    for (std::uint64_t n = 1; n + 1 <= 2 * m; ++n)
        if (mask_rep(c, m, n) != mask_rep(d, m, n)) return false;
    return true;
}

NatSet mask_to_set(Mask s, std::uint64_t m) {
    std::vector<std::uint64_t> elems;
    for (std::uint64_t i = 0; i <= m; ++i)
        if ((s >> i) & 1U) elems.push_back(i);
    return NatSet::from_elements(elems, m);
}

// Orders by (m, R); several pairs can share (m, R) only in uniqueness violations, ordered by C.
bool less_solution(const SearchSolution& a, const SearchSolution& b) {
    if (a.m != b.m) return a.m < b.m;
    const auto ra = a.r.elements(), rb = b.r.elements();
    if (ra != rb) return ra < rb;
    return a.pair.c().elements() < b.pair.c().elements();
}

bool less_intersection(const Intersection& a, const Intersection& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.r.elements() < b.r.elements();
}

void check_k(unsigned k) {
    if (k > 2) throw std::invalid_argument("search: k must be 0, 1 or 2");
}

struct TaskResult {
    std::vector<PartitionPair> pairs;
    std::uint64_t candidates = 0;
    bool mismatch = false;
};

bool solver_agrees(std::uint64_t m, const NatSet& r, const std::vector<PartitionPair>& brute) {
    const auto out = solve_and_verify(m, r);
    if (out.status == SolveStatus::Solved) return brute.size() == 1 && brute.front() == *out.pair;
    return brute.empty();
}

}  // namespace

const char* to_string(SearchMode m) noexcept { return m == SearchMode::Brute ? "BRUTE" : "DETERMINIZED"; }

std::vector<NatSet> subsets_of_size(std::uint64_t lo, std::uint64_t hi, unsigned k) {
    std::vector<NatSet> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    if (lo > hi || hi - lo + 1 < k) return out;
    std::vector<std::uint64_t> idx(k);
    for (unsigned i = 0; i < k; ++i) idx[i] = lo + i;
    while (true) {
        out.push_back(NatSet::from_elements(idx));
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == hi - (k - 1 - static_cast<unsigned>(i))) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<PartitionPair> brute_force_for(std::uint64_t m, const NatSet& r, std::uint64_t* candidates) {
    if (m == 0 || m > kBruteMaxM)
        throw std::invalid_argument("brute force: m must be in [1, " + std::to_string(kBruteMaxM) + "]");
    if (!r.empty() && r.max() > m) throw std::invalid_argument("brute force: intersection exceeds m");

    Mask shared = 0;
    for (auto e : r.elements()) shared |= Mask{1} << e;
    std::vector<std::uint64_t> free;
    for (std::uint64_t i = 0; i <= m; ++i)
        if (!((shared >> i) & 1U)) free.push_back(i);

    // Canonical orientation: 0 in C, or, if 0 is shared, the least unshared element in C.
    Mask fixed_c = 0;
    if (!free.empty()) {
        fixed_c = Mask{1} << free.front();
        free.erase(free.begin());
    }

    std::vector<PartitionPair> found;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        Mask c = shared | fixed_c, d = shared;
        for (std::size_t j = 0; j < free.size(); ++j) {
            if ((bits >> j) & 1U)
                c |= Mask{1} << free[j];
            else
                d |= Mask{1} << free[j];
        }
        if (mask_profiles_equal(c, d, m)) found.emplace_back(m, mask_to_set(c, m), mask_to_set(d, m));
    }
    if (candidates) *candidates += total;
    return found;
}

std::vector<PartitionPair> brute_force_pairs(std::uint64_t m, unsigned k) {
    check_k(k);
    std::vector<PartitionPair> out;
    for (const auto& r : subsets_of_size(0, m, k)) {
        auto found = brute_force_for(m, r);
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

SearchCertificate run_search(const SearchParams& p) {
    check_k(p.k);
    if (p.m_min == 0 || p.m_min > p.m_max) throw std::invalid_argument("search: need 1 <= m_min <= m_max");
    if (p.mode == SearchMode::Brute && p.m_max > kBruteMaxM)
        throw std::invalid_argument("search: brute mode requires m_max <= " + std::to_string(kBruteMaxM));
    if (p.shard_count == 0) throw std::invalid_argument("search: shard count must be positive");
    if (p.shard_index && *p.shard_index >= p.shard_count)
        throw std::invalid_argument("search: shard index out of range");

    std::vector<Intersection> tasks;
    const std::uint64_t r_lo = p.mode == SearchMode::Brute ? 0 : 1;
    for (auto m = p.m_min; m <= p.m_max; ++m)
        for (auto& r : subsets_of_size(r_lo, m, p.k)) tasks.push_back({m, std::move(r)});

    std::vector<std::size_t> owned;
    for (std::size_t t = 0; t < tasks.size(); ++t)
        if (!p.shard_index || t % p.shard_count == *p.shard_index) owned.push_back(t);

    std::vector<TaskResult> results(owned.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < owned.size(); ++i) {
        try {
            const auto& task = tasks[owned[i]];
            auto& res = results[i];
            if (p.mode == SearchMode::Brute) {
                res.pairs = brute_force_for(task.m, task.r, &res.candidates);
                if (p.cross_check && !task.r.contains(0))
                    res.mismatch = !solver_agrees(task.m, task.r, res.pairs);
            } else {
                res.candidates = 1;
                auto out = solve_and_verify(task.m, task.r);
                if (out.status == SolveStatus::Solved) res.pairs.push_back(std::move(*out.pair));
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    SearchCertificate cert;
    cert.m_min = p.m_min;
    cert.m_max = p.m_max;
    cert.k = p.k;
    cert.mode = p.mode;
    cert.shard_count = p.shard_count;
    if (p.shard_index) {
        cert.shard_indices = {*p.shard_index};
    } else {
        for (unsigned s = 0; s < p.shard_count; ++s) cert.shard_indices.push_back(s);
    }
    cert.intersections_examined = owned.size();
    for (std::size_t i = 0; i < owned.size(); ++i) {
        const auto& task = tasks[owned[i]];
        auto& res = results[i];
        cert.candidates_examined += res.candidates;
        if (res.pairs.size() > 1) cert.uniqueness_violations.push_back(task);
        if (res.mismatch) cert.solver_mismatches.push_back(task);
        for (auto& pair : res.pairs) cert.solutions.push_back({task.m, task.r, std::move(pair)});
    }
    std::sort(cert.solutions.begin(), cert.solutions.end(), less_solution);
    return cert;
}

SearchCertificate scan_determinized(std::uint64_t m_min, std::uint64_t m_max, unsigned k) {
    SearchParams p;
    p.m_min = m_min;
    p.m_max = m_max;
    p.k = k;
    p.mode = SearchMode::Determinized;
    return run_search(p);
}

SearchCertificate uniqueness_report(std::uint64_t m, unsigned k) {
    SearchParams p;
    p.m_min = m;
    p.m_max = m;
    p.k = k;
    p.mode = SearchMode::Brute;
    p.cross_check = true;
    return run_search(p);
}

SearchCertificate merge(const SearchCertificate& a, const SearchCertificate& b) {
    if (a.m_min != b.m_min || a.m_max != b.m_max || a.k != b.k || a.mode != b.mode ||
        a.shard_count != b.shard_count)
        throw std::invalid_argument("merge: certificates describe different searches");
    SearchCertificate out = a;
    for (auto s : b.shard_indices) {
        if (std::find(a.shard_indices.begin(), a.shard_indices.end(), s) != a.shard_indices.end())
            throw std::invalid_argument("merge: shard " + std::to_string(s) + " present twice");
        out.shard_indices.push_back(s);
    }
    std::sort(out.shard_indices.begin(), out.shard_indices.end());
    out.intersections_examined += b.intersections_examined;
    out.candidates_examined += b.candidates_examined;
    out.solutions.insert(out.solutions.end(), b.solutions.begin(), b.solutions.end());
    out.uniqueness_violations.insert(out.uniqueness_violations.end(), b.uniqueness_violations.begin(),
                                     b.uniqueness_violations.end());
    out.solver_mismatches.insert(out.solver_mismatches.end(), b.solver_mismatches.begin(),
                                 b.solver_mismatches.end());
    std::sort(out.solutions.begin(), out.solutions.end(), less_solution);
    std::sort(out.uniqueness_violations.begin(), out.uniqueness_violations.end(), less_intersection);
    std::sort(out.solver_mismatches.begin(), out.solver_mismatches.end(), less_intersection);
    return out;
}

}  // namespace tmpart
