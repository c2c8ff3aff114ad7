#include "tmpart/genfun.hpp"

#include <stdexcept>
#include <string>

#include "tmpart/repfn.hpp"

namespace tmpart {
namespace {

IdentityResult compare(const IntPoly& lhs, const IntPoly& rhs, std::uint64_t degree) {
    const auto diff = first_difference(lhs, rhs, degree);
    return {!diff.has_value(), diff};
}

void require_equal_profiles(const PartitionPair& p, const char* who) {
    if (first_divergence(p.c(), p.d(), 2 * p.m()))
        throw std::invalid_argument(std::string(who) + ": pair does not satisfy R_C = R_D");
}

void require_two_point_intersection(const PartitionPair& p, const char* who) {
    if (p.intersection().size() != 2)
        throw std::invalid_argument(std::string(who) + ": intersection must have exactly 2 elements, got " +
                                    std::to_string(p.intersection().size()));
}

}  // namespace

IntPoly char_poly(const NatSet& s) {
    if (s.empty()) return {};
    std::vector<IntPoly::Coeff> v(s.max() + 1, 0);
    for (auto e : s.elements()) v[e] = 1;
    return IntPoly(std::move(v));
}

bool check_square_identity(const NatSet& s, std::uint64_t degree) {
    if (!s.empty() && degree < 2 * s.max())
        throw std::invalid_argument("check_square_identity: degree must be at least 2 max(S)");
    const auto p = char_poly(s);
    const auto lhs = p * p - p.compose_power(2);
    const auto profile = rep_profile(s, degree);
    std::vector<IntPoly::Coeff> r(profile.counts.size());
    for (std::size_t n = 0; n < r.size(); ++n) r[n] = 2 * static_cast<IntPoly::Coeff>(profile.counts[n]);
    return !first_difference(lhs, IntPoly(std::move(r)), degree).has_value();
}

PairIdentityReport check_pair_identities(const PartitionPair& pair) {
    require_two_point_intersection(pair, "check_pair_identities");
    const auto m = pair.m();
    const auto r1 = *pair.r1();
    const auto r2 = *pair.r2();

    const auto pc = char_poly(pair.c());
    const auto pd = char_poly(pair.d());
    const auto g = IntPoly::geometric(m);
    const auto g2 = IntPoly::geometric(m, 2);
    const auto x1 = IntPoly::monomial(r1);
    const auto x2 = IntPoly::monomial(r2);

    PairIdentityReport rep;
    rep.degree = 2 * m + 2;
    rep.complement = compare(pd, g - pc + x1 + x2, rep.degree);

    const auto lhs = 2 * pc.compose_power(2);
    const auto rhs = g2 + 2 * (pc * x1) + 2 * (pc * x2) + 2 * (pc * g) - g * g - 2 * (x1 * g) - 2 * (x2 * g) -
                     IntPoly::monomial(r1 + r2, 2);
    rep.pair = compare(lhs, rhs, rep.degree);
    return rep;
}

PairIdentityReport check_pair_identities(std::uint64_t m, const NatSet& c, const NatSet& d) {
    return check_pair_identities(PartitionPair::canonical(m, c, d));
}

const char* to_string(ChiRecurrence r) noexcept {
    switch (r) {
        case ChiRecurrence::Lower: return "LOWER";
        case ChiRecurrence::UpperViaR1: return "UPPER_R1";
        case ChiRecurrence::UpperViaR2: return "UPPER_R2";
    }
    return "?";
}

const char* to_string(ProbeResult r) noexcept {
    switch (r) {
        case ProbeResult::Holds: return "HOLDS";
        case ProbeResult::Fails: return "FAILS";
        case ProbeResult::NotApplicable: return "NOT_APPLICABLE";
    }
    return "?";
}

ProbeResult chi_probe(const PartitionPair& p, ChiRecurrence which, std::int64_t k) {
    if (k <= 0 || k % 2 != 0) throw std::invalid_argument("chi_probe: k must be a positive even integer");
    require_two_point_intersection(p, "chi_probe");
    require_equal_profiles(p, "chi_probe");

    const auto r1 = static_cast<std::int64_t>(*p.r1());
    const auto r2 = static_cast<std::int64_t>(*p.r2());
    const auto m = static_cast<std::int64_t>(p.m());
    const auto& c = p.c();
    auto chi = [&](std::int64_t n) { return c.chi(n); };

    int lhs = chi(k / 2);
    int rhs = 0;
    switch (which) {
        case ChiRecurrence::Lower: {
            const auto cap = std::min(r2, 2 * r1);
            if (!(r1 <= k && k + 1 < cap && cap <= m)) return ProbeResult::NotApplicable;
            rhs = chi(k - r1) - chi(k + 1 - r1) - chi(k + 1) + 1;
            break;
        }
        case ChiRecurrence::UpperViaR1:
        case ChiRecurrence::UpperViaR2: {
            if (!(r2 < k && k + 1 < 2 * r1 && r1 + r2 <= m)) return ProbeResult::NotApplicable;
            rhs = which == ChiRecurrence::UpperViaR1 ? chi(k - r1) - chi(k - 1 - r2) + chi(k)
                                                     : chi(k - r2) - chi(k + 1 - r1) - chi(k + 1) + 1;
            break;
        }
    }
    return lhs == rhs ? ProbeResult::Holds : ProbeResult::Fails;
}

bool check_half_r1(const PartitionPair& p) {
    require_two_point_intersection(p, "check_half_r1");
    const auto r1 = *p.r1();
    const auto r2 = *p.r2();
    if (r1 % 2 != 0) throw std::invalid_argument("check_half_r1: r1 must be even");
    if (r1 + r2 > p.m()) throw std::invalid_argument("check_half_r1: requires r1 + r2 <= m");
    require_equal_profiles(p, "check_half_r1");
    return p.c().contains(r1 / 2);
}

}  // namespace tmpart
