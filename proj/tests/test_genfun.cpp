#include "doctest.h"

#include <algorithm>
#include <climits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "tmpart/constructions.hpp"
#include "tmpart/genfun.hpp"
#include "tmpart/repfn.hpp"

using namespace tmpart;

namespace {

std::vector<std::int64_t> naive_convolution(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

NatSet toggle(const NatSet& s, std::uint64_t add, std::uint64_t remove, std::uint64_t bound) {
    auto e = s.elements();
    std::erase(e, remove);
    e.push_back(add);
    std::sort(e.begin(), e.end());
    return NatSet::from_elements(e, bound);
}

}  // namespace

TEST_CASE("char_poly") {
    CHECK(char_poly(NatSet::from_elements({0, 1})) == IntPoly{1, 1});
    CHECK(char_poly(NatSet::from_elements({0, 3})) == IntPoly{1, 0, 0, 1});
    CHECK(char_poly(NatSet{}).is_zero());
}

TEST_CASE("IntPoly basics") {
    CHECK(IntPoly{1, 2, 0, 0}.degree() == 1);
    CHECK(IntPoly{}.degree() == -1);
    CHECK(IntPoly::geometric(3) == IntPoly{1, 1, 1, 1});
    CHECK(IntPoly::geometric(2, 2) == IntPoly{1, 0, 1, 0, 1});
    CHECK((IntPoly{1, 1} * IntPoly{1, -1}) == IntPoly{1, 0, -1});
    CHECK(IntPoly{1, 2, 3}.compose_power(2) == IntPoly{1, 0, 2, 0, 3});
    CHECK((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
    CHECK(IntPoly{1, 2, 3}.truncated(1) == IntPoly{1, 2});
    CHECK_THROWS_AS(IntPoly{INT64_MAX} + IntPoly{1}, std::overflow_error);
    CHECK_THROWS_AS(3 * IntPoly{INT64_MAX / 2}, std::overflow_error);
}

TEST_CASE("multiplication agrees with naive convolution") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t da = rng() % 513, db = rng() % 513;
        std::vector<std::int64_t> a(da + 1), b(db + 1);
        for (auto& x : a) x = coeff(rng);
        for (auto& x : b) x = coeff(rng);
        a.back() = 1;
        b.back() = -1;
        const auto prod = IntPoly(a) * IntPoly(b);
        CHECK(prod.coeffs() == naive_convolution(a, b));
    }
}

TEST_CASE("square identity is universal") {
    CHECK(check_square_identity(NatSet::from_elements({0, 1}), 2));
    CHECK(check_square_identity(tm_prefix(3, TmClass::EvenOnes), 14));
    CHECK(check_square_identity(NatSet{}, 1));
    CHECK_THROWS_AS(check_square_identity(NatSet::from_elements({0, 5}), 9), std::invalid_argument);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint64_t> pool(201);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(50);
        const auto s = NatSet::from_elements(pool);
        CHECK(check_square_identity(s, 400));
    }
}

TEST_CASE("pair identities on builder outputs") {
    for (unsigned l = 1; l <= 3; ++l) {
        for (const auto& p : {theorem11_pair(l), remark12_pair(l)}) {
            const auto rep = check_pair_identities(p);
            CHECK(rep.degree == 2 * p.m() + 2);
            CHECK(rep.complement.holds);
            CHECK(rep.pair.holds);
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("swapping 4 and 5 in theorem11_pair(1) breaks only the pair identity") {
    const auto p = theorem11_pair(1);
    const auto c = toggle(p.c(), 4, 5, 13);
    const auto d = toggle(p.d(), 5, 4, 13);
    const auto rep = check_pair_identities(13, c, d);
    CHECK(rep.complement.holds);
    CHECK_FALSE(rep.pair.holds);
    REQUIRE(rep.pair.first_failure.has_value());
    // The pair identity fails iff the profiles differ.
    CHECK(first_divergence(c, d, 26).has_value());
}

TEST_CASE("pair identities reject malformed input") {
    const auto p = theorem11_pair(1);
    const auto gap = p.c() - NatSet::from_elements({5});
    const auto d_gap = p.d();
    CHECK_THROWS_AS(check_pair_identities(13, gap, d_gap), std::invalid_argument);
    CHECK_THROWS_AS(check_pair_identities(theoremC_pair(1)), std::invalid_argument);
    CHECK_THROWS_AS(check_pair_identities(dombi_pair(3)), std::invalid_argument);
}

TEST_CASE("pair identity agrees with profile equality") {
    // Every element of [1, 13] \ {6, 7} may be flipped between C and D.
    const auto base = theorem11_pair(1);
    for (std::uint64_t x = 1; x <= 13; ++x) {
        if (x == 6 || x == 7) continue;
        NatSet c = base.c(), d = base.d();
        const auto single = NatSet::from_elements({x});
        if (c.contains(x)) {
            c = c - single;
            d = d | single;
        } else {
            d = d - single;
            c = c | single;
        }
        const auto rep = check_pair_identities(13, c, d);
        CHECK(rep.complement.holds);
        CHECK(rep.pair.holds == !first_divergence(c, d, 26).has_value());
    }
}

TEST_CASE("chi_probe") {
    const auto p1 = theorem11_pair(1);
    CHECK(chi_probe(p1, ChiRecurrence::UpperViaR2, 8) == ProbeResult::Holds);
    CHECK(chi_probe(p1, ChiRecurrence::UpperViaR1, 8) == ProbeResult::Holds);
    CHECK(chi_probe(p1, ChiRecurrence::UpperViaR1, 10) == ProbeResult::Holds);
    CHECK(chi_probe(p1, ChiRecurrence::UpperViaR1, 12) == ProbeResult::NotApplicable);
    CHECK(chi_probe(p1, ChiRecurrence::UpperViaR1, 6) == ProbeResult::NotApplicable);
    for (std::int64_t k = 2; k <= 30; k += 2) CHECK(chi_probe(p1, ChiRecurrence::Lower, k) == ProbeResult::NotApplicable);
    CHECK_THROWS_AS(chi_probe(p1, ChiRecurrence::UpperViaR1, 9), std::invalid_argument);
    CHECK_THROWS_AS(chi_probe(p1, ChiRecurrence::UpperViaR1, 0), std::invalid_argument);

    // remark12 pairs have r1 + r2 > m, outside the window.
    CHECK(chi_probe(remark12_pair(1), ChiRecurrence::UpperViaR1, 12) == ProbeResult::NotApplicable);
}

TEST_CASE("chi_probe requires equal profiles") {
    const auto p = theorem11_pair(1);
    const PartitionPair broken(13, toggle(p.c(), 4, 5, 13), toggle(p.d(), 5, 4, 13));
    CHECK_THROWS_AS(chi_probe(broken, ChiRecurrence::UpperViaR1, 8), std::invalid_argument);
}

TEST_CASE("check_half_r1") {
    CHECK(check_half_r1(theorem11_pair(1)));
    CHECK(check_half_r1(theorem11_pair(2)));
    CHECK_THROWS_AS(check_half_r1(remark12_pair(1)), std::invalid_argument);
}
