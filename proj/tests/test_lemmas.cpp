#include "doctest.h"

#include <stdexcept>

#include "oracle.hpp"
#include "tmpart/constructions.hpp"
#include "tmpart/lemmas.hpp"

using namespace tmpart;
using Elems = std::vector<std::uint64_t>;

namespace {

// Premise evaluated with the std::set-free popcount oracle and a float-free log.
bool premise_oracle(std::uint64_t m, bool even) {
    unsigned L = 0;
    while ((std::uint64_t{1} << L) < m) ++L;
    for (unsigned i = 0; i < L; ++i)
        if (oracle::even_ones(m - (std::uint64_t{1} << i)) != even) return false;
    return true;
}

}  // namespace

TEST_CASE("ceil_log2 and is_mersenne") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(is_mersenne(0));
    CHECK(is_mersenne(7));
    CHECK_FALSE(is_mersenne(6));
}

TEST_CASE("digit lemma examples") {
    const auto a = verify_digit_lemma(100, TmClass::EvenOnes);
    CHECK(a.hits == Elems{7, 31});
    CHECK(a.violations.empty());
    CHECK(a.range_lo == 3);
    const auto b = verify_digit_lemma(100, TmClass::OddOnes);
    CHECK(b.hits == Elems{3, 15, 63});
    CHECK(b.violations.empty());
    CHECK(verify_digit_lemma(7, TmClass::EvenOnes).hits == Elems{7});
    CHECK_THROWS_AS(verify_digit_lemma(2, TmClass::EvenOnes), std::invalid_argument);
}

TEST_CASE("digit lemma hits equal the oracle scan") {
    const std::uint64_t top = 1 << 14;
    for (bool even : {true, false}) {
        const auto rep = verify_digit_lemma(top, even ? TmClass::EvenOnes : TmClass::OddOnes);
        Elems want;
        for (std::uint64_t m = 3; m <= top; ++m)
            if (premise_oracle(m, even)) want.push_back(m);
        CHECK(rep.hits == want);
        CHECK(rep.violations.empty());
    }
}

TEST_CASE("boundary cases are reported separately") {
    const auto b = verify_digit_lemma(20, TmClass::OddOnes, true);
    CHECK(b.range_lo == 1);
    CHECK(b.hits == Elems{3, 15});
    CHECK(b.violations.empty());
    // M = 1 (empty premise) and M = 2 (2 - 1 = 1 ∈ B but ceil(log2 2) = 1 is odd).
    REQUIRE(b.boundary.size() == 2);
    CHECK(b.boundary[0].m == 1);
    CHECK(b.boundary[1].m == 2);
    CHECK_FALSE(digit_conclusion(2, TmClass::OddOnes));

    const auto a = verify_digit_lemma(20, TmClass::EvenOnes, true);
    REQUIRE(a.boundary.size() == 1);
    CHECK(a.boundary[0].m == 1);
}

TEST_CASE("thue_morse_witness") {
    CHECK(thue_morse_witness(5) == 6);
    CHECK(thue_morse_witness(2) == 3);
    CHECK_THROWS_AS(thue_morse_witness(7), std::invalid_argument);
    CHECK_THROWS_AS(thue_morse_witness(1), std::invalid_argument);
    CHECK_THROWS_AS(thue_morse_witness(0), std::invalid_argument);

    for (std::uint64_t m = 2; m <= 200; ++m) {
        if (is_mersenne(m)) continue;
        const auto n = thue_morse_witness(m);
        CHECK(n > m);
        CHECK(n < 2 * m);
        const auto a = oracle::thue_morse(m, true), b = oracle::thue_morse(m, false);
        CHECK(oracle::rep_same(a, n) != oracle::rep_same(b, n));
        for (std::uint64_t x = m + 1; x < n; ++x) CHECK(oracle::rep_same(a, x) == oracle::rep_same(b, x));
    }
}

TEST_CASE("reflect_check") {
    const auto t = reflect_check(theorem11_pair(1));
    CHECK(t.ok);
    REQUIRE(t.reflected.has_value());
    CHECK(t.reflected->intersection().elements() == Elems{6, 7});
    CHECK(*t.reflected == theorem11_pair(1));

    const auto c = reflect_check(theoremC_pair(1));
    CHECK(c.ok);
    CHECK(c.reflected->intersection().elements() == Elems{3});

    const auto p = theorem11_pair(1);
    const auto broken = reflect_check(13, p.c() - NatSet::from_elements({5}), p.d());
    CHECK_FALSE(broken.ok);
    CHECK(broken.detail.find("invariants") != std::string::npos);

    for (auto f : {Family::Theorem11, Family::Remark12, Family::TheoremC, Family::Dombi})
        for (unsigned l = 1; l <= 3; ++l) CHECK(reflect_check(build(f, l)).ok);
}
