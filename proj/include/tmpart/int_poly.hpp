// int_poly.hpp
// Dense polynomials with exact int64 coefficients. Every operation checks
// for overflow and throws std::overflow_error rather than wrapping.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace tmpart {

class IntPoly {
public:
    using Coeff = std::int64_t;

    IntPoly() = default;
    explicit IntPoly(std::vector<Coeff> coeffs);
    IntPoly(std::initializer_list<Coeff> coeffs) : IntPoly(std::vector<Coeff>(coeffs)) {}

    static IntPoly monomial(std::uint64_t exponent, Coeff c = 1);
    // 1 + x^step + x^{2 step} + ... + x^{terms_minus_one * step}
    static IntPoly geometric(std::uint64_t terms_minus_one, std::uint64_t step = 1);

    // -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Coeff operator[](std::uint64_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    // p(x) -> p(x^k)
    IntPoly compose_power(std::uint64_t k) const;
    IntPoly truncated(std::uint64_t max_degree) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly::Coeff k, const IntPoly& a);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();
    std::vector<Coeff> coeffs_;
};

// Least exponent <= max_degree where a and b differ.
std::optional<std::uint64_t> first_difference(const IntPoly& a, const IntPoly& b, std::uint64_t max_degree);

}  // namespace tmpart
