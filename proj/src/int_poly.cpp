#include "tmpart/int_poly.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace tmpart {
namespace {

using Coeff = IntPoly::Coeff;

inline Coeff add_checked(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("IntPoly: coefficient overflow");
    return r;
}

inline Coeff sub_checked(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("IntPoly: coefficient overflow");
    return r;
}

inline Coeff mul_checked(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("IntPoly: coefficient overflow");
    return r;
}

constexpr std::size_t kKaratsubaCutoff = 32;

// out[0 .. a.size()+b.size()-2] += a * b, schoolbook.
void mul_schoolbook(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = add_checked(out[i + j], mul_checked(a[i], b[j]));
    }
}

// Karatsuba on equal-length operands; out has size 2n-1 and is accumulated into.
void mul_karatsuba(std::span<const Coeff> a, std::span<const Coeff> b, std::span<Coeff> out) {
    const std::size_t n = a.size();
    if (n <= kKaratsubaCutoff) {
        mul_schoolbook(a, b, out);
        return;
    }
    const std::size_t h = n / 2;
    const std::size_t hi_len = n - h;
    auto a0 = a.first(h), a1 = a.subspan(h);
    auto b0 = b.first(h), b1 = b.subspan(h);

    std::vector<Coeff> z0(2 * h - 1, 0), z2(2 * hi_len - 1, 0);
    mul_karatsuba(a0, b0, z0);
    mul_karatsuba(a1, b1, z2);

    std::vector<Coeff> sa(hi_len, 0), sb(hi_len, 0);
    for (std::size_t i = 0; i < hi_len; ++i) {
        sa[i] = add_checked(a1[i], i < h ? a0[i] : 0);
        sb[i] = add_checked(b1[i], i < h ? b0[i] : 0);
    }
    std::vector<Coeff> z1(2 * hi_len - 1, 0);
    mul_karatsuba(sa, sb, z1);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = sub_checked(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = sub_checked(z1[i], z2[i]);

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] = add_checked(out[i], z0[i]);
    for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] = add_checked(out[i + h], z1[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = add_checked(out[i + 2 * h], z2[i]);
}

}  // namespace

IntPoly::IntPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(std::uint64_t exponent, Coeff c) {
    std::vector<Coeff> v(exponent + 1, 0);
    v[exponent] = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::geometric(std::uint64_t terms_minus_one, std::uint64_t step) {
    if (step == 0) throw std::invalid_argument("IntPoly::geometric: step must be positive");
    std::vector<Coeff> v(terms_minus_one * step + 1, 0);
    for (std::uint64_t i = 0; i <= terms_minus_one; ++i) v[i * step] = 1;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose_power(std::uint64_t k) const {
    if (k == 0) throw std::invalid_argument("IntPoly::compose_power: k must be positive");
    if (is_zero()) return {};
    std::vector<Coeff> v((coeffs_.size() - 1) * k + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::truncated(std::uint64_t max_degree) const {
    std::vector<Coeff> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                               std::min<std::uint64_t>(coeffs_.size(), max_degree + 1)));
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = add_checked(a[i], b[i]);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = sub_checked(a[i], b[i]);
    return IntPoly(std::move(v));
}

IntPoly operator*(Coeff k, const IntPoly& a) {
    std::vector<Coeff> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = mul_checked(k, a.coeffs_[i]);
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Coeff> pa(a.coeffs_), pb(b.coeffs_);
    pa.resize(n, 0);
    pb.resize(n, 0);
    std::vector<Coeff> out(2 * n - 1, 0);
    mul_karatsuba(pa, pb, out);
    return IntPoly(std::move(out));
}

std::optional<std::uint64_t> first_difference(const IntPoly& a, const IntPoly& b, std::uint64_t max_degree) {
    const auto top = std::min<std::uint64_t>(max_degree, std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::uint64_t i = 0; i <= top; ++i)
        if (a[i] != b[i]) return i;
    return std::nullopt;
}

}  // namespace tmpart
