#ifndef QGONAL_SERIES_HPP
#define QGONAL_SERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qgonal/integer.hpp"

namespace qgonal {

/// A formal power series in q kept modulo q^(order+1).
///
/// The truncation order is part of the value. Binary operations produce a
/// result at the smaller of the two operand orders and no operation ever
/// raises an order, so a missing coefficient can never be mistaken for zero.
class TruncatedSeries {
public:
    /// Zero series of the given order.
    explicit TruncatedSeries(std::int64_t order);
    /// Takes coefficients c_0..c_order; a shorter list is zero-padded.
    TruncatedSeries(std::int64_t order, std::vector<Integer> coeffs);
    TruncatedSeries(std::int64_t order, std::initializer_list<long> coeffs);

    static TruncatedSeries one(std::int64_t order);
    /// x * q^exponent, or zero if exponent > order.
    static TruncatedSeries monomial(std::int64_t order, std::int64_t exponent, const Integer& x = 1);

    std::int64_t order() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// c_n for 0 <= n <= order, 0 for n < 0; throws std::out_of_range past the order.
    const Integer& operator[](std::int64_t n) const;
    Integer& mutable_coeff(std::int64_t n);

    /// Same series viewed at a lower order.
    TruncatedSeries truncated(std::int64_t order) const;

    /// In-place multiplication by (1 + sign*q^exponent).
    void multiply_binomial(std::int64_t exponent, int sign);
    /// In-place division by (1 + sign*q^exponent); exponent must be positive.
    void divide_binomial(std::int64_t exponent, int sign);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

/// Exponent class j + m*k (k >= 0), i.e. the factors of (q^j; q^m)_inf.
struct ExponentClass {
    std::int64_t offset;
    std::int64_t modulus;

    ExponentClass(std::int64_t offset, std::int64_t modulus);
};

enum class RogersRamanujan { First, Second };

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Integer& x);

/// Multiplicative inverse of a series with constant term 1.
/// Throws std::domain_error for any other constant term.
TruncatedSeries series_invert(const TruncatedSeries& a);

/// Product over all classes of (q^j; q^m)_inf, exact up to `order`.
TruncatedSeries pochhammer_product(std::span<const ExponentClass> classes, std::int64_t order);
TruncatedSeries pochhammer_product(std::initializer_list<ExponentClass> classes, std::int64_t order);

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
TruncatedSeries finite_pochhammer(std::int64_t n, std::int64_t order);

/// Sum side of the Rogers-Ramanujan identities:
/// First: sum q^(n^2)/(q;q)_n, Second: sum q^(n^2+n)/(q;q)_n.
TruncatedSeries rr_sum_series(RogersRamanujan variant, std::int64_t order);

/// Throws std::out_of_range when n > order; returns 0 for n < 0.
Integer coefficient(const TruncatedSeries& a, std::int64_t n);

/// Index of the first differing coefficient over 0..min order, or -1 if none.
std::int64_t first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

std::string to_string(const TruncatedSeries& a);

} // namespace qgonal

#endif
