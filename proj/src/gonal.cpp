#include "qgonal/gonal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgonal {

namespace {

// Exact integer square root for non-negative n, or -1 if n is not a square.
std::int64_t exact_sqrt(const Integer& n)
{
    if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0)
        return -1;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r.get_si();
}

int sign_for_index(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace

GonalSpec::GonalSpec(std::int64_t g)
    : g_(g)
{
    if (g <= 3)
        throw std::invalid_argument("gonal numbers require g > 3, got g = " + std::to_string(g));
}

const GonalSpec& GonalSpec::require_identity_range() const
{
    if (g_ < 5)
        throw std::invalid_argument("the gonal product identity requires g >= 5, got g = " + std::to_string(g_));
    return *this;
}

Integer gonal_number(const GonalSpec& spec, std::int64_t n)
{
    const Integer g = make_integer(spec.g());
    const Integer k = make_integer(n);
    Integer r = k * ((g - 2) * k - (g - 4));
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
    return r;
}

std::int64_t gonal_number_i64(std::int64_t g, std::int64_t n)
{
    __int128 v = static_cast<__int128>(n) * ((static_cast<__int128>(g) - 2) * n - (g - 4));
    v /= 2;
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("gonal number exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

Integer triangular(std::int64_t n)
{
    const Integer k = make_integer(n);
    Integer r = k * (k + 1);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
    return r;
}

std::int64_t triangular_i64(std::int64_t n)
{
    __int128 v = static_cast<__int128>(n) * (n + 1) / 2;
    if (v > INT64_MAX)
        throw std::overflow_error("triangular number exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

bool is_triangular(std::int64_t n)
{
    if (n < 0)
        return false;
    // n = k(k+1)/2  <=>  8n + 1 is an odd square.
    const Integer d = Integer(8) * make_integer(n) + 1;
    return exact_sqrt(d) >= 0;
}

int e_coeff(const GonalSpec& spec, std::int64_t n)
{
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    // (g-2)k^2 - (g-4)k - 2n = 0  =>  k = ((g-4) +- sqrt(D)) / (2(g-2)).
    const Integer a = make_integer(spec.g() - 2);
    const Integer b = make_integer(spec.g() - 4);
    const Integer disc = b * b + 8 * a * make_integer(n);
    const auto root = exact_sqrt(disc);
    if (root < 0)
        return 0;
    const Integer den = 2 * a;
    const Integer r = make_integer(root);
    for (const Integer& num : {Integer(b + r), Integer(b - r)}) {
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0) {
            const Integer k = num / den;
            if (sgn(k) != 0)
                return sign_for_index(Integer(abs(k)).get_si());
        }
    }
    return 0;
}

int e_coeff_scan(const GonalSpec& spec, std::int64_t n)
{
    if (n < 0)
        return 0;
    if (n == 0)
        return 1;
    const auto g = spec.g();
    const auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(n) / static_cast<double>(g - 2)))) + 2;
    for (std::int64_t k = 1; k <= bound; ++k) {
        if (gonal_number_i64(g, k) == n || gonal_number_i64(g, -k) == n)
            return sign_for_index(k);
    }
    return 0;
}

TruncatedSeries gonal_series(const GonalSpec& spec, std::int64_t order)
{
    auto s = TruncatedSeries::one(order);
    const auto g = spec.require_identity_range().g();
    for (std::int64_t k = 1;; ++k) {
        const auto p = gonal_number_i64(g, k);
        if (p > order)
            break;
        const int sign = sign_for_index(k);
        s.mutable_coeff(p) += sign;
        const auto q = gonal_number_i64(g, -k);
        if (q <= order)
            s.mutable_coeff(q) += sign;
    }
    return s;
}

TruncatedSeries theorem1_lhs(const GonalSpec& spec, std::int64_t order)
{
    const auto m = spec.require_identity_range().g() - 2;
    return pochhammer_product({ExponentClass(1, m), ExponentClass(m - 1, m), ExponentClass(m, m)}, order);
}

} // namespace qgonal
