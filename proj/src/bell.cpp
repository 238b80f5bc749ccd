#include "qgonal/bell.hpp"

#include <stdexcept>
#include <string>

#include "qgonal/divisors.hpp"
#include "qgonal/gonal.hpp"
#include "qgonal/partitions.hpp"

namespace qgonal {

namespace {

void require_m(std::int64_t m)
{
    if (m < 3)
        throw std::invalid_argument("Bell identities require m >= 3, got m = " + std::to_string(m));
}

void require_n(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("Bell identities are stated for n >= 1");
}

} // namespace

const Integer& BellInput::operator[](std::int64_t i) const
{
    if (i < 1 || i > size())
        throw std::out_of_range("Bell argument x_" + std::to_string(i) + " not supplied (have "
                                + std::to_string(size()) + ")");
    return xs_[static_cast<std::size_t>(i - 1)];
}

PartialBellTriangle::PartialBellTriangle(std::int64_t max_n, const BellInput& xs)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be non-negative");
    if (max_n > 0 && xs.size() < max_n)
        throw std::out_of_range("Bell triangle up to n = " + std::to_string(max_n) + " needs x_1..x_"
                                + std::to_string(max_n));
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    rows_[0] = {Integer{1}};
    for (std::int64_t n = 1; n <= max_n; ++n) {
        auto& row = rows_[static_cast<std::size_t>(n)];
        row.assign(static_cast<std::size_t>(n) + 1, Integer{0});
        std::vector<Integer> choose(static_cast<std::size_t>(n));
        for (std::int64_t i = 1; i <= n; ++i)
            choose[static_cast<std::size_t>(i - 1)] = binomial(n - 1, i - 1);
        for (std::int64_t k = 1; k <= n; ++k) {
            Integer total = 0;
            for (std::int64_t i = 1; i <= n - k + 1; ++i) {
                const auto& prev = rows_[static_cast<std::size_t>(n - i)];
                if (k - 1 >= static_cast<std::int64_t>(prev.size()))
                    continue;
                const auto& b = prev[static_cast<std::size_t>(k - 1)];
                if (sgn(b) == 0 || sgn(xs[i]) == 0)
                    continue;
                total += choose[static_cast<std::size_t>(i - 1)] * xs[i] * b;
            }
            row[static_cast<std::size_t>(k)] = std::move(total);
        }
    }
}

const Integer& PartialBellTriangle::operator()(std::int64_t n, std::int64_t k) const
{
    static const Integer zero{0};
    if (n < 0 || n > max_n() || k < 0)
        throw std::out_of_range("partial Bell index outside the computed triangle");
    if (k > n)
        return zero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer PartialBellTriangle::complete(std::int64_t n) const
{
    if (n == 0)
        return 1;
    Integer total = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        total += (*this)(n, k);
    return total;
}

Integer partial_bell(std::int64_t n, std::int64_t k, const BellInput& xs)
{
    if (k < 1 || k > n)
        throw std::out_of_range("partial_bell requires 1 <= k <= n");
    if (xs.size() < n - k + 1)
        throw std::out_of_range("partial_bell needs x_1..x_" + std::to_string(n - k + 1));
    // Entries beyond x_{n-k+1} never contribute to B_{n,k}; pad so the
    // triangle can be built from the supplied prefix.
    BellInput padded = xs;
    while (padded.size() < n)
        padded.push_back(0);
    return PartialBellTriangle(n, padded)(n, k);
}

Integer complete_bell(std::int64_t n, const BellInput& xs)
{
    if (n < 0)
        throw std::out_of_range("complete_bell requires n >= 0");
    if (n == 0)
        return 1;
    return PartialBellTriangle(n, xs).complete(n);
}

std::vector<Integer> complete_bell_recursive(std::int64_t max_n, const BellInput& xs)
{
    if (max_n < 0)
        throw std::out_of_range("complete_bell_recursive requires max_n >= 0");
    if (xs.size() < max_n)
        throw std::out_of_range("complete_bell_recursive needs x_1..x_" + std::to_string(max_n));
    std::vector<Integer> b(static_cast<std::size_t>(max_n) + 1);
    b[0] = 1;
    for (std::int64_t n = 0; n < max_n; ++n) {
        Integer total = 0;
        for (std::int64_t i = 0; i <= n; ++i)
            total += binomial(n, i) * b[static_cast<std::size_t>(n - i)] * xs[i + 1];
        b[static_cast<std::size_t>(n + 1)] = std::move(total);
    }
    return b;
}

Integer bell_inversion(const BellInput& ys, std::int64_t n)
{
    if (n < 1)
        throw std::out_of_range("bell_inversion requires n >= 1");
    if (ys.size() < n)
        throw std::out_of_range("bell_inversion needs y_1..y_" + std::to_string(n));
    const PartialBellTriangle t(n, ys);
    Integer total = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        Integer term = factorial(k - 1) * t(n, k);
        if (k % 2 == 0)
            total -= term;
        else
            total += term;
    }
    return total;
}

BellInput bell_d_sequence(std::int64_t m, std::int64_t n)
{
    require_m(m);
    const DivisorTable sigma(m, n);
    BellInput d;
    for (std::int64_t j = 1; j <= n; ++j)
        d.push_back(-factorial(j - 1) * sigma(j));
    return d;
}

BellInput bell_c_sequence(std::int64_t m, std::int64_t n)
{
    require_m(m);
    const DivisorTable sigma(m, n);
    BellInput c;
    for (std::int64_t j = 1; j <= n; ++j)
        c.push_back(factorial(j - 1) * sigma(j));
    return c;
}

std::pair<Integer, Integer> theorem31_check(std::int64_t m, std::int64_t n)
{
    require_m(m);
    require_n(n);
    Integer lhs = complete_bell(n, bell_d_sequence(m, n));
    Integer rhs = factorial(n) * e_coeff(GonalSpec(m + 2), n);
    return {std::move(lhs), std::move(rhs)};
}

std::pair<Integer, Integer> theorem32_check(std::int64_t m, std::int64_t n)
{
    require_m(m);
    require_n(n);
    Integer lhs = complete_bell(n, bell_c_sequence(m, n));
    Integer rhs = factorial(n) * build_table(PartitionFamily::pprime(m), n)(n);
    return {std::move(lhs), std::move(rhs)};
}

Integer sigma_from_bell_row(const PartialBellTriangle& t, std::int64_t n, bool alternate_from_minus)
{
    Integer total = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        Integer term = factorial(k - 1) * t(n, k);
        const bool negative = alternate_from_minus ? (k % 2 == 1) : (k % 2 == 0);
        if (negative)
            total -= term;
        else
            total += term;
    }
    const Integer denom = factorial(n - 1);
    if (mpz_divisible_p(total.get_mpz_t(), denom.get_mpz_t()) == 0)
        throw std::logic_error("Bell sum is not divisible by (n-1)! at n = " + std::to_string(n));
    Integer q;
    mpz_divexact(q.get_mpz_t(), total.get_mpz_t(), denom.get_mpz_t());
    return q;
}

Integer sigma_via_e(std::int64_t m, std::int64_t n)
{
    require_m(m);
    require_n(n);
    const GonalSpec spec(m + 2);
    BellInput xs;
    for (std::int64_t j = 1; j <= n; ++j)
        xs.push_back(factorial(j) * e_coeff(spec, j));
    return sigma_from_bell_row(PartialBellTriangle(n, xs), n, true);
}

Integer sigma_via_p(std::int64_t m, std::int64_t n)
{
    require_m(m);
    require_n(n);
    const auto p = build_table(PartitionFamily::pprime(m), n);
    BellInput xs;
    for (std::int64_t j = 1; j <= n; ++j)
        xs.push_back(factorial(j) * p(j));
    return sigma_from_bell_row(PartialBellTriangle(n, xs), n, false);
}

} // namespace qgonal
