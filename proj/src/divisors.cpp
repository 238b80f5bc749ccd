#include "qgonal/divisors.hpp"

#include <stdexcept>
#include <string>

namespace qgonal {

namespace {

bool in_pprime_class(std::int64_t d, std::int64_t m)
{
    const auto r = d % m;
    return r == 0 || r == 1 || r == m - 1;
}

void require_m(std::int64_t m)
{
    if (m < 3)
        throw std::invalid_argument("restricted divisor sums require m >= 3, got m = " + std::to_string(m));
}

} // namespace

Integer sigma_rm(std::int64_t r, std::int64_t m, std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("divisor sums are defined for n >= 1");
    if (m < 1 || r < 0 || r >= m)
        throw std::invalid_argument("sigma_rm requires m >= 1 and 0 <= r < m");
    Integer total = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        const auto e = n / d;
        if (d % m == r)
            total += make_integer(d);
        if (e != d && e % m == r)
            total += make_integer(e);
    }
    return total;
}

Integer sigma(std::int64_t n) { return sigma_rm(0, 1, n); }

Integer sigma_prime(std::int64_t m, std::int64_t n)
{
    require_m(m);
    // Classes m-1, 0, 1 are pairwise distinct for m >= 3.
    return sigma_rm(m - 1, m, n) + sigma_rm(0, m, n) + sigma_rm(1, m, n);
}

DivisorTable::DivisorTable(std::int64_t m, std::int64_t max_n)
    : m_(m)
{
    require_m(m);
    if (max_n < 0)
        throw std::invalid_argument("max_n must be non-negative");
    values_.assign(static_cast<std::size_t>(max_n) + 1, Integer{0});
    for (std::int64_t d = 1; d <= max_n; ++d) {
        if (!in_pprime_class(d, m))
            continue;
        for (auto k = d; k <= max_n; k += d)
            values_[static_cast<std::size_t>(k)] += static_cast<unsigned long>(d);
    }
}

const Integer& DivisorTable::operator()(std::int64_t n) const
{
    static const Integer zero{0};
    if (n <= 0)
        return zero;
    if (n > max_n()) {
        throw std::out_of_range("divisor table covers 1.." + std::to_string(max_n()) + ", requested "
                                + std::to_string(n));
    }
    return values_[static_cast<std::size_t>(n)];
}

TruncatedSeries lambert_series_sigma_prime(std::int64_t m, std::int64_t order)
{
    require_m(m);
    auto total = TruncatedSeries(order);
    for (std::int64_t n = 1; n <= order; ++n) {
        if (!in_pprime_class(n, m))
            continue;
        // n q^n / (1 - q^n)
        auto term = TruncatedSeries::monomial(order, n, make_integer(n));
        term.divide_binomial(n, -1);
        total = series_add(total, term);
    }
    return total;
}

} // namespace qgonal
