#ifndef QGONAL_DIVISORS_HPP
#define QGONAL_DIVISORS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qgonal/integer.hpp"
#include "qgonal/series.hpp"

namespace qgonal {

/// Sum of the divisors d of n with d = r (mod m). Trial division up to sqrt(n).
Integer sigma_rm(std::int64_t r, std::int64_t m, std::int64_t n);

/// sigma(n), the full divisor sum.
Integer sigma(std::int64_t n);

/// sigma_{m-1,m}(n) + sigma_{0,m}(n) + sigma_{1,m}(n), for m >= 3.
Integer sigma_prime(std::int64_t m, std::int64_t n);

/// Divisor sums restricted to the classes 0, 1, m-1 (mod m), for 1..max_n.
class DivisorTable {
public:
    /// Sieve construction: each allowed d is added to all of its multiples.
    DivisorTable(std::int64_t m, std::int64_t max_n);

    std::int64_t m() const noexcept { return m_; }
    std::int64_t max_n() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
    std::span<const Integer> values() const noexcept { return values_; }

    /// 0 for n <= 0; throws std::out_of_range for n > max_n.
    const Integer& operator()(std::int64_t n) const;

private:
    std::int64_t m_;
    std::vector<Integer> values_;
};

/// sum over n = 0, 1, m-1 (mod m) of n q^n / (1 - q^n), truncated at `order`.
TruncatedSeries lambert_series_sigma_prime(std::int64_t m, std::int64_t order);

} // namespace qgonal

#endif
