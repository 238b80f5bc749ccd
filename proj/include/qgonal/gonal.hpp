#ifndef QGONAL_GONAL_HPP
#define QGONAL_GONAL_HPP

#include <cstdint>

#include "qgonal/integer.hpp"
#include "qgonal/series.hpp"

namespace qgonal {

/// Polygonality parameter g. Gonal numbers are defined for g > 3; the
/// product identities additionally need g >= 5 (see require_identity_range).
class GonalSpec {
public:
    explicit GonalSpec(std::int64_t g);

    std::int64_t g() const noexcept { return g_; }
    /// Throws std::invalid_argument unless g >= 5.
    const GonalSpec& require_identity_range() const;

private:
    std::int64_t g_;
};

/// n((g-2)n - (g-4))/2 for any integer n. Q_{g,k} is gonal_number(spec, -k).
Integer gonal_number(const GonalSpec& spec, std::int64_t n);

/// Native-width gonal number for loops bounded by a series order.
/// Throws std::overflow_error if the value does not fit in 64 bits.
std::int64_t gonal_number_i64(std::int64_t g, std::int64_t n);

/// n(n+1)/2.
Integer triangular(std::int64_t n);
std::int64_t triangular_i64(std::int64_t n);

/// Coefficient of q^n in (q;q^(g-2))(q^(g-3);q^(g-2))(q^(g-2);q^(g-2)):
/// 1 at n = 0, (-1)^k at n = P_{g,k} or Q_{g,k} (k >= 1), else 0.
/// Solves the gonal quadratic exactly.
int e_coeff(const GonalSpec& spec, std::int64_t n);

/// Same value as e_coeff, found by scanning k up to ceil(sqrt(2n/(g-2))) + 2.
int e_coeff_scan(const GonalSpec& spec, std::int64_t n);

/// sum_{n<=order} e_{g,n} q^n, placed by walking the gonal numbers. Requires g >= 5.
TruncatedSeries gonal_series(const GonalSpec& spec, std::int64_t order);

/// (q; q^(g-2))_inf (q^(g-3); q^(g-2))_inf (q^(g-2); q^(g-2))_inf. Requires g >= 5.
TruncatedSeries theorem1_lhs(const GonalSpec& spec, std::int64_t order);

/// True if n = k(k+1)/2 for some k >= 0.
bool is_triangular(std::int64_t n);

} // namespace qgonal

#endif
