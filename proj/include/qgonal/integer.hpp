#ifndef QGONAL_INTEGER_HPP
#define QGONAL_INTEGER_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qgonal {

/// Arbitrary-precision signed integer used for every coefficient and count.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(10); }

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 required for Integer conversions");

inline Integer make_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

Integer factorial(std::int64_t n);
Integer binomial(std::int64_t n, std::int64_t k);

} // namespace qgonal

#endif
