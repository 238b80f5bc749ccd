#include "qgonal/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qgonal {

namespace {

const Integer& zero_integer()
{
    static const Integer zero{0};
    return zero;
}

void check_order(std::int64_t order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be non-negative");
}

} // namespace

Integer factorial(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of a negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

TruncatedSeries::TruncatedSeries(std::int64_t order)
{
    check_order(order);
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer{0});
}

TruncatedSeries::TruncatedSeries(std::int64_t order, std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs))
{
    check_order(order);
    if (coeffs_.size() > static_cast<std::size_t>(order) + 1)
        throw std::invalid_argument("more coefficients than the order allows");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, Integer{0});
}

TruncatedSeries::TruncatedSeries(std::int64_t order, std::initializer_list<long> coeffs)
    : TruncatedSeries(order, std::vector<Integer>(coeffs.begin(), coeffs.end()))
{
}

TruncatedSeries TruncatedSeries::one(std::int64_t order)
{
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::int64_t order, std::int64_t exponent, const Integer& x)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    TruncatedSeries s(order);
    if (exponent <= order)
        s.coeffs_[static_cast<std::size_t>(exponent)] = x;
    return s;
}

const Integer& TruncatedSeries::operator[](std::int64_t n) const
{
    if (n < 0)
        return zero_integer();
    if (n > order()) {
        throw std::out_of_range("coefficient " + std::to_string(n) + " requested from a series of order "
                                + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

Integer& TruncatedSeries::mutable_coeff(std::int64_t n)
{
    if (n < 0 || n > order())
        throw std::out_of_range("coefficient index outside 0..order");
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t order) const
{
    if (order > this->order())
        throw std::invalid_argument("cannot raise the order of a truncated series");
    return TruncatedSeries(order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

void TruncatedSeries::multiply_binomial(std::int64_t exponent, int sign)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    const auto n = order();
    if (exponent == 0) {
        for (auto& c : coeffs_)
            c *= 1 + sign;
        return;
    }
    // Descending so each update reads the pre-multiplication value.
    for (std::int64_t i = n; i >= exponent; --i) {
        auto& dst = coeffs_[static_cast<std::size_t>(i)];
        const auto& src = coeffs_[static_cast<std::size_t>(i - exponent)];
        if (sign > 0)
            dst += src;
        else
            dst -= src;
    }
}

void TruncatedSeries::divide_binomial(std::int64_t exponent, int sign)
{
    if (exponent <= 0)
        throw std::invalid_argument("division requires a positive exponent");
    // Ascending: c_i <- c_i - sign * c_{i-e} uses already-divided values.
    for (std::int64_t i = exponent; i <= order(); ++i) {
        auto& dst = coeffs_[static_cast<std::size_t>(i)];
        const auto& src = coeffs_[static_cast<std::size_t>(i - exponent)];
        if (sign > 0)
            dst -= src;
        else
            dst += src;
    }
}

ExponentClass::ExponentClass(std::int64_t offset, std::int64_t modulus)
    : offset(offset)
    , modulus(modulus)
{
    if (modulus < 1 || offset < 1 || offset > modulus)
        throw std::invalid_argument("exponent class requires 1 <= offset <= modulus");
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto order = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    for (std::int64_t i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = a[i] + b[i];
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto order = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    for (std::int64_t i = 0; i <= order; ++i)
        c[static_cast<std::size_t>(i)] = a[i] - b[i];
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Integer& x)
{
    std::vector<Integer> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : c)
        v *= x;
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto order = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(order) + 1, Integer{0});
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    for (std::int64_t i = 0; i <= order; ++i) {
        const auto& ai = ac[static_cast<std::size_t>(i)];
        if (sgn(ai) == 0)
            continue;
        for (std::int64_t j = 0; i + j <= order; ++j) {
            const auto& bj = bc[static_cast<std::size_t>(j)];
            if (sgn(bj) != 0)
                mpz_addmul(c[static_cast<std::size_t>(i + j)].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_invert(const TruncatedSeries& a)
{
    if (a[0] != 1)
        throw std::domain_error("series is not invertible over the integers: constant term is " + to_string(a[0]));
    const auto order = a.order();

    // Sparse inputs (products of binomials) are the common case.
    std::vector<std::int64_t> support;
    for (std::int64_t k = 1; k <= order; ++k)
        if (sgn(a[k]) != 0)
            support.push_back(k);

    std::vector<Integer> b(static_cast<std::size_t>(order) + 1, Integer{0});
    b[0] = 1;
    for (std::int64_t n = 1; n <= order; ++n) {
        auto& bn = b[static_cast<std::size_t>(n)];
        for (const auto k : support) {
            if (k > n)
                break;
            mpz_submul(bn.get_mpz_t(), a[k].get_mpz_t(), b[static_cast<std::size_t>(n - k)].get_mpz_t());
        }
    }
    return TruncatedSeries(order, std::move(b));
}

TruncatedSeries pochhammer_product(std::span<const ExponentClass> classes, std::int64_t order)
{
    if (classes.empty())
        throw std::invalid_argument("pochhammer_product needs at least one exponent class");
    auto s = TruncatedSeries::one(order);
    for (const auto& cls : classes)
        for (auto e = cls.offset; e <= order; e += cls.modulus)
            s.multiply_binomial(e, -1);
    return s;
}

TruncatedSeries pochhammer_product(std::initializer_list<ExponentClass> classes, std::int64_t order)
{
    return pochhammer_product(std::span<const ExponentClass>(classes.begin(), classes.size()), order);
}

TruncatedSeries finite_pochhammer(std::int64_t n, std::int64_t order)
{
    if (n < 0)
        throw std::invalid_argument("finite_pochhammer needs n >= 0");
    auto s = TruncatedSeries::one(order);
    for (std::int64_t k = 1; k <= n && k <= order; ++k)
        s.multiply_binomial(k, -1);
    return s;
}

TruncatedSeries rr_sum_series(RogersRamanujan variant, std::int64_t order)
{
    const std::int64_t shift = variant == RogersRamanujan::First ? 0 : 1;
    auto total = TruncatedSeries(order);
    // term_n = q^(n^2 + shift*n) / (q;q)_n, built incrementally from term_{n-1}.
    auto term = TruncatedSeries::one(order);
    std::int64_t lead = 0;
    for (std::int64_t n = 0;; ++n) {
        if (n > 0) {
            const auto next_lead = n * n + shift * n;
            if (next_lead > order)
                break;
            // Shift the term up by next_lead - lead.
            const auto delta = next_lead - lead;
            std::vector<Integer> shifted(static_cast<std::size_t>(order) + 1, Integer{0});
            for (std::int64_t i = order; i >= delta; --i)
                shifted[static_cast<std::size_t>(i)] = term[i - delta];
            term = TruncatedSeries(order, std::move(shifted));
            term.divide_binomial(n, -1);
            lead = next_lead;
        }
        for (std::int64_t i = lead; i <= order; ++i)
            total.mutable_coeff(i) += term[i];
    }
    return total;
}

Integer coefficient(const TruncatedSeries& a, std::int64_t n) { return a[n]; }

std::int64_t first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const auto order = std::min(a.order(), b.order());
    for (std::int64_t i = 0; i <= order; ++i)
        if (a[i] != b[i])
            return i;
    return -1;
}

std::string to_string(const TruncatedSeries& a)
{
    std::ostringstream os;
    bool first = true;
    for (std::int64_t i = 0; i <= a.order(); ++i) {
        const auto& c = a[i];
        if (sgn(c) == 0)
            continue;
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        Integer mag = abs(c);
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i > 0)
            os << (i == 1 ? "q" : "q^" + std::to_string(i));
    }
    if (first)
        os << "0";
    os << " + O(q^" << a.order() + 1 << ")";
    return os.str();
}

} // namespace qgonal
