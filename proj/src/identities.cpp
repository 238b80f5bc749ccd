#include "qgonal/identities.hpp"

#include <stdexcept>
#include <string>

#include "qgonal/gonal.hpp"

namespace qgonal {

namespace {

int alternating(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

// Calls f(k, P_{g,k}, Q_{g,k}) for k = 1, 2, ... while P_{g,k} <= limit.
// Interleaving P_k < Q_k < P_{k+1} means no later term can reach the limit.
template <typename F>
void for_each_gonal_pair(std::int64_t g, std::int64_t limit, F&& f)
{
    for (std::int64_t k = 1;; ++k) {
        const auto p = gonal_number_i64(g, k);
        if (p > limit)
            break;
        f(k, p, gonal_number_i64(g, -k));
    }
}

void require_m(std::int64_t m)
{
    if (m < 3)
        throw std::invalid_argument("identity requires m >= 3, got m = " + std::to_string(m));
}

void require_positive(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("identity is stated for n >= 1");
}

void require_covers(const PartitionTable& t, std::int64_t last)
{
    if (last > t.max_n())
        throw std::out_of_range("table too short: " + t.family().name() + " covers 0.." + std::to_string(t.max_n())
                                + ", need " + std::to_string(last));
}

void require_covers(const DivisorTable& t, std::int64_t last)
{
    if (last > t.max_n())
        throw std::out_of_range("table too short: divisor table covers 1.." + std::to_string(t.max_n()) + ", need "
                                + std::to_string(last));
}

void require_family(const PartitionTable& t, FamilyKind kind)
{
    if (t.family().kind() != kind)
        throw std::invalid_argument("recurrence given a table of the wrong family: " + t.family().name());
}

void require_pprime(const PartitionTable& t, std::int64_t m)
{
    require_family(t, FamilyKind::PPrime);
    if (t.family().m() != m)
        throw std::invalid_argument("p'_m table built for a different m");
}

// Sign of the triangular-number series 1 - sum(q^D(4k+1) + q^D(4k+2)) + sum(q^D(4k+3) + q^D(4k+4)).
int triangular_sign(std::int64_t n)
{
    if (n == 0)
        return 1;
    if (!is_triangular(n))
        return 0;
    // n = j(j+1)/2 with j >= 1.
    Integer root;
    const Integer d = Integer(8) * make_integer(n) + 1;
    mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
    const auto j = (root.get_si() - 1) / 2;
    const auto r = j % 4;
    return (r == 1 || r == 2) ? -1 : 1;
}

} // namespace

int correction_m(std::int64_t n)
{
    if (n == 0)
        return 1;
    if (n < 0 || n % 5 != 0)
        return 0;
    const auto target = n / 5;
    int value = 0;
    int hits = 0;
    for_each_gonal_pair(5, target, [&](std::int64_t k, std::int64_t p, std::int64_t q) {
        if (p == target) {
            value = alternating(k);
            ++hits;
        }
        if (q == target) {
            value = alternating(k);
            ++hits;
        }
    });
    if (hits > 1)
        throw std::logic_error("n/5 matched more than one pentagonal number");
    return value;
}

int correction_k(std::int64_t n) { return is_triangular(n) ? 1 : 0; }

int correction_l(std::int64_t n)
{
    if (n < 0)
        return 0;
    return triangular_sign(2 * n);
}

Integer rec_p25_p35(std::int64_t n, const PartitionTable& p)
{
    require_family(p, FamilyKind::Unrestricted);
    require_covers(p, n);
    Integer total = p(n);
    for_each_gonal_pair(7, n, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        if (alternating(k) > 0)
            total += p(n - pk) + p(n - qk);
        else
            total -= p(n - pk) + p(n - qk);
    });
    return total;
}

Integer rec_p15_p45(std::int64_t n, const PartitionTable& f)
{
    require_family(f, FamilyKind::P15P45);
    require_covers(f, n - 1);
    Integer total = correction_m(n);
    for_each_gonal_pair(7, n, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        if (alternating(k + 1) > 0)
            total += f(n - pk) + f(n - qk);
        else
            total -= f(n - pk) + f(n - qk);
    });
    return total;
}

Integer rec_q_doubled_pentagonal(std::int64_t n, const PartitionTable& q)
{
    require_family(q, FamilyKind::Distinct);
    require_covers(q, n - 1);
    Integer total = correction_k(n);
    for_each_gonal_pair(5, n / 2, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        if (alternating(k + 1) > 0)
            total += q(n - 2 * pk) + q(n - 2 * qk);
        else
            total -= q(n - 2 * pk) + q(n - 2 * qk);
    });
    return total;
}

Integer rec_q_halved_pentagonal(std::int64_t n, const PartitionTable& q)
{
    require_family(q, FamilyKind::Distinct);
    require_covers(q, n - 1);
    // q(x) = 0 unless x is a non-negative integer.
    const auto half = [&q](std::int64_t twice) -> Integer {
        if (twice < 0 || twice % 2 != 0)
            return 0;
        return q(twice / 2);
    };
    Integer total = correction_l(n);
    for_each_gonal_pair(5, 2 * n, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        if (alternating(k + 1) > 0)
            total += half(2 * n - pk) + half(2 * n - qk);
        else
            total -= half(2 * n - pk) + half(2 * n - qk);
    });
    return total;
}

Integer rec_pprime(std::int64_t m, std::int64_t n, const PartitionTable& pprime)
{
    require_m(m);
    require_positive(n);
    require_pprime(pprime, m);
    require_covers(pprime, n - 1);
    Integer total = 0;
    for_each_gonal_pair(m + 2, n, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        if (alternating(k + 1) > 0)
            total += pprime(n - pk) + pprime(n - qk);
        else
            total -= pprime(n - pk) + pprime(n - qk);
    });
    return total;
}

Integer sigma_from_pprime(std::int64_t m, std::int64_t n, const PartitionTable& pprime)
{
    require_m(m);
    require_positive(n);
    require_pprime(pprime, m);
    require_covers(pprime, n - 1);
    Integer total = 0;
    for_each_gonal_pair(m + 2, n, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        Integer term = make_integer(pk) * pprime(n - pk) + make_integer(qk) * pprime(n - qk);
        if (alternating(k + 1) > 0)
            total += term;
        else
            total -= term;
    });
    return total;
}

Integer sigma_recurrence(std::int64_t m, std::int64_t n, const DivisorTable& sigma)
{
    require_m(m);
    require_positive(n);
    if (sigma.m() != m)
        throw std::invalid_argument("divisor table built for a different m");
    require_covers(sigma, n - 1);
    Integer total = -make_integer(n) * e_coeff(GonalSpec(m + 2), n);
    for_each_gonal_pair(m + 2, n, [&](std::int64_t k, std::int64_t pk, std::int64_t qk) {
        if (alternating(k + 1) > 0)
            total += sigma(n - pk) + sigma(n - qk);
        else
            total -= sigma(n - pk) + sigma(n - qk);
    });
    return total;
}

Integer euler_convolution(std::int64_t m, std::int64_t n, const DivisorTable& sigma, const PartitionTable& pprime)
{
    require_m(m);
    require_positive(n);
    require_pprime(pprime, m);
    if (sigma.m() != m)
        throw std::invalid_argument("divisor table built for a different m");
    require_covers(sigma, n);
    require_covers(pprime, n - 1);
    Integer total = 0;
    for (std::int64_t k = 1; k <= n; ++k)
        mpz_addmul(total.get_mpz_t(), sigma(k).get_mpz_t(), pprime(n - k).get_mpz_t());
    return total;
}

} // namespace qgonal
