#include <doctest.h>

#include <functional>
#include <random>
#include <stdexcept>

#include "qgonal/bell.hpp"
#include "qgonal/divisors.hpp"
#include "qgonal/identities.hpp"
#include "qgonal/partitions.hpp"

using namespace qgonal;

namespace {

// Direct multinomial sum over (j_1..j_{n-k+1}) with sum j_i = k and
// sum i*j_i = n: n! prod (x_i/i!)^{j_i} / j_i!.
Integer partial_bell_by_compositions(std::int64_t n, std::int64_t k, const BellInput& xs)
{
    const auto top = n - k + 1;
    std::vector<std::int64_t> j(static_cast<std::size_t>(top) + 1, 0);
    mpq_class total = 0;
    const std::function<void(std::int64_t, std::int64_t, std::int64_t)> walk = [&](std::int64_t i, std::int64_t parts,
                                                                                  std::int64_t weight) {
        if (i > top) {
            if (parts != k || weight != n)
                return;
            mpq_class term = mpq_class(factorial(n));
            for (std::int64_t t = 1; t <= top; ++t) {
                const auto jt = j[static_cast<std::size_t>(t)];
                if (jt == 0)
                    continue;
                Integer xp;
                mpz_pow_ui(xp.get_mpz_t(), xs[t].get_mpz_t(), static_cast<unsigned long>(jt));
                Integer fp;
                mpz_pow_ui(fp.get_mpz_t(), factorial(t).get_mpz_t(), static_cast<unsigned long>(jt));
                term *= mpq_class(xp);
                term /= mpq_class(fp * factorial(jt));
            }
            total += term;
            return;
        }
        for (std::int64_t c = 0; parts + c <= k && weight + c * i <= n; ++c) {
            j[static_cast<std::size_t>(i)] = c;
            walk(i + 1, parts + c, weight + c * i);
        }
        j[static_cast<std::size_t>(i)] = 0;
    };
    walk(1, 0, 0);
    total.canonicalize();
    REQUIRE(total.get_den() == 1);
    return total.get_num();
}

// Stirling numbers of the second kind by the set-partition recurrence.
Integer stirling2(std::int64_t n, std::int64_t k)
{
    if (n == 0 && k == 0)
        return 1;
    if (n == 0 || k == 0)
        return 0;
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1);
}

BellInput random_input(std::mt19937_64& rng, std::int64_t n, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    BellInput xs;
    for (std::int64_t i = 0; i < n; ++i)
        xs.push_back(d(rng));
    return xs;
}

BellInput ones(std::int64_t n) { return BellInput(std::vector<Integer>(static_cast<std::size_t>(n), Integer{1})); }

} // namespace

TEST_CASE("partial_bell")
{
    CHECK(partial_bell(3, 3, ones(3)) == 1);
    CHECK(partial_bell(3, 2, BellInput({2, 5})) == 30);
    CHECK(partial_bell(4, 2, ones(4)) == 7);
    CHECK_THROWS_AS(partial_bell(3, 0, ones(3)), std::out_of_range);
    CHECK_THROWS_AS(partial_bell(3, 4, ones(3)), std::out_of_range);
    CHECK_THROWS_AS(partial_bell(5, 2, ones(3)), std::out_of_range);
    CHECK_THROWS_AS(BellInput({1, 2})[0], std::out_of_range);
}

TEST_CASE("partial_bell matches the multinomial sum")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const auto xs = random_input(rng, 12, -9, 9);
        for (std::int64_t n = 1; n <= 12; ++n)
            for (std::int64_t k = 1; k <= n; ++k)
                REQUIRE(partial_bell(n, k, xs) == partial_bell_by_compositions(n, k, xs));
    }
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t k = 1; k <= n; ++k)
            REQUIRE(partial_bell(n, k, ones(n)) == stirling2(n, k));
}

TEST_CASE("complete_bell")
{
    CHECK(complete_bell(0, BellInput{}) == 1);
    CHECK(complete_bell(1, BellInput({-7})) == -7);
    CHECK(complete_bell(4, ones(4)) == 15);
    CHECK_THROWS_AS(complete_bell(5, ones(3)), std::out_of_range);
}

TEST_CASE("recursive and sum-of-partials complete Bell agree")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto xs = random_input(rng, 20, -9, 9);
        const auto rec = complete_bell_recursive(20, xs);
        const PartialBellTriangle t(20, xs);
        for (std::int64_t n = 0; n <= 20; ++n) {
            REQUIRE(rec[n] == t.complete(n));
            Integer sum = n == 0 ? 1 : 0;
            for (std::int64_t k = 1; k <= n; ++k)
                sum += t(n, k);
            REQUIRE(sum == t.complete(n));
        }
    }
}

TEST_CASE("bell_inversion")
{
    CHECK(bell_inversion(BellInput({4}), 1) == 4);
    // x_2 = y_2 - y_1^2
    CHECK(bell_inversion(BellInput({3, 20}), 2) == 20 - 9);

    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        const auto xs = random_input(rng, 15, -50, 50);
        const auto ys_full = complete_bell_recursive(15, xs);
        const BellInput ys(std::vector<Integer>(ys_full.begin() + 1, ys_full.end()));
        for (std::int64_t n = 1; n <= 15; ++n)
            REQUIRE(bell_inversion(ys, n) == xs[n]);
    }
    CHECK_THROWS_AS(bell_inversion(BellInput({1}), 2), std::out_of_range);
}

TEST_CASE("theorem31_check")
{
    auto [l, r] = theorem31_check(3, 1);
    CHECK(l == -1);
    CHECK(r == -1);
    std::tie(l, r) = theorem31_check(3, 3);
    CHECK(r == 0);
    CHECK(l == 0);
    for (std::int64_t n = 1; n <= 25; ++n) {
        const auto [lhs, rhs] = theorem31_check(5, n);
        REQUIRE(lhs == rhs);
    }
    CHECK_THROWS_AS(theorem31_check(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(theorem31_check(3, 0), std::invalid_argument);
}

TEST_CASE("theorem32_check")
{
    auto [l, r] = theorem32_check(3, 1);
    CHECK(l == 1);
    CHECK(r == 1);
    std::tie(l, r) = theorem32_check(3, 8);
    CHECK(r == 887040);
    CHECK(l == r);
    for (std::int64_t n = 1; n <= 25; ++n) {
        const auto [lhs, rhs] = theorem32_check(4, n);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("sigma via Bell polynomials")
{
    CHECK(sigma_via_e(3, 1) == 1);
    CHECK(sigma_via_e(3, 6) == 12);
    CHECK(sigma_via_p(3, 1) == 1);
    CHECK(sigma_via_p(3, 6) == 12);
    for (std::int64_t n = 1; n <= 20; ++n)
        REQUIRE(sigma_via_e(5, n) == sigma_prime(5, n));
    for (std::int64_t m = 3; m <= 5; ++m)
        for (std::int64_t n = 1; n <= 20; ++n)
            REQUIRE(sigma_via_e(m, n) == sigma_via_p(m, n));
}

TEST_CASE("Bell recursion reproduces the convolution for n p'_m(n)")
{
    // Feed c_j = (j-1)! sigma'_m(j) through B_{n+1} = sum C(n,i) B_{n-i} c_{i+1};
    // dividing by n! gives (n+1) p'_m(n+1) = sum_i p'_m(n-i) sigma'_m(i+1).
    for (std::int64_t m = 3; m <= 6; ++m) {
        const auto c = bell_c_sequence(m, 26);
        const auto b = complete_bell_recursive(26, c);
        const DivisorTable s(m, 26);
        const auto p = build_table(PartitionFamily::pprime(m), 26);
        for (std::int64_t n = 0; n < 25; ++n) {
            const Integer via_bell = b[n + 1] / factorial(n);
            REQUIRE(b[n + 1] % factorial(n) == 0);
            REQUIRE(via_bell == euler_convolution(m, n + 1, s, p));
            REQUIRE(via_bell == (n + 1) * p(n + 1));
        }
    }
}
