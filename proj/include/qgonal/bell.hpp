#ifndef QGONAL_BELL_HPP
#define QGONAL_BELL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qgonal/integer.hpp"

namespace qgonal {

/// Arguments x_1, x_2, ... of a Bell polynomial, indexed from 1.
class BellInput {
public:
    BellInput() = default;
    explicit BellInput(std::vector<Integer> xs)
        : xs_(std::move(xs))
    {
    }

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(xs_.size()); }
    /// x_i for 1 <= i <= size(); throws std::out_of_range otherwise.
    const Integer& operator[](std::int64_t i) const;
    void push_back(Integer x) { xs_.push_back(std::move(x)); }

private:
    std::vector<Integer> xs_;
};

/// Every partial Bell polynomial B_{i,k}(x) with 0 <= k <= i <= max_n.
/// Row i holds entries k = 0..i.
class PartialBellTriangle {
public:
    PartialBellTriangle(std::int64_t max_n, const BellInput& xs);

    std::int64_t max_n() const noexcept { return static_cast<std::int64_t>(rows_.size()) - 1; }
    /// B_{n,k}; zero when k > n.
    const Integer& operator()(std::int64_t n, std::int64_t k) const;
    /// B_n = sum_k B_{n,k}, with B_0 = 1.
    Integer complete(std::int64_t n) const;

private:
    std::vector<std::vector<Integer>> rows_;
};

/// B_{n,k}(x_1..x_{n-k+1}) via B_{n,k} = sum_i C(n-1,i-1) x_i B_{n-i,k-1}.
Integer partial_bell(std::int64_t n, std::int64_t k, const BellInput& xs);

/// B_n(x_1..x_n) as the sum of partial Bell polynomials; B_0 = 1.
Integer complete_bell(std::int64_t n, const BellInput& xs);

/// B_0..B_max_n from B_{n+1} = sum_i C(n,i) B_{n-i} x_{i+1}.
std::vector<Integer> complete_bell_recursive(std::int64_t max_n, const BellInput& xs);

/// Recovers x_n from y_j = B_j(x_1..x_j):
/// x_n = sum_k (-1)^(k-1) (k-1)! B_{n,k}(y_1..y_{n-k+1}).
Integer bell_inversion(const BellInput& ys, std::int64_t n);

/// d_j = -(j-1)! sigma'_m(j) and c_j = (j-1)! sigma'_m(j), j = 1..n.
BellInput bell_d_sequence(std::int64_t m, std::int64_t n);
BellInput bell_c_sequence(std::int64_t m, std::int64_t n);

/// (B_n(d_1..d_n), n! e_{m+2,n}).
std::pair<Integer, Integer> theorem31_check(std::int64_t m, std::int64_t n);

/// (B_n(c_1..c_n), n! p'_m(n)).
std::pair<Integer, Integer> theorem32_check(std::int64_t m, std::int64_t n);

/// sigma'_m(n) from partial Bell polynomials of j! e_{m+2,j}.
/// Throws std::logic_error if the final division by (n-1)! is not exact.
Integer sigma_via_e(std::int64_t m, std::int64_t n);

/// sigma'_m(n) from partial Bell polynomials of j! p'_m(j).
Integer sigma_via_p(std::int64_t m, std::int64_t n);

/// Shared tail of the two corollaries: (1/(n-1)!) sum_k sign_k (k-1)! B_{n,k}.
/// sign_k is (-1)^k if `alternate_from_minus`, else (-1)^(k-1).
Integer sigma_from_bell_row(const PartialBellTriangle& t, std::int64_t n, bool alternate_from_minus);

} // namespace qgonal

#endif
