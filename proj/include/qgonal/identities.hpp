#ifndef QGONAL_IDENTITIES_HPP
#define QGONAL_IDENTITIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgonal/divisors.hpp"
#include "qgonal/integer.hpp"
#include "qgonal/partitions.hpp"

namespace qgonal {

// Correction terms of the partition recurrences. Each depends on n only.

/// (-1)^k if n = 5 P_{5,k} or 5 Q_{5,k}; 1 at n = 0; else 0.
int correction_m(std::int64_t n);
/// 1 if n is a triangular number (including 0), else 0.
int correction_k(std::int64_t n);
/// -1 if 2n is Delta_{4k+1} or Delta_{4k+2}, +1 if Delta_{4k+3} or
/// Delta_{4k+4} (k >= 0), 1 at n = 0, else 0.
int correction_l(std::int64_t n);

// Recurrences. Each returns the n-th value of the family from earlier table
// entries; a table that does not reach the required index throws
// std::out_of_range.

/// (p_{2,5}+p_{3,5})(n) = p(n) + sum_k (-1)^k [p(n-P_{7,k}) + p(n-Q_{7,k})].
Integer rec_p25_p35(std::int64_t n, const PartitionTable& p);

/// f(n) = M + sum_k (-1)^(k+1) [f(n-P_{7,k}) + f(n-Q_{7,k})], f = p_{1,5}+p_{4,5}.
Integer rec_p15_p45(std::int64_t n, const PartitionTable& f);

/// q(n) = K + sum_k (-1)^(k+1) [q(n-2P_{5,k}) + q(n-2Q_{5,k})].
Integer rec_q_doubled_pentagonal(std::int64_t n, const PartitionTable& q);

/// q(n) = L + sum_k (-1)^(k+1) [q((2n-P_{5,k})/2) + q((2n-Q_{5,k})/2)];
/// non-integer arguments contribute 0.
Integer rec_q_halved_pentagonal(std::int64_t n, const PartitionTable& q);

/// p'_m(n) = sum_k (-1)^(k+1) [p'_m(n-P_{m+2,k}) + p'_m(n-Q_{m+2,k})], n >= 1.
Integer rec_pprime(std::int64_t m, std::int64_t n, const PartitionTable& pprime);

/// sigma'_m(n) = sum_k (-1)^(k+1) [P_{m+2,k} p'_m(n-P_{m+2,k}) + Q_{m+2,k} p'_m(n-Q_{m+2,k})].
Integer sigma_from_pprime(std::int64_t m, std::int64_t n, const PartitionTable& pprime);

/// sigma'_m(n) = -n e_{m+2,n} + sum_{k>=1} (-1)^(k+1) [sigma'_m(n-P) + sigma'_m(n-Q)].
Integer sigma_recurrence(std::int64_t m, std::int64_t n, const DivisorTable& sigma);

/// sum_{k=1..n} sigma'_m(k) p'_m(n-k); equals n p'_m(n).
Integer euler_convolution(std::int64_t m, std::int64_t n, const DivisorTable& sigma, const PartitionTable& pprime);

enum class IdentityId {
    BellCor31,
    BellCor32,
    BellT31,
    BellT32,
    EulerConv,
    G6Triangular,
    LambertAgree,
    LegendreParity,
    P15P45Rec,
    P25P35Rec,
    PPrimeRec,
    QDoubled,
    QHalved,
    RrCor2,
    RrCor3,
    SigmaFromP,
    SigmaRec,
    Theorem1,
};

/// Upper-case identifier, e.g. "THEOREM1".
std::string_view identity_name(IdentityId id);
/// Accepts the upper-case identifier or its lower-case/kebab form ("rr-cor2").
std::optional<IdentityId> parse_identity(std::string_view text);
std::vector<IdentityId> all_identities();

/// "g" for THEOREM1, "m" for the m-families, nothing otherwise.
std::vector<std::string> identity_parameters(IdentityId id);

/// Bell-polynomial checks cost O(n^3) big-integer operations per sweep, so
/// verify_identity runs them to at most this n.
inline constexpr std::int64_t kBellOrderCap = 200;

struct Mismatch {
    std::int64_t n;
    Integer lhs;
    Integer rhs;
};

enum class Status { Verified, Failed };

struct VerificationReport {
    std::string identity;
    std::map<std::string, std::int64_t> params;
    std::int64_t order = 0;
    Status status = Status::Verified;
    std::optional<Mismatch> first_mismatch;
};

/// Computes both sides of the identity independently over 0..order (or
/// 1..order where the identity is stated for n >= 1) and reports the first
/// differing index. Throws std::invalid_argument for bad parameters.
VerificationReport verify_identity(IdentityId id, const std::map<std::string, std::int64_t>& params,
                                   std::int64_t order);

} // namespace qgonal

#endif
