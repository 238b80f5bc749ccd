#ifndef QGONAL_PARTITIONS_HPP
#define QGONAL_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qgonal/integer.hpp"
#include "qgonal/series.hpp"

namespace qgonal {

enum class FamilyKind {
    Unrestricted, // p(n)
    Distinct,     // q(n)
    Residue,      // p_{r,m}(n): every part = r mod m
    PPrime,       // p'_m(n): every part = 0, 1 or m-1 mod m
    P25P35,       // every part = 2 or 3 mod 5
    P15P45,       // every part = 1 or 4 mod 5
};

/// A restricted partition counting function. Parts are positive integers;
/// the restriction is a predicate on each part, plus distinctness for q(n).
class PartitionFamily {
public:
    static PartitionFamily unrestricted() { return PartitionFamily(FamilyKind::Unrestricted, 0, 0); }
    static PartitionFamily distinct() { return PartitionFamily(FamilyKind::Distinct, 0, 0); }
    /// Parts = r (mod m) with 0 <= r < m; r = 0 means parts m, 2m, ...
    static PartitionFamily residue(std::int64_t r, std::int64_t m);
    static PartitionFamily pprime(std::int64_t m);
    static PartitionFamily p25_p35() { return PartitionFamily(FamilyKind::P25P35, 0, 0); }
    static PartitionFamily p15_p45() { return PartitionFamily(FamilyKind::P15P45, 0, 0); }

    FamilyKind kind() const noexcept { return kind_; }
    std::int64_t r() const noexcept { return r_; }
    std::int64_t m() const noexcept { return m_; }

    bool allows_part(std::int64_t part) const;
    bool distinct_parts() const noexcept { return kind_ == FamilyKind::Distinct; }
    std::string name() const;

    /// Generating function of the family, truncated at `order`.
    TruncatedSeries generating_function(std::int64_t order) const;

private:
    PartitionFamily(FamilyKind kind, std::int64_t r, std::int64_t m)
        : kind_(kind)
        , r_(r)
        , m_(m)
    {
    }

    FamilyKind kind_;
    std::int64_t r_;
    std::int64_t m_;
};

class PartitionTable {
public:
    PartitionTable(PartitionFamily family, std::vector<Integer> values);

    const PartitionFamily& family() const noexcept { return family_; }
    std::int64_t max_n() const noexcept { return static_cast<std::int64_t>(values_.size()) - 1; }
    std::span<const Integer> values() const noexcept { return values_; }

    /// 0 for negative n; throws std::out_of_range for n > max_n.
    const Integer& operator()(std::int64_t n) const;

private:
    PartitionFamily family_;
    std::vector<Integer> values_;
};

/// Values 0..max_n read off the family's generating function.
PartitionTable build_table(const PartitionFamily& family, std::int64_t max_n);

struct ParityCount {
    Integer even;
    Integer odd;
};

using PartPredicate = std::function<bool(std::int64_t)>;

inline constexpr std::int64_t kBruteForceLimit = 10000;

/// Counts partitions of n whose parts all satisfy `allowed` (sets of parts if
/// `distinct`). Plain recursive enumeration, independent of any series code.
Integer brute_force_count(std::int64_t n, const PartPredicate& allowed, bool distinct);

/// p(n) by enumeration memoised on (remaining, largest part).
Integer brute_force_unrestricted(std::int64_t n);

/// brute_force_count with the family's own predicate.
Integer brute_force_count(std::int64_t n, const PartitionFamily& family);

/// Partitions of n into distinct parts = 0, 1 or m-1 (mod m), split by the
/// parity of the number of parts. Enumerates every such partition.
ParityCount parity_counts_distinct_restricted(std::int64_t m, std::int64_t n);

/// The same counts for every n in 0..max_n by a two-state subset-sum DP.
std::vector<ParityCount> parity_counts_table(std::int64_t m, std::int64_t max_n);

} // namespace qgonal

#endif
