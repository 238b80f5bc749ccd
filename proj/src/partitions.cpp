#include "qgonal/partitions.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace qgonal {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

bool pprime_part(std::int64_t part, std::int64_t m)
{
    const auto r = mod(part, m);
    return r == 0 || r == 1 || r == m - 1;
}

void check_brute_force_range(std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("partition count of a negative number");
    if (n > kBruteForceLimit)
        throw std::invalid_argument("brute-force enumeration is limited to n <= " + std::to_string(kBruteForceLimit));
}

// Counts partitions of `remaining` with parts <= max_part.
void enumerate(std::int64_t remaining, std::int64_t max_part, const PartPredicate& allowed, bool distinct,
               Integer& count)
{
    if (remaining == 0) {
        ++count;
        return;
    }
    for (auto part = std::min(remaining, max_part); part >= 1; --part) {
        if (!allowed(part))
            continue;
        enumerate(remaining - part, distinct ? part - 1 : part, allowed, distinct, count);
    }
}

void enumerate_parity(std::int64_t remaining, std::int64_t max_part, std::int64_t parts, std::int64_t m,
                      ParityCount& out)
{
    if (remaining == 0) {
        if (parts % 2 == 0)
            ++out.even;
        else
            ++out.odd;
        return;
    }
    for (auto part = std::min(remaining, max_part); part >= 1; --part) {
        if (pprime_part(part, m))
            enumerate_parity(remaining - part, part - 1, parts + 1, m, out);
    }
}

} // namespace

PartitionFamily PartitionFamily::residue(std::int64_t r, std::int64_t m)
{
    if (m < 1 || r < 0 || r >= m)
        throw std::invalid_argument("residue family requires m >= 1 and 0 <= r < m");
    return PartitionFamily(FamilyKind::Residue, r, m);
}

PartitionFamily PartitionFamily::pprime(std::int64_t m)
{
    if (m < 3)
        throw std::invalid_argument("p'_m requires m >= 3");
    return PartitionFamily(FamilyKind::PPrime, 0, m);
}

bool PartitionFamily::allows_part(std::int64_t part) const
{
    if (part < 1)
        return false;
    switch (kind_) {
    case FamilyKind::Unrestricted:
    case FamilyKind::Distinct:
        return true;
    case FamilyKind::Residue:
        return mod(part, m_) == r_;
    case FamilyKind::PPrime:
        return pprime_part(part, m_);
    case FamilyKind::P25P35: {
        const auto r = mod(part, 5);
        return r == 2 || r == 3;
    }
    case FamilyKind::P15P45: {
        const auto r = mod(part, 5);
        return r == 1 || r == 4;
    }
    }
    return false;
}

std::string PartitionFamily::name() const
{
    switch (kind_) {
    case FamilyKind::Unrestricted:
        return "p";
    case FamilyKind::Distinct:
        return "q-distinct";
    case FamilyKind::Residue:
        return "residue(r=" + std::to_string(r_) + ",m=" + std::to_string(m_) + ")";
    case FamilyKind::PPrime:
        return "pprime(m=" + std::to_string(m_) + ")";
    case FamilyKind::P25P35:
        return "p25p35";
    case FamilyKind::P15P45:
        return "p15p45";
    }
    return "?";
}

TruncatedSeries PartitionFamily::generating_function(std::int64_t order) const
{
    switch (kind_) {
    case FamilyKind::Unrestricted:
        return series_invert(pochhammer_product({ExponentClass(1, 1)}, order));
    case FamilyKind::Distinct: {
        // prod (1 + q^k)
        auto s = TruncatedSeries::one(order);
        for (std::int64_t k = 1; k <= order; ++k)
            s.multiply_binomial(k, +1);
        return s;
    }
    case FamilyKind::Residue:
        return series_invert(pochhammer_product({ExponentClass(r_ == 0 ? m_ : r_, m_)}, order));
    case FamilyKind::PPrime:
        return series_invert(
            pochhammer_product({ExponentClass(1, m_), ExponentClass(m_ - 1, m_), ExponentClass(m_, m_)}, order));
    case FamilyKind::P25P35:
        return series_invert(pochhammer_product({ExponentClass(2, 5), ExponentClass(3, 5)}, order));
    case FamilyKind::P15P45:
        return series_invert(pochhammer_product({ExponentClass(1, 5), ExponentClass(4, 5)}, order));
    }
    throw std::logic_error("unknown partition family");
}

PartitionTable::PartitionTable(PartitionFamily family, std::vector<Integer> values)
    : family_(std::move(family))
    , values_(std::move(values))
{
    if (values_.empty())
        throw std::invalid_argument("partition table needs at least the n = 0 entry");
}

const Integer& PartitionTable::operator()(std::int64_t n) const
{
    static const Integer zero{0};
    if (n < 0)
        return zero;
    if (n > max_n()) {
        throw std::out_of_range("partition table for " + family_.name() + " covers 0.." + std::to_string(max_n())
                                + ", requested " + std::to_string(n));
    }
    return values_[static_cast<std::size_t>(n)];
}

PartitionTable build_table(const PartitionFamily& family, std::int64_t max_n)
{
    if (max_n < 0)
        throw std::invalid_argument("max_n must be non-negative");
    const auto gf = family.generating_function(max_n);
    return PartitionTable(family, std::vector<Integer>(gf.coeffs().begin(), gf.coeffs().end()));
}

Integer brute_force_count(std::int64_t n, const PartPredicate& allowed, bool distinct)
{
    check_brute_force_range(n);
    Integer count = 0;
    enumerate(n, n, allowed, distinct, count);
    return count;
}

Integer brute_force_unrestricted(std::int64_t n)
{
    check_brute_force_range(n);
    std::map<std::pair<std::int64_t, std::int64_t>, Integer> memo;
    const std::function<Integer(std::int64_t, std::int64_t)> count = [&](std::int64_t remaining,
                                                                         std::int64_t max_part) -> Integer {
        if (remaining == 0)
            return 1;
        max_part = std::min(max_part, remaining);
        const auto key = std::make_pair(remaining, max_part);
        if (const auto it = memo.find(key); it != memo.end())
            return it->second;
        Integer total = 0;
        for (auto part = max_part; part >= 1; --part)
            total += count(remaining - part, part);
        memo.emplace(key, total);
        return total;
    };
    return count(n, n);
}

Integer brute_force_count(std::int64_t n, const PartitionFamily& family)
{
    return brute_force_count(
        n, [&family](std::int64_t part) { return family.allows_part(part); }, family.distinct_parts());
}

ParityCount parity_counts_distinct_restricted(std::int64_t m, std::int64_t n)
{
    if (m < 3)
        throw std::invalid_argument("parity counts require m >= 3");
    if (n < 1)
        throw std::invalid_argument("parity counts are defined for n >= 1");
    check_brute_force_range(n);
    ParityCount out{0, 0};
    enumerate_parity(n, n, 0, m, out);
    return out;
}

std::vector<ParityCount> parity_counts_table(std::int64_t m, std::int64_t max_n)
{
    if (m < 3)
        throw std::invalid_argument("parity counts require m >= 3");
    if (max_n < 0)
        throw std::invalid_argument("max_n must be non-negative");
    std::vector<ParityCount> t(static_cast<std::size_t>(max_n) + 1, ParityCount{0, 0});
    t[0].even = 1;
    for (std::int64_t part = 1; part <= max_n; ++part) {
        if (!pprime_part(part, m))
            continue;
        for (auto n = max_n; n >= part; --n) {
            auto& dst = t[static_cast<std::size_t>(n)];
            const auto& src = t[static_cast<std::size_t>(n - part)];
            dst.even += src.odd;
            dst.odd += src.even;
        }
    }
    return t;
}

} // namespace qgonal
