#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qgonal/bell.hpp"
#include "qgonal/gonal.hpp"
#include "qgonal/identities.hpp"

namespace qgonal {

namespace {

using Params = std::map<std::string, std::int64_t>;

struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view parameter; // empty when the identity takes none
};

constexpr std::array<IdentityInfo, 18> kIdentities{{
    {IdentityId::BellCor31, "BELL_COR31", "m"},
    {IdentityId::BellCor32, "BELL_COR32", "m"},
    {IdentityId::BellT31, "BELL_T31", "m"},
    {IdentityId::BellT32, "BELL_T32", "m"},
    {IdentityId::EulerConv, "EULER_CONV", "m"},
    {IdentityId::G6Triangular, "G6_TRIANGULAR", ""},
    {IdentityId::LambertAgree, "LAMBERT_AGREE", "m"},
    {IdentityId::LegendreParity, "LEGENDRE_PARITY", "m"},
    {IdentityId::P15P45Rec, "P15P45_REC", ""},
    {IdentityId::P25P35Rec, "P25P35_REC", ""},
    {IdentityId::PPrimeRec, "PPRIME_REC", "m"},
    {IdentityId::QDoubled, "Q_DOUBLED", ""},
    {IdentityId::QHalved, "Q_HALVED", ""},
    {IdentityId::RrCor2, "RR_COR2", ""},
    {IdentityId::RrCor3, "RR_COR3", ""},
    {IdentityId::SigmaFromP, "SIGMA_FROM_P", "m"},
    {IdentityId::SigmaRec, "SIGMA_REC", "m"},
    {IdentityId::Theorem1, "THEOREM1", "g"},
}};

const IdentityInfo& info(IdentityId id)
{
    for (const auto& entry : kIdentities)
        if (entry.id == id)
            return entry;
    throw std::logic_error("unregistered identity");
}

// Compares lhs(n) and rhs(n) for n in [from, to]; stops at the first difference.
std::optional<Mismatch> compare_range(std::int64_t from, std::int64_t to,
                                      const std::function<Integer(std::int64_t)>& lhs,
                                      const std::function<Integer(std::int64_t)>& rhs)
{
    for (auto n = from; n <= to; ++n) {
        Integer l = lhs(n);
        Integer r = rhs(n);
        if (l != r)
            return Mismatch{n, std::move(l), std::move(r)};
    }
    return std::nullopt;
}

std::optional<Mismatch> compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs)
{
    const auto n = first_mismatch(lhs, rhs);
    if (n < 0)
        return std::nullopt;
    return Mismatch{n, lhs[n], rhs[n]};
}

TruncatedSeries triangular_sign_series(std::int64_t order)
{
    auto s = TruncatedSeries::one(order);
    for (std::int64_t k = 0;; ++k) {
        const auto base = 4 * k;
        if (triangular_i64(base + 1) > order)
            break;
        const std::array<std::pair<std::int64_t, int>, 4> terms{{
            {base + 1, -1}, {base + 2, -1}, {base + 3, +1}, {base + 4, +1}}};
        for (const auto& [j, sign] : terms) {
            const auto e = triangular_i64(j);
            if (e <= order)
                s.mutable_coeff(e) += sign;
        }
    }
    return s;
}

// 1 + sum_n (-1)^n (q^{5P_{5,n}} + q^{5Q_{5,n}}), placed term by term.
TruncatedSeries scaled_pentagonal_series(std::int64_t order)
{
    auto s = TruncatedSeries::one(order);
    for (std::int64_t k = 1;; ++k) {
        const auto p = 5 * gonal_number_i64(5, k);
        if (p > order)
            break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        s.mutable_coeff(p) += sign;
        const auto q = 5 * gonal_number_i64(5, -k);
        if (q <= order)
            s.mutable_coeff(q) += sign;
    }
    return s;
}

TruncatedSeries as_series(const PartitionTable& t)
{
    return TruncatedSeries(t.max_n(), std::vector<Integer>(t.values().begin(), t.values().end()));
}

Params validated_params(IdentityId id, const Params& params)
{
    const auto expected = info(id).parameter;
    Params out;
    for (const auto& [key, value] : params) {
        if (key != expected) {
            throw std::invalid_argument(std::string(info(id).name) + " does not take parameter '" + key + "'");
        }
        out.emplace(key, value);
    }
    if (!expected.empty() && out.count(std::string(expected)) == 0)
        throw std::invalid_argument(std::string(info(id).name) + " requires parameter '" + std::string(expected) + "'");
    if (expected == "g")
        GonalSpec(out.at("g")).require_identity_range();
    if (expected == "m" && out.at("m") < 3)
        throw std::invalid_argument(std::string(info(id).name) + " requires m >= 3");
    return out;
}

std::optional<Mismatch> run_bell(IdentityId id, std::int64_t m, std::int64_t top)
{
    if (top < 1)
        return std::nullopt;
    const DivisorTable sigma(m, top);
    const GonalSpec spec(m + 2);
    const auto pprime = build_table(PartitionFamily::pprime(m), top);

    switch (id) {
    case IdentityId::BellT31: {
        const PartialBellTriangle t(top, bell_d_sequence(m, top));
        return compare_range(
            1, top, [&](std::int64_t n) { return t.complete(n); },
            [&](std::int64_t n) -> Integer { return factorial(n) * e_coeff(spec, n); });
    }
    case IdentityId::BellT32: {
        const PartialBellTriangle t(top, bell_c_sequence(m, top));
        return compare_range(
            1, top, [&](std::int64_t n) { return t.complete(n); },
            [&](std::int64_t n) -> Integer { return factorial(n) * pprime(n); });
    }
    case IdentityId::BellCor31: {
        BellInput xs;
        for (std::int64_t j = 1; j <= top; ++j)
            xs.push_back(factorial(j) * e_coeff(spec, j));
        const PartialBellTriangle t(top, xs);
        return compare_range(
            1, top, [&](std::int64_t n) { return sigma_from_bell_row(t, n, true); },
            [&](std::int64_t n) { return sigma(n); });
    }
    case IdentityId::BellCor32: {
        BellInput xs;
        for (std::int64_t j = 1; j <= top; ++j)
            xs.push_back(factorial(j) * pprime(j));
        const PartialBellTriangle t(top, xs);
        return compare_range(
            1, top, [&](std::int64_t n) { return sigma_from_bell_row(t, n, false); },
            [&](std::int64_t n) { return sigma(n); });
    }
    default:
        throw std::logic_error("not a Bell identity");
    }
}

} // namespace

std::string_view identity_name(IdentityId id) { return info(id).name; }

std::optional<IdentityId> parse_identity(std::string_view text)
{
    std::string key;
    for (const char c : text) {
        if (c == '-')
            key.push_back('_');
        else
            key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    for (const auto& entry : kIdentities) {
        if (entry.name == key)
            return entry.id;
        // Also accept the underscore-free spelling, e.g. "rrcor2".
        std::string compact;
        for (const char c : entry.name)
            if (c != '_')
                compact.push_back(c);
        if (compact == key)
            return entry.id;
    }
    return std::nullopt;
}

std::vector<IdentityId> all_identities()
{
    std::vector<IdentityId> ids;
    for (const auto& entry : kIdentities)
        ids.push_back(entry.id);
    return ids;
}

std::vector<std::string> identity_parameters(IdentityId id)
{
    const auto p = info(id).parameter;
    if (p.empty())
        return {};
    return {std::string(p)};
}

VerificationReport verify_identity(IdentityId id, const Params& raw_params, std::int64_t order)
{
    if (order < 0)
        throw std::invalid_argument("order must be non-negative");
    VerificationReport report;
    report.identity = std::string(identity_name(id));
    report.params = validated_params(id, raw_params);
    report.order = order;

    const auto m = report.params.count("m") ? report.params.at("m") : 0;
    std::optional<Mismatch> mismatch;

    switch (id) {
    case IdentityId::Theorem1: {
        const GonalSpec spec(report.params.at("g"));
        mismatch = compare_series(theorem1_lhs(spec, order), gonal_series(spec, order));
        break;
    }
    case IdentityId::G6Triangular:
        mismatch = compare_series(theorem1_lhs(GonalSpec(6), order), triangular_sign_series(order));
        break;
    case IdentityId::RrCor2: {
        const auto p = build_table(PartitionFamily::unrestricted(), order);
        mismatch = compare_series(rr_sum_series(RogersRamanujan::Second, order),
                                  series_mul(as_series(p), gonal_series(GonalSpec(7), order)));
        break;
    }
    case IdentityId::RrCor3:
        mismatch = compare_series(scaled_pentagonal_series(order),
                                  series_mul(rr_sum_series(RogersRamanujan::First, order),
                                             gonal_series(GonalSpec(7), order)));
        break;
    case IdentityId::P25P35Rec: {
        const auto p = build_table(PartitionFamily::unrestricted(), order);
        const auto f = build_table(PartitionFamily::p25_p35(), order);
        mismatch = compare_range(
            0, order, [&](std::int64_t n) { return rec_p25_p35(n, p); }, [&](std::int64_t n) { return f(n); });
        break;
    }
    case IdentityId::P15P45Rec: {
        const auto f = build_table(PartitionFamily::p15_p45(), order);
        mismatch = compare_range(
            0, order, [&](std::int64_t n) { return rec_p15_p45(n, f); }, [&](std::int64_t n) { return f(n); });
        break;
    }
    case IdentityId::QDoubled: {
        const auto q = build_table(PartitionFamily::distinct(), order);
        mismatch = compare_range(
            0, order, [&](std::int64_t n) { return rec_q_doubled_pentagonal(n, q); },
            [&](std::int64_t n) { return q(n); });
        break;
    }
    case IdentityId::QHalved: {
        const auto q = build_table(PartitionFamily::distinct(), order);
        mismatch = compare_range(
            0, order, [&](std::int64_t n) { return rec_q_halved_pentagonal(n, q); },
            [&](std::int64_t n) { return q(n); });
        break;
    }
    case IdentityId::PPrimeRec: {
        const auto p = build_table(PartitionFamily::pprime(m), order);
        mismatch = compare_range(
            1, order, [&](std::int64_t n) { return rec_pprime(m, n, p); }, [&](std::int64_t n) { return p(n); });
        break;
    }
    case IdentityId::LegendreParity: {
        const auto counts = parity_counts_table(m, order);
        const GonalSpec spec(m + 2);
        mismatch = compare_range(
            1, order,
            [&](std::int64_t n) -> Integer {
                const auto& c = counts[static_cast<std::size_t>(n)];
                return c.even - c.odd;
            },
            [&](std::int64_t n) -> Integer { return e_coeff(spec, n); });
        break;
    }
    case IdentityId::SigmaFromP: {
        const auto p = build_table(PartitionFamily::pprime(m), order);
        const DivisorTable sigma(m, order);
        mismatch = compare_range(
            1, order, [&](std::int64_t n) { return sigma_from_pprime(m, n, p); },
            [&](std::int64_t n) { return sigma(n); });
        break;
    }
    case IdentityId::SigmaRec: {
        const DivisorTable sigma(m, order);
        mismatch = compare_range(
            1, order, [&](std::int64_t n) { return sigma_recurrence(m, n, sigma); },
            [&](std::int64_t n) { return sigma(n); });
        break;
    }
    case IdentityId::EulerConv: {
        const auto p = build_table(PartitionFamily::pprime(m), order);
        const DivisorTable sigma(m, order);
        mismatch = compare_range(
            1, order, [&](std::int64_t n) { return euler_convolution(m, n, sigma, p); },
            [&](std::int64_t n) -> Integer { return make_integer(n) * p(n); });
        break;
    }
    case IdentityId::LambertAgree: {
        const auto lambert = lambert_series_sigma_prime(m, order);
        mismatch = compare_range(
            1, order, [&](std::int64_t n) { return lambert[n]; }, [&](std::int64_t n) { return sigma_prime(m, n); });
        break;
    }
    case IdentityId::BellT31:
    case IdentityId::BellT32:
    case IdentityId::BellCor31:
    case IdentityId::BellCor32:
        report.order = std::min(order, kBellOrderCap);
        mismatch = run_bell(id, m, report.order);
        break;
    }

    if (mismatch) {
        report.status = Status::Failed;
        report.first_mismatch = std::move(mismatch);
    }
    return report;
}

} // namespace qgonal
