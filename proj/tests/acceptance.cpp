// Acceptance suite: one PASS/FAIL line per criterion, exact integer equality
// throughout. Optional argv[1]: path to the qgonal binary for the end-to-end
// determinism check.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qgonal/bell.hpp"
#include "qgonal/cli.hpp"
#include "qgonal/divisors.hpp"
#include "qgonal/gonal.hpp"
#include "qgonal/identities.hpp"
#include "qgonal/partitions.hpp"
#include "qgonal/series.hpp"

using namespace qgonal;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
    void expect(bool ok, const std::string& why)
    {
        if (!ok)
            fail(why);
    }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, double budget_seconds,
               const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs > budget_seconds) {
        std::ostringstream os;
        os << "took " << secs << " s, budget " << budget_seconds << " s";
        out.fail(os.str());
    }
    if (!out.pass)
        ++failures;
    std::printf("[%s] %-4s %s (%.2f s)%s%s\n", out.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
                out.detail.empty() ? "" : " -- ", out.detail.c_str());
    std::fflush(stdout);
}

std::string at(const std::string& what, std::int64_t n) { return what + " differs at n=" + std::to_string(n); }

std::vector<PartitionFamily> every_family()
{
    std::vector<PartitionFamily> f{PartitionFamily::unrestricted(), PartitionFamily::distinct(),
                                   PartitionFamily::p25_p35(), PartitionFamily::p15_p45()};
    for (std::int64_t m = 1; m <= 6; ++m)
        for (std::int64_t r = 0; r < m; ++r)
            f.push_back(PartitionFamily::residue(r, m));
    for (std::int64_t m = 3; m <= 8; ++m)
        f.push_back(PartitionFamily::pprime(m));
    return f;
}

std::string capture_command(const std::string& command, int& status)
{
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return output;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        output.append(buf.data(), got);
    status = pclose(pipe);
    return output;
}

} // namespace

int main(int argc, char** argv)
{
    criterion("1", "gonal product identity, g = 5..12, order 2000", 30, [] {
        Outcome o;
        for (std::int64_t g = 5; g <= 12; ++g) {
            const GonalSpec spec(g);
            const auto n = first_mismatch(theorem1_lhs(spec, 2000), gonal_series(spec, 2000));
            o.expect(n < 0, at("g=" + std::to_string(g), n));
        }
        return o;
    });

    criterion("2a", "(p25+p35)(8) = 22 - 15 - 5 + 1 = 3", 0, [] {
        Outcome o;
        const auto p = build_table(PartitionFamily::unrestricted(), 8);
        o.expect(p(8) == 22 && p(7) == 15 && p(4) == 5 && p(1) == 1, "p(8), p(7), p(4), p(1) != 22, 15, 5, 1");
        o.expect(rec_p25_p35(8, p) == 3, "recurrence value " + to_string(rec_p25_p35(8, p)));
        o.expect(build_table(PartitionFamily::p25_p35(), 8)(8) == 3, "table value != 3");
        o.expect(brute_force_count(8, PartitionFamily::p25_p35()) == 3, "enumeration != 3");
        return o;
    });

    criterion("2b", "(p15+p45)(9) = 4 = 3 + 2 - 1", 0, [] {
        Outcome o;
        const auto f = build_table(PartitionFamily::p15_p45(), 9);
        const auto rec = rec_p15_p45(9, f);
        o.expect(f(9) == 4, "(p15+p45)(9) = " + to_string(f(9)) + " (enumeration: "
                                + to_string(brute_force_count(9, PartitionFamily::p15_p45())) + ")");
        o.expect(f(8) == 3, "(p15+p45)(8) = " + to_string(f(8)));
        o.expect(f(5) == 2 && f(2) == 1, "(p15+p45)(5), (2) != 2, 1");
        o.expect(rec == f(8) + f(5) - f(2), "recurrence does not reduce to f(8) + f(5) - f(2)");
        o.expect(rec == f(9), "recurrence " + to_string(rec) + " != table " + to_string(f(9)));
        return o;
    });

    criterion("2c", "q(15) = 1 + 18 + 12 - 3 - 1 = 27 (doubled pentagonal)", 0, [] {
        Outcome o;
        const auto q = build_table(PartitionFamily::distinct(), 15);
        o.expect(q(13) == 18 && q(11) == 12 && q(5) == 3 && q(1) == 1, "q(13), q(11), q(5), q(1) != 18, 12, 3, 1");
        o.expect(correction_k(15) == 1, "15 should be triangular");
        o.expect(rec_q_doubled_pentagonal(15, q) == 27, "recurrence value " + to_string(rec_q_doubled_pentagonal(15, q)));
        o.expect(q(15) == 27, "table q(15) != 27");
        return o;
    });

    criterion("2d", "q(15) = 22 + 8 - 2 - 1 = 27 (halved pentagonal)", 0, [] {
        Outcome o;
        const auto q = build_table(PartitionFamily::distinct(), 15);
        o.expect(q(14) == 22 && q(9) == 8 && q(4) == 2 && q(2) == 1, "q(14), q(9), q(4), q(2) != 22, 8, 2, 1");
        o.expect(correction_l(15) == 0, "L(15) should be 0");
        o.expect(rec_q_halved_pentagonal(15, q) == 27, "recurrence value " + to_string(rec_q_halved_pentagonal(15, q)));
        return o;
    });

    criterion("3", "generating functions equal brute-force enumeration, n <= 40", 60, [] {
        Outcome o;
        for (const auto& family : every_family()) {
            const auto t = build_table(family, 40);
            for (std::int64_t n = 0; n <= 40; ++n)
                if (t(n) != brute_force_count(n, family)) {
                    o.fail(at(family.name(), n));
                    break;
                }
        }
        return o;
    });

    criterion("4", "recurrences equal tables, n <= 500", 60, [] {
        Outcome o;
        const std::int64_t top = 500;
        const auto p = build_table(PartitionFamily::unrestricted(), top);
        const auto f25 = build_table(PartitionFamily::p25_p35(), top);
        const auto f15 = build_table(PartitionFamily::p15_p45(), top);
        const auto q = build_table(PartitionFamily::distinct(), top);
        for (std::int64_t n = 0; n <= top; ++n) {
            o.expect(rec_p25_p35(n, p) == f25(n), at("p25p35", n));
            o.expect(rec_p15_p45(n, f15) == f15(n), at("p15p45", n));
            o.expect(rec_q_doubled_pentagonal(n, q) == q(n), at("q doubled", n));
            o.expect(rec_q_halved_pentagonal(n, q) == q(n), at("q halved", n));
        }
        for (std::int64_t m = 3; m <= 8; ++m) {
            const auto pm = build_table(PartitionFamily::pprime(m), top);
            for (std::int64_t n = 1; n <= top; ++n)
                o.expect(rec_pprime(m, n, pm) == pm(n), at("pprime m=" + std::to_string(m), n));
        }
        return o;
    });

    criterion("5", "even - odd distinct restricted partitions = e_{m+2,n}, m = 3..5, n <= 40", 0, [] {
        Outcome o;
        for (std::int64_t m = 3; m <= 5; ++m) {
            const GonalSpec spec(m + 2);
            for (std::int64_t n = 1; n <= 40; ++n) {
                const auto c = parity_counts_distinct_restricted(m, n);
                o.expect(c.even - c.odd == e_coeff(spec, n), at("m=" + std::to_string(m), n));
            }
        }
        return o;
    });

    criterion("6", "restricted divisor-sum identities, m = 3..8, n <= 300", 60, [] {
        Outcome o;
        const std::int64_t top = 300;
        for (std::int64_t m = 3; m <= 8; ++m) {
            const auto tag = "m=" + std::to_string(m);
            const auto pm = build_table(PartitionFamily::pprime(m), top);
            const auto lambert = lambert_series_sigma_prime(m, top);
            std::vector<Integer> listed(top + 1, Integer{0});
            for (std::int64_t n = 1; n <= top; ++n)
                listed[n] = sigma_prime(m, n);
            const DivisorTable sieve(m, top);
            for (std::int64_t n = 1; n <= top; ++n) {
                o.expect(lambert[n] == listed[n], at(tag + " Lambert vs divisor listing", n));
                o.expect(sieve(n) == listed[n], at(tag + " sieve vs divisor listing", n));
                const auto from_p = sigma_from_pprime(m, n, pm);
                o.expect(from_p == listed[n] && from_p == lambert[n], at(tag + " sigma from p'", n));
                const auto rec = sigma_recurrence(m, n, sieve);
                o.expect(rec == listed[n] && rec == lambert[n], at(tag + " sigma recurrence", n));
                o.expect(euler_convolution(m, n, sieve, pm) == n * pm(n), at(tag + " convolution", n));
            }
        }
        // Classical case: n p(n) = sum sigma(k) p(n-k).
        const auto p = build_table(PartitionFamily::unrestricted(), top);
        for (std::int64_t n = 1; n <= top; ++n) {
            Integer rhs = 0;
            for (std::int64_t k = 1; k <= n; ++k)
                rhs += sigma(k) * p(n - k);
            o.expect(rhs == n * p(n), at("n p(n) convolution", n));
        }
        return o;
    });

    criterion("7", "Rogers-Ramanujan corollaries to order 500", 0, [] {
        Outcome o;
        for (const auto id : {IdentityId::RrCor2, IdentityId::RrCor3}) {
            const auto r = verify_identity(id, {}, 500);
            o.expect(r.status == Status::Verified && r.order == 500,
                     r.identity + (r.first_mismatch ? at("", r.first_mismatch->n) : std::string(" not verified")));
        }
        return o;
    });

    criterion("8", "Bell polynomial identities and inversion", 120, [] {
        Outcome o;
        for (std::int64_t m = 3; m <= 6; ++m) {
            const auto tag = "m=" + std::to_string(m);
            for (std::int64_t n = 1; n <= 25; ++n) {
                const auto [l31, r31] = theorem31_check(m, n);
                o.expect(l31 == r31, at(tag + " B_n(d) = n! e", n));
                const auto [l32, r32] = theorem32_check(m, n);
                o.expect(l32 == r32, at(tag + " B_n(c) = n! p'", n));
            }
            for (std::int64_t n = 1; n <= 20; ++n) {
                const auto s = sigma_prime(m, n);
                const auto via_e = sigma_via_e(m, n);
                const auto via_p = sigma_via_p(m, n);
                o.expect(via_e == s, at(tag + " sigma via e", n));
                o.expect(via_p == s, at(tag + " sigma via p'", n));
                o.expect(via_e == via_p, at(tag + " corollaries disagree", n));
            }
        }
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<long> dist(-1000, 1000);
        for (int trial = 0; trial < 100; ++trial) {
            BellInput xs;
            for (int i = 0; i < 15; ++i)
                xs.push_back(dist(rng));
            BellInput ys;
            for (std::int64_t j = 1; j <= 15; ++j)
                ys.push_back(complete_bell(j, xs));
            for (std::int64_t n = 1; n <= 15; ++n)
                o.expect(bell_inversion(ys, n) == xs[n], at("inversion trial " + std::to_string(trial), n));
        }
        return o;
    });

    criterion("9", "verify-all --order 500 is byte-identical across runs and exits 0", 0, [argc, argv] {
        Outcome o;
        cli::RunConfig config;
        config.command = cli::Command::VerifyAll;
        config.params = {{"order", 500}};
        config.format = cli::Format::Json;
        std::ostringstream out1, out2, err;
        const int c1 = cli::run(config, out1, err);
        config.threads = 4;
        const int c2 = cli::run(config, out2, err);
        o.expect(c1 == 0 && c2 == 0, "in-process exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
        o.expect(out1.str() == out2.str(), "in-process reports differ");
        o.expect(!out1.str().empty(), "empty report");
        if (argc > 1) {
            const std::string cmd = std::string("'") + argv[1] + "' verify-all --order 500 --format json";
            int s1 = 0, s2 = 0;
            const auto a = capture_command(cmd, s1);
            const auto b = capture_command(cmd, s2);
            o.expect(s1 == 0 && s2 == 0, "binary exit status nonzero");
            o.expect(a == b, "binary outputs differ");
            o.expect(a == out1.str(), "binary output differs from in-process output");
        }
        return o;
    });

    std::printf("%d criterion check(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
