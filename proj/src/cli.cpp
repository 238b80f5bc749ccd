#include "qgonal/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qgonal/divisors.hpp"
#include "qgonal/gonal.hpp"
#include "qgonal/partitions.hpp"

namespace qgonal::cli {

namespace {

using json = nlohmann::ordered_json;
using Params = std::map<std::string, std::int64_t>;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view status_name(Status s) { return s == Status::Verified ? "VERIFIED" : "FAILED"; }

json report_json(const VerificationReport& r)
{
    json j;
    j["identity"] = r.identity;
    j["params"] = json::object();
    for (const auto& [k, v] : r.params)
        j["params"][k] = v;
    j["order"] = r.order;
    j["status"] = status_name(r.status);
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"n", r.first_mismatch->n},
                               {"lhs", to_string(r.first_mismatch->lhs)},
                               {"rhs", to_string(r.first_mismatch->rhs)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    return j;
}

std::string params_text(const Params& params)
{
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty())
            s += ';';
        s += k + "=" + std::to_string(v);
    }
    return s;
}

std::int64_t need(const Params& params, const std::string& key)
{
    const auto it = params.find(key);
    if (it == params.end())
        throw UsageError("missing required option --" + key);
    return it->second;
}

void allow_only(const Params& params, std::initializer_list<std::string> allowed)
{
    for (const auto& [k, v] : params) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw UsageError("option --" + k + " does not apply here");
    }
}

std::int64_t checked_g(const Params& params)
{
    const auto g = need(params, "g");
    if (g < 5 || g > kMaxG)
        throw UsageError("--g must lie in 5.." + std::to_string(kMaxG));
    return g;
}

std::int64_t checked_m(const Params& params)
{
    const auto m = need(params, "m");
    if (m < 3)
        throw UsageError("--m must be at least 3");
    return m;
}

// Sequence targets shared by compute and table. Each maps a parameter set
// and a range 0..max_n to values; index 0 of divisor sums is 0 by convention.
struct SequenceTarget {
    std::string_view name;
    std::vector<std::string> params; // besides n / max-n
    std::function<std::vector<Integer>(const Params&, std::int64_t)> table;
    std::function<Integer(const Params&, std::int64_t)> single;
};

std::vector<Integer> partition_values(const PartitionFamily& f, std::int64_t max_n)
{
    const auto t = build_table(f, max_n);
    return {t.values().begin(), t.values().end()};
}

Integer partition_value(const PartitionFamily& f, std::int64_t n)
{
    if (n < 0)
        return 0;
    return build_table(f, n)(n);
}

PartitionFamily residue_family(const Params& p)
{
    const auto m = need(p, "m");
    const auto r = need(p, "r");
    if (m < 1 || r < 0 || r >= m)
        throw UsageError("residue requires --m >= 1 and 0 <= --r < --m");
    return PartitionFamily::residue(r, m);
}

const std::vector<SequenceTarget>& sequence_targets()
{
    static const std::vector<SequenceTarget> targets = [] {
        std::vector<SequenceTarget> t;
        const auto fam = [&t](std::string_view name, std::function<PartitionFamily(const Params&)> make,
                              std::vector<std::string> params) {
            t.push_back({name, std::move(params),
                         [make](const Params& p, std::int64_t max_n) { return partition_values(make(p), max_n); },
                         [make](const Params& p, std::int64_t n) { return partition_value(make(p), n); }});
        };
        fam("p", [](const Params&) { return PartitionFamily::unrestricted(); }, {});
        fam("q-distinct", [](const Params&) { return PartitionFamily::distinct(); }, {});
        fam("p25p35", [](const Params&) { return PartitionFamily::p25_p35(); }, {});
        fam("p15p45", [](const Params&) { return PartitionFamily::p15_p45(); }, {});
        fam("residue", residue_family, {"r", "m"});
        fam("pprime", [](const Params& p) { return PartitionFamily::pprime(checked_m(p)); }, {"m"});

        const auto pointwise = [&t](std::string_view name, std::vector<std::string> params,
                                    std::function<Integer(const Params&, std::int64_t)> f) {
            t.push_back({name, std::move(params),
                         [f](const Params& p, std::int64_t max_n) {
                             std::vector<Integer> v;
                             for (std::int64_t n = 0; n <= max_n; ++n)
                                 v.push_back(f(p, n));
                             return v;
                         },
                         f});
        };
        pointwise("sigma", {}, [](const Params&, std::int64_t n) -> Integer { return n < 1 ? Integer(0) : sigma(n); });
        pointwise("sigma-rm", {"r", "m"}, [](const Params& p, std::int64_t n) -> Integer {
            const auto m = need(p, "m");
            const auto r = need(p, "r");
            if (m < 1 || r < 0 || r >= m)
                throw UsageError("sigma-rm requires --m >= 1 and 0 <= --r < --m");
            return n < 1 ? Integer(0) : sigma_rm(r, m, n);
        });
        pointwise("sigma-prime", {"m"}, [](const Params& p, std::int64_t n) -> Integer {
            const auto m = checked_m(p);
            return n < 1 ? Integer(0) : sigma_prime(m, n);
        });
        pointwise("gonal", {"g"}, [](const Params& p, std::int64_t n) {
            return gonal_number(GonalSpec(checked_g(p)), n);
        });
        pointwise("triangular", {}, [](const Params&, std::int64_t n) { return triangular(n); });
        pointwise("e-coeff", {"g"}, [](const Params& p, std::int64_t n) -> Integer {
            return e_coeff(GonalSpec(checked_g(p)), n);
        });
        return t;
    }();
    return targets;
}

const SequenceTarget& find_target(const std::string& name)
{
    for (const auto& t : sequence_targets())
        if (t.name == name)
            return t;
    throw UsageError("unknown target '" + name + "'");
}

void check_target_params(const SequenceTarget& t, const Params& params, const std::string& range_key)
{
    for (const auto& [k, v] : params) {
        if (k == range_key)
            continue;
        if (std::find(t.params.begin(), t.params.end(), k) == t.params.end())
            throw UsageError("option --" + k + " does not apply to target " + std::string(t.name));
    }
}

std::string render_compute(const RunConfig& c)
{
    const auto& t = find_target(c.target);
    check_target_params(t, c.params, "n");
    const auto n = need(c.params, "n");
    if (n < 0 && t.name != "gonal")
        throw UsageError("--n must be non-negative for " + c.target);
    const auto value = t.single(c.params, n);

    std::ostringstream os;
    switch (c.format) {
    case Format::Text:
        os << to_string(value) << '\n';
        break;
    case Format::Csv:
        os << "n,value\n" << n << ',' << to_string(value) << '\n';
        break;
    case Format::Json: {
        json j;
        j["target"] = c.target;
        j["params"] = json::object();
        for (const auto& [k, v] : c.params)
            j["params"][k] = v;
        j["value"] = to_string(value);
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

std::string render_table(const RunConfig& c)
{
    const auto& t = find_target(c.target);
    check_target_params(t, c.params, "max-n");
    const auto max_n = need(c.params, "max-n");
    if (max_n < 0)
        throw UsageError("--max-n must be non-negative");
    const auto values = t.table(c.params, max_n);

    std::ostringstream os;
    switch (c.format) {
    case Format::Csv:
        os << "n,value\n";
        for (std::size_t n = 0; n < values.size(); ++n)
            os << n << ',' << to_string(values[n]) << '\n';
        break;
    case Format::Text:
        for (std::size_t n = 0; n < values.size(); ++n)
            os << n << ' ' << to_string(values[n]) << '\n';
        break;
    case Format::Json: {
        json j;
        j["target"] = c.target;
        j["params"] = json::object();
        for (const auto& [k, v] : c.params)
            j["params"][k] = v;
        j["values"] = json::array();
        for (const auto& v : values)
            j["values"].push_back(to_string(v));
        os << j.dump(2) << '\n';
        break;
    }
    }
    return os.str();
}

std::string render_reports(const std::vector<VerificationReport>& reports, Format format, bool as_list)
{
    std::ostringstream os;
    switch (format) {
    case Format::Json:
        os << (as_list ? reports_to_json(reports) : report_to_json(reports.front())) << '\n';
        break;
    case Format::Text:
        for (const auto& r : reports)
            os << report_to_text(r) << '\n';
        break;
    case Format::Csv:
        os << "identity,params,order,status,n,lhs,rhs\n";
        for (const auto& r : reports) {
            os << r.identity << ',' << params_text(r.params) << ',' << r.order << ',' << status_name(r.status);
            if (r.first_mismatch)
                os << ',' << r.first_mismatch->n << ',' << to_string(r.first_mismatch->lhs) << ','
                   << to_string(r.first_mismatch->rhs);
            else
                os << ",,,";
            os << '\n';
        }
        break;
    }
    return os.str();
}

bool any_failed(const std::vector<VerificationReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::Failed; });
}

std::int64_t order_of(const Params& params)
{
    const auto it = params.find("order");
    const auto order = it == params.end() ? kDefaultOrder : it->second;
    if (order < 0)
        throw UsageError("--order must be non-negative");
    return order;
}

} // namespace

std::string report_to_json(const VerificationReport& report) { return report_json(report).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& reports)
{
    json arr = json::array();
    for (const auto& r : reports)
        arr.push_back(report_json(r));
    return arr.dump(2);
}

std::string report_to_text(const VerificationReport& r)
{
    std::ostringstream os;
    os << r.identity;
    for (const auto& [k, v] : r.params)
        os << ' ' << k << '=' << v;
    os << " order=" << r.order << ' ' << status_name(r.status);
    if (r.first_mismatch)
        os << " at n=" << r.first_mismatch->n << " lhs=" << to_string(r.first_mismatch->lhs)
           << " rhs=" << to_string(r.first_mismatch->rhs);
    return os.str();
}

std::optional<Command> parse_command(const std::string& text)
{
    if (text == "compute")
        return Command::Compute;
    if (text == "table")
        return Command::Table;
    if (text == "verify")
        return Command::Verify;
    if (text == "verify-all")
        return Command::VerifyAll;
    return std::nullopt;
}

std::optional<Format> parse_format(const std::string& text)
{
    if (text == "json")
        return Format::Json;
    if (text == "csv")
        return Format::Csv;
    if (text == "text")
        return Format::Text;
    return std::nullopt;
}

unsigned threads_from_environment()
{
    const char* raw = std::getenv("QGONAL_THREADS");
    if (raw == nullptr)
        return 1;
    char* end = nullptr;
    const auto v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1)
        return 1;
    return static_cast<unsigned>(std::min<long>(v, 256));
}

std::vector<VerificationReport> verify_all(std::int64_t order, unsigned threads)
{
    struct Job {
        IdentityId id;
        Params params;
    };
    std::vector<Job> jobs;
    for (const auto id : all_identities()) {
        const auto params = identity_parameters(id);
        if (params.empty()) {
            jobs.push_back({id, {}});
        } else if (params.front() == "g") {
            for (std::int64_t g = 5; g <= 12; ++g)
                jobs.push_back({id, {{"g", g}}});
        } else {
            for (std::int64_t m = 3; m <= 8; ++m)
                jobs.push_back({id, {{"m", m}}});
        }
    }

    std::vector<VerificationReport> reports(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (auto i = next++; i < jobs.size(); i = next++) {
            try {
                reports[i] = verify_identity(jobs[i].id, jobs[i].params, order);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    if (count == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < count; ++t)
            pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.identity != b.identity)
            return a.identity < b.identity;
        return a.params < b.params;
    });
    return reports;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::string output;
    int code = kSuccess;
    try {
        switch (config.command) {
        case Command::Compute:
            output = render_compute(config);
            break;
        case Command::Table:
            output = render_table(config);
            break;
        case Command::Verify: {
            const auto id = parse_identity(config.target);
            if (!id)
                throw UsageError("unknown identity '" + config.target + "'");
            Params params = config.params;
            const auto order = order_of(params);
            params.erase("order");
            const auto accepted = identity_parameters(*id);
            for (const auto& [k, v] : params)
                if (std::find(accepted.begin(), accepted.end(), k) == accepted.end())
                    throw UsageError("option --" + k + " does not apply to " + config.target);
            if (params.count("g"))
                checked_g(params);
            const auto report = verify_identity(*id, params, order);
            output = render_reports({report}, config.format, false);
            code = report.status == Status::Verified ? kSuccess : kVerificationFailed;
            break;
        }
        case Command::VerifyAll: {
            if (!config.target.empty())
                throw UsageError("verify-all takes no target");
            allow_only(config.params, {"order"});
            const auto reports = verify_all(order_of(config.params), config.threads);
            output = render_reports(reports, config.format, true);
            code = any_failed(reports) ? kVerificationFailed : kSuccess;
            break;
        }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kVerificationFailed;
    }

    if (config.out_path.empty()) {
        out << output;
        out.flush();
    } else {
        std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output path '" << config.out_path << "'\n";
            return kUsageError;
        }
        file << output;
        if (!file.flush()) {
            err << "error: failed writing '" << config.out_path << "'\n";
            return kUsageError;
        }
    }
    return code;
}

} // namespace qgonal::cli
