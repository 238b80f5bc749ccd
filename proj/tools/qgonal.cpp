// Command-line front end: compute values, dump tables, verify identities.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qgonal/cli.hpp"

int main(int argc, char** argv)
{
    using namespace qgonal::cli;

    CLI::App app{"Exact q-series, partition and divisor-sum identities"};
    std::string command;
    std::string target;
    std::optional<std::int64_t> g, m, n, r, max_n, order;
    std::string format = "text";
    std::string out_path;

    app.add_option("command", command, "compute | table | verify | verify-all")->required();
    app.add_option("target", target, "sequence or identity id");
    app.add_option("--g", g, "polygonality g");
    app.add_option("--m", m, "modulus m");
    app.add_option("--n", n, "argument n");
    app.add_option("--r", r, "residue r (residue, sigma-rm)");
    app.add_option("--max-n", max_n, "last table index");
    app.add_option("--order", order, "truncation order");
    app.add_option("--format", format, "json | csv | text");
    app.add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    RunConfig config;
    const auto cmd = parse_command(command);
    const auto fmt = parse_format(format);
    if (!cmd || !fmt) {
        std::cerr << "error: " << (!cmd ? "unknown command '" + command + "'" : "unknown format '" + format + "'")
                  << '\n';
        return kUsageError;
    }
    config.command = *cmd;
    config.format = *fmt;
    config.target = target;
    config.out_path = out_path;
    config.threads = threads_from_environment();
    const auto put = [&config](const char* key, const std::optional<std::int64_t>& v) {
        if (v)
            config.params[key] = *v;
    };
    put("g", g);
    put("m", m);
    put("n", n);
    put("r", r);
    put("max-n", max_n);
    put("order", order);

    if (config.command != Command::VerifyAll && config.target.empty()) {
        std::cerr << "error: " << command << " needs a target\n";
        return kUsageError;
    }
    return run(config, std::cout, std::cerr);
}
