#ifndef QGONAL_CLI_HPP
#define QGONAL_CLI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qgonal/identities.hpp"

namespace qgonal::cli {

enum class Command { Compute, Table, Verify, VerifyAll };
enum class Format { Json, Csv, Text };

inline constexpr std::int64_t kDefaultOrder = 500;
inline constexpr std::int64_t kMaxG = 1000000;

struct RunConfig {
    Command command = Command::Compute;
    std::string target;
    /// Any of g, m, n, r, max-n, order.
    std::map<std::string, std::int64_t> params;
    Format format = Format::Text;
    /// Empty means the `out` stream passed to run().
    std::string out_path;
    unsigned threads = 1;
};

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Executes one command. Results go to `out` (or the configured file),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Worker count from QGONAL_THREADS; 1 when unset or unparsable.
unsigned threads_from_environment();

/// The reports verify-all produces, ordered by identity name then parameters.
std::vector<VerificationReport> verify_all(std::int64_t order, unsigned threads);

std::string report_to_json(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string report_to_text(const VerificationReport& report);

std::optional<Command> parse_command(const std::string& text);
std::optional<Format> parse_format(const std::string& text);

} // namespace qgonal::cli

#endif
