// SPDX-License-Identifier: Apache-2.0

#ifndef NONGRS_CLI_HPP
#define NONGRS_CLI_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "nongrs/certificate.hpp"
#include "nongrs/code.hpp"
#include "nongrs/constructions.hpp"

namespace nongrs {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Verb { Build, Verify, Check, Deltas, Search, OMonomial, Covering };
enum class OutputFormat { Json, Csv, Pretty };

std::string to_string(Verb v);
Verb verb_from_string(const std::string& s);
std::string to_string(OutputFormat f);
OutputFormat format_from_string(const std::string& s);

/// Bad command line. `help` is set for --help, in which case what() is the
/// help text and the exit status is 0.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg, bool help = false) : std::invalid_argument(msg), help_(help) {}
    bool help() const { return help_; }

private:
    bool help_;
};

struct CommandRequest {
    Verb verb = Verb::Build;
    std::optional<FieldSpec> field;

    // construction
    std::optional<Family> family;
    std::vector<Elem> alphas;
    unsigned k = 0;
    unsigned r = 0;
    std::optional<Elem> delta;

    std::vector<std::string> checks;     // verify: mds, distance, nongrs, parity, conditions
    std::vector<Condition> conditions;   // check

    // search
    std::size_t n = 0;
    SearchStrategy strategy = SearchStrategy::Consecutive;
    std::vector<Condition> required;
    std::size_t limit = 1;
    std::uint64_t seed = 0;

    // omonomial
    std::optional<std::uint64_t> h;
    bool enumerate = false;
    std::vector<Elem> table;
    bool bruteforce = false;

    OutputFormat format = OutputFormat::Json;
    Guards guards;
    bool timing = false;
    bool serial = false;

    friend bool operator==(const CommandRequest&, const CommandRequest&) = default;
};

/// Arguments after the program name. Throws UsageError naming the offending
/// flag for unknown verbs, missing or contradictory flags and bad values.
CommandRequest parse_request(const std::vector<std::string>& args);

/// The construction the request describes. For verbs other than build and
/// verify the family defaults to C2 when --delta is given, CRK otherwise.
ConstructionParams request_params(const CommandRequest& req);

nlohmann::json request_to_json(const CommandRequest& req);
CommandRequest request_from_json(const nlohmann::json& j);

struct ReportRow {
    std::string item;
    std::string kind;
    std::string verdict;
    std::string detail;

    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct RunReport {
    nlohmann::json request;  // request_to_json of what was run
    std::string version = kToolVersion;
    std::vector<Certificate> certificates;
    nlohmann::json results = nlohmann::json::object();
    std::vector<ReportRow> rows;  // per-item sweep results (deltas, exponents, sets)
    std::optional<double> wall_ms;  // only with --timing

    /// 1 if any certificate failed, else 0.
    int exit_code() const;

    friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json report_to_json(const RunReport& rep);
RunReport report_from_json(const nlohmann::json& j);

/// Runs a validated request. Module errors propagate.
RunReport execute(const CommandRequest& req);

std::string emit_report(const RunReport& rep, OutputFormat format);

/// Whole command line: parse, execute, print. Returns the exit status
/// (0 success, 1 failing certificate, 2 usage or guard error).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nongrs

#endif
