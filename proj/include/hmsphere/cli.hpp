#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hmsphere::cli {

enum class Command { critical, limits, bracket, period, solve, profile, verify };
enum class Format { csv, json };

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitUsage = 64;

inline constexpr int kDefaultPrecision = 15;
inline constexpr double kDefaultSolveTol = 1e-10;
inline constexpr int kDefaultSamplesPerHalf = 256;
inline constexpr int kDefaultCircleSamples = 16;

struct RunConfig {
    Command command = Command::critical;
    int n = 0;
    int m = 0;
    std::optional<int> k;
    double hm = 0.0;
    std::optional<double> c;
    std::optional<double> tol;  ///< per-command default when unset
    int samples = kDefaultSamplesPerHalf;
    int circle_samples = kDefaultCircleSamples;
    bool embed = false;
    int identity_samples = 50;
    std::string out_path;  ///< empty: standard output
    /// Unset: csv for profile, a plain-text table for verify, json otherwise.
    std::optional<Format> format;
    std::uint64_t seed = 0;
    int precision = kDefaultPrecision;
};

const char* version();
const char* command_name(Command command);

/// Executes a parsed configuration. Output goes to `out` or to
/// config.out_path; diagnostics go to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs. Parse failures return
/// kExitUsage. The environment variable HM_PERIOD_PRECISION sets the default
/// precision; an explicit --precision wins.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hmsphere::cli
