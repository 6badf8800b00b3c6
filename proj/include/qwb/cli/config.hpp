// Command-line and config-file surface of the `qwb` tool.

#pragma once

#include "qwb/billiard2d.hpp"
#include "qwb/walk.hpp"

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwb::cli {

enum class Command { Evolve, Spectrum, Dispersion, Billiard2D, Spacing, Classify, Selftest };

std::string_view command_name(Command c) noexcept;

// Exit codes of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

// Parse failures and invalid combinations. `exit_code` is 0 for --help.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& message, int exit_code = kExitConfig)
        : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

  private:
    int exit_code_;
};

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BilliardOptions {
    int kind = 1;
    int n = 5;
    std::string path = "line";
    double step = 1.0;
    std::optional<double> alpha_left;  // default −⌊(n−1)/2⌋·step
    double theta = std::numbers::pi / 4;
    double phi = 0.0;
    int origin = 0;
    std::string order = "shift-coin";
};

struct BlochOptions {
    bool enabled = false;
    double k_path = 0.0;
    double k_alpha = 0.0;
    double alpha = 0.0;
    std::string variant = "literal";
    std::string signs = "coin";
};

struct FactorOptions {
    std::string shape = "line:1";  // path:kind
    std::optional<int> n;
    std::optional<double> theta;
    std::optional<double> phi;
    double k_path = 0.0;
    double k_alpha = 0.0;
    double alpha = 0.0;
};

struct RunConfig {
    Command command = Command::Selftest;

    BilliardOptions billiard;
    BlochOptions bloch;

    // evolve
    int steps = 70;
    std::optional<int> start_site;
    std::string up = "1,0";    // re,im of the Up weight
    std::string down = "0,1";  // re,im of the Down weight
    bool matrix_free = false;

    // dispersion and 2-D K scans
    std::string scan = "k";
    double k_min = -std::numbers::pi;
    double k_max = std::numbers::pi;
    int resolution = 100;

    // billiard2d (also spacing/classify when --left/--right is given)
    bool two_d = false;
    FactorOptions left;
    FactorOptions right;
    long long cap = 4096;
    std::string route = "sumset";
    int scan_resolution = 1;

    // spacing / classify
    std::string input;
    int gaps = 2;
    int bins = 20;
    bool circular = true;
    double degeneracy_tol = 0.0;

    // output
    std::string out_dir = ".";
    std::string prefix;
    bool svg = false;
    int threads = 0;  // 0: QWB_THREADS, then hardware concurrency
};

// argv[0] is the program name. A `--config FILE` holds flat `key = value`
// lines naming long flags of the chosen subcommand; flags on the command
// line win. Throws ConfigError.
RunConfig parse_config(int argc, const char* const* argv);
RunConfig parse_config(const std::vector<std::string>& args);

// Resolved settings of the chosen subcommand, sorted by key. Excludes
// settings that cannot change the output bytes (threads, out-dir).
std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig& config);

BilliardSpec make_spec(const BilliardOptions& options);
FactorSpec make_factor(const RunConfig& config, const FactorOptions& factor);
BlochParams make_bloch(const BlochOptions& options);
Billiard2DSpec make_2d(const RunConfig& config);

int resolve_threads(int requested);

}  // namespace qwb::cli
