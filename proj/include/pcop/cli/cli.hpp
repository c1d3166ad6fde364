#pragma once

#include "pcop/error.hpp"
#include "pcop/market/scenario.hpp"
#include "pcop/model/perturbed.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcop::cli {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitNumerical = 3 };

class ConfigError : public InputError {
  public:
    using InputError::InputError;
};

/// Sectioned key = value file (TOML subset: numbers, strings, arrays, # comments).
class KeyValueConfig {
  public:
    static KeyValueConfig parse(std::istream& in, const std::string& origin);
    static KeyValueConfig load(const std::string& path);

    bool has(const std::string& section, const std::string& key) const;
    double number(const std::string& section, const std::string& key) const;
    double number_or(const std::string& section, const std::string& key, double fallback) const;
    std::vector<double> numbers(const std::string& section, const std::string& key) const;
    std::uint64_t count_or(const std::string& section, const std::string& key, std::uint64_t fallback) const;
    std::string text_or(const std::string& section, const std::string& key, const std::string& fallback) const;
    std::vector<std::string> texts(const std::string& section, const std::string& key) const;

  private:
    const std::vector<std::string>& raw(const std::string& section, const std::string& key) const;

    std::string origin_;
    std::map<std::string, std::vector<std::string>> items_;
};

/// Scenario block of a config: [underlying1], [underlying2], [option].
ScenarioConfig read_scenario(const KeyValueConfig& cfg);

struct McSettings {
    std::uint64_t paths = 200000;
    int steps_per_year = 100;
    std::uint64_t seed = 20240601;
    bool antithetic = false;
};

McSettings read_mc(const KeyValueConfig& cfg);

/// Provenance block written at the top of every output file as # lines.
struct RunManifest {
    std::string tool_version = kToolVersion;
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // path, sha256
    std::optional<std::uint64_t> seed;
    std::string timestamp;
    std::vector<std::pair<std::string, std::string>> defaults;

    void add_input(const std::string& path);
    void write(std::ostream& out) const;
};

RunManifest make_manifest(const std::string& command);
std::string sha256_file(const std::string& path);

/// %.10g, the CSV number format.
std::string fmt(double v);

struct ScenarioGenOptions {
    std::string config_path;
    std::string out_dir;
};

/// Writes one directory per (correlation, template) with scenario.ini and
/// surface1.csv / surface2.csv. Returns the directory names in order.
std::vector<std::string> cmd_scenario_gen(const ScenarioGenOptions& opts, std::ostream& log);

struct CalibrateOptions {
    std::string surface_path;
    std::string report_path;  // empty: no report file
    std::optional<double> call_strike;
    std::optional<double> put_strike;
};

void cmd_calibrate(const CalibrateOptions& opts, std::ostream& out);

enum class CopulaMode { Gaussian, Perturbed, Both };

struct PriceOptions {
    std::string scenario_path;  // one scenario directory or a directory of them
    CopulaMode copula = CopulaMode::Both;
    bool match_quanto_forward = false;
    std::vector<double> strikes;  // overrides the scenario strikes
    std::optional<double> maturity;
    std::optional<double> rho;
    bool mc = false;
    std::optional<std::uint64_t> paths;
    std::optional<std::uint64_t> seed;
    bool antithetic = false;
    unsigned threads = 0;
    std::string out_path;  // empty: write to the stream
};

struct PriceRow {
    std::string scenario;
    double strike = 0.0;
    double maturity = 0.0;
    double rho = 0.0;
    std::optional<double> gcop;
    std::optional<double> pcop;
    std::optional<double> pcop_rho;
    std::optional<double> lvmc;
    std::optional<double> lvmc_stderr;
};

std::vector<PriceRow> price_scenarios(const PriceOptions& opts);
void cmd_price(const PriceOptions& opts, std::ostream& out);

struct DensityOptions {
    std::string scenario_path;  // empty: use params
    JointParams params;
    std::optional<double> rho;
    int grid = 101;
    double span_stdevs = 5.0;
    int underlying = 1;
    std::string out_path;           // joint grid
    std::string marginal_out_path;  // empty: derived from out_path
};

void cmd_density(const DensityOptions& opts, std::ostream& log);

/// Full command line; returns the process exit code.
int run(int argc, char** argv);

}  // namespace pcop::cli
