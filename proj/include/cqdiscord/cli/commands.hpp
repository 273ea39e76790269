#ifndef CQDISCORD_CLI_COMMANDS_HPP
#define CQDISCORD_CLI_COMMANDS_HPP

// Implementations behind the cqdiscord subcommands. Each writes a CSV (or
// key/value report) to `out`, diagnostics to `err`, and returns the process
// exit code: 0 success, 1 check failure, 2 usage/validation error.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cqdiscord/correlations.hpp"

namespace cqd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxSweepPoints = 100000;
// evolve --check: largest allowed |analytic - numeric| per row.
inline constexpr double kAnalyticNumericTolerance = 1e-4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Method { Analytic, Numeric, Both };
enum class Quantity { Discord, Classical };

struct SweepConfig {
  int points = 201;
  double p_min = 0.0;
  double p_max = 1.0;
  std::optional<double> gamma;  // adds a physical-time column t = gamma_t / gamma
  Method method = Method::Analytic;
  bool check = false;
  MeshOptions<double> mesh;
};

struct SurfaceConfig {
  int n_s = 101;
  int n_phi = 181;
  Quantity quantity = Quantity::Discord;
};

struct DeltaSurfaceConfig {
  int n = 101;
  std::optional<CanonicalParams<double>> params;
};

struct DiscordConfig {
  std::string input;
  Subsystem measured = Subsystem::B;
  MeshOptions<double> mesh;
};

// Throws UsageError describing the first violated constraint.
void validate(const SweepConfig& config);
void validate(const SurfaceConfig& config);
void validate(const DeltaSurfaceConfig& config);
void validate_trajectory_points(int points);

// Verdict of evolve --check: prints a diagnostic and returns kExitFailure
// when the worst analytic/numeric gap exceeds kAnalyticNumericTolerance.
int check_verdict(double worst_gap, double at_p, std::ostream& err);

int cmd_evolve(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_surface(const SurfaceConfig& config, std::ostream& out, std::ostream& err);
int cmd_delta_surface(const DeltaSurfaceConfig& config, std::ostream& out, std::ostream& err);
int cmd_trajectory(int points, std::ostream& out, std::ostream& err);
int cmd_discord(const DiscordConfig& config, std::ostream& out, std::ostream& err);

// 12 significant digits, "%.12g".
std::string format_number(double value);

}  // namespace cqd::cli

#endif  // CQDISCORD_CLI_COMMANDS_HPP
