// cqdiscord: discord and classical correlations of classical-quantum
// two-qubit states under local amplitude damping.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cqdiscord/cli/commands.hpp"

namespace {

using namespace cqd::cli;

struct OutputTarget {
  std::string path;

  // Returns nullptr (after printing a diagnostic) when the file cannot be opened.
  std::ostream* open(std::unique_ptr<std::ofstream>& holder) const {
    if (path.empty()) return &std::cout;
    holder = std::make_unique<std::ofstream>(path);
    if (!*holder) {
      std::cerr << "error: cannot open output file '" << path << "'\n";
      return nullptr;
    }
    return holder.get();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord of classical-quantum two-qubit states under local amplitude damping"};
  app.require_subcommand(1);

  OutputTarget target;
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", target.path, "Write output to PATH instead of stdout"); };

  SweepConfig sweep;
  std::optional<double> gamma;
  auto* evolve = app.add_subcommand("evolve", "Discord/classical correlations along the damping sweep (CSV)");
  evolve->add_option("--points", sweep.points, "Number of p samples")->capture_default_str();
  evolve->add_option("--p-min", sweep.p_min, "Lower end of the p range")->capture_default_str();
  evolve->add_option("--p-max", sweep.p_max, "Upper end of the p range")->capture_default_str();
  evolve->add_option("--method", sweep.method, "analytic | numeric | both")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Method>{{"analytic", Method::Analytic}, {"numeric", Method::Numeric}, {"both", Method::Both}},
          CLI::ignore_case));
  evolve->add_option("--gamma", gamma, "Relaxation rate; adds a time column t");
  evolve->add_option("--ntheta", sweep.mesh.n_theta, "Measurement mesh size in theta")->capture_default_str();
  evolve->add_option("--nphi-m", sweep.mesh.n_phi, "Measurement mesh size in phi_m")->capture_default_str();
  evolve->add_flag("--check", sweep.check, "With --method both, exit 1 if |analytic - numeric| > 1e-4");
  add_out(evolve);

  SurfaceConfig surface;
  auto* surf = app.add_subcommand("surface", "Closed-form D or C over (s, phi) (CSV)");
  surf->add_option("--ns", surface.n_s, "Samples in s")->capture_default_str();
  surf->add_option("--nphi", surface.n_phi, "Samples in phi")->capture_default_str();
  surf->add_option("--quantity", surface.quantity, "discord | classical")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Quantity>{{"discord", Quantity::Discord}, {"classical", Quantity::Classical}},
          CLI::ignore_case));
  add_out(surf);

  DeltaSurfaceConfig delta;
  std::optional<double> s0, s1, phi;
  auto* dsurf = app.add_subcommand("delta-surface", "Conditional-entropy surface delta~(x, y) (CSV)");
  dsurf->add_option("--n", delta.n, "Samples per axis on [-1, 1]")->capture_default_str();
  dsurf->add_option("--s0", s0, "Bloch length of tau0");
  dsurf->add_option("--s1", s1, "Bloch length of tau1");
  dsurf->add_option("--phi", phi, "Angle between the Bloch vectors (rad)");
  add_out(dsurf);

  int trajectory_points = 201;
  auto* traj = app.add_subcommand("trajectory", "Bloch trajectories of the damped |+> and |-> (CSV)");
  traj->add_option("--points", trajectory_points, "Number of p samples")->capture_default_str();
  add_out(traj);

  DiscordConfig discord;
  std::string measured = "B";
  bool no_refine = false;
  auto* disc = app.add_subcommand("discord", "Numeric discord of a state file");
  disc->add_option("--input", discord.input, "State file (cq-spec JSON or 4x8 matrix)")->required();
  disc->add_option("--measured", measured, "Measured qubit: A or B")
      ->check(CLI::IsMember({"A", "B", "a", "b"}))
      ->capture_default_str();
  disc->add_option("--ntheta", discord.mesh.n_theta, "Measurement mesh size in theta")->capture_default_str();
  disc->add_option("--nphi-m", discord.mesh.n_phi, "Measurement mesh size in phi_m")->capture_default_str();
  disc->add_flag("--no-refine", no_refine, "Skip the simplex refinement");
  add_out(disc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* out = target.open(file);
  if (out == nullptr) return kExitUsage;

  if (*evolve) {
    sweep.gamma = gamma;
    return cmd_evolve(sweep, *out, std::cerr);
  }
  if (*surf) return cmd_surface(surface, *out, std::cerr);
  if (*dsurf) {
    const int given = int(s0.has_value()) + int(s1.has_value()) + int(phi.has_value());
    if (given != 0 && given != 3) {
      std::cerr << "error: --s0, --s1 and --phi must be given together\n";
      return kExitUsage;
    }
    if (given == 3) delta.params = cqd::CanonicalParams<double>{*s0, *s1, *phi};
    return cmd_delta_surface(delta, *out, std::cerr);
  }
  if (*traj) return cmd_trajectory(trajectory_points, *out, std::cerr);
  if (*disc) {
    discord.measured = cqd::parse_subsystem(measured);
    discord.mesh.refine = !no_refine;
    return cmd_discord(discord, *out, std::cerr);
  }
  return kExitUsage;
}
