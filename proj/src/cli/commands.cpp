#include "cqdiscord/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "cqdiscord/channels.hpp"
#include "cqdiscord/cli/state_file.hpp"

namespace cqd::cli {
namespace {

constexpr double kPi = std::numbers::pi;

// Accumulates one CSV row; empty optionals become empty fields.
class Row {
 public:
  Row& add(double v) { return add_text(format_number(v)); }
  Row& add(std::optional<double> v) { return add_text(v ? format_number(*v) : std::string()); }
  Row& add_text(const std::string& s) {
    if (!first_) line_ << ',';
    line_ << s;
    first_ = false;
    return *this;
  }
  void write(std::ostream& out) const { out << line_.str() << '\n'; }

 private:
  std::ostringstream line_;
  bool first_ = true;
};

double grid_point(double lo, double hi, int i, int n) {
  return i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StateFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void validate(const SweepConfig& c) {
  if (c.points < 2 || c.points > kMaxSweepPoints)
    throw UsageError("--points must be in [2, " + std::to_string(kMaxSweepPoints) + "]");
  if (!(c.p_min >= 0.0 && c.p_max <= 1.0 && c.p_min < c.p_max))
    throw UsageError("need 0 <= p-min < p-max <= 1");
  if (c.gamma && !(*c.gamma > 0.0)) throw UsageError("--gamma must be positive");
  if (c.mesh.n_theta < 8 || c.mesh.n_phi < 16) throw UsageError("mesh must be at least 8 x 16");
}

void validate(const SurfaceConfig& c) {
  if (c.n_s < 2 || c.n_phi < 2) throw UsageError("--ns and --nphi must be at least 2");
}

void validate(const DeltaSurfaceConfig& c) {
  if (c.n < 2) throw UsageError("--n must be at least 2");
  if (c.params) {
    try {
      require_valid(*c.params);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
}

void validate_trajectory_points(int points) {
  if (points < 2 || points > kMaxSweepPoints)
    throw UsageError("--points must be in [2, " + std::to_string(kMaxSweepPoints) + "]");
}

int check_verdict(double worst_gap, double at_p, std::ostream& err) {
  if (!(worst_gap <= kAnalyticNumericTolerance)) {
    err << "check failed: |analytic - numeric| = " << format_number(worst_gap) << " at p = " << format_number(at_p)
        << " exceeds " << format_number(kAnalyticNumericTolerance) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_evolve(const SweepConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const bool analytic = config.method != Method::Numeric;
    const bool numeric = config.method != Method::Analytic;

    Row header;
    header.add_text("p").add_text("gamma_t");
    if (config.gamma) header.add_text("t");
    header.add_text("s").add_text("phi").add_text("discord").add_text("classical").add_text("mutual");
    if (config.method == Method::Both)
      header.add_text("discord_numeric").add_text("classical_numeric").add_text("mutual_numeric");
    header.write(out);

    double worst = 0.0;
    double worst_p = 0.0;
    for (int i = 0; i < config.points; ++i) {
      const double p = grid_point(config.p_min, config.p_max, i, config.points);
      const TrajectoryPoint<double> pt = trajectory(p);
      const std::optional<double> gamma_t = p < 1.0 ? std::optional(-std::log1p(-p)) : std::nullopt;

      Row row;
      row.add(p).add(gamma_t);
      if (config.gamma) row.add(gamma_t ? std::optional(*gamma_t / *config.gamma) : std::nullopt);
      row.add(pt.s).add(pt.phi);

      CorrelationReport<double> a, n;
      if (analytic) {
        a = analytic_report(pt.params());
        row.add(a.discord).add(a.classical).add(a.mutual);
      }
      if (numeric) {
        n = discord_numeric(damped_initial_state(p), Subsystem::B, config.mesh);
        row.add(n.discord).add(n.classical).add(n.mutual);
      }
      if (analytic && numeric) {
        const double gap = std::max(std::abs(a.discord - n.discord), std::abs(a.classical - n.classical));
        if (gap > worst) {
          worst = gap;
          worst_p = p;
        }
      }
      row.write(out);
    }
    return config.check && config.method == Method::Both ? check_verdict(worst, worst_p, err) : kExitOk;
  });
}

int cmd_surface(const SurfaceConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    const char* name = config.quantity == Quantity::Discord ? "discord" : "classical";
    Row header;
    header.add_text("kind").add_text("s").add_text("phi").add_text(name);
    header.write(out);

    double best = -1.0, best_s = 0.0, best_phi = 0.0;
    for (int i = 0; i < config.n_s; ++i) {
      const double s = grid_point(0.0, 1.0, i, config.n_s);
      for (int j = 0; j < config.n_phi; ++j) {
        const double phi = grid_point(0.0, kPi, j, config.n_phi);
        const CanonicalParams<double> params{s, s, phi};
        const double v =
            config.quantity == Quantity::Discord ? discord_analytic(params) : classical_analytic(params);
        if (v > best) {
          best = v;
          best_s = s;
          best_phi = phi;
        }
        Row().add_text("grid").add(s).add(phi).add(v).write(out);
      }
    }
    Row().add_text("max").add(best_s).add(best_phi).add(best).write(out);
    return kExitOk;
  });
}

int cmd_delta_surface(const DeltaSurfaceConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    Row header;
    header.add_text("kind").add_text("x").add_text("y").add_text("delta");
    header.write(out);

    std::optional<EllipseDomain<double>> domain;
    bool degenerate = false;
    if (config.params) {
      degenerate = ellipse_is_degenerate(*config.params);
      if (degenerate)
        err << "warning: degenerate domain (s0 s1 sin phi = 0); the region is a segment, grid cells are empty\n";
      else
        domain = ellipse_domain(*config.params);
    }

    for (int i = 0; i < config.n; ++i) {
      const double x = grid_point(-1.0, 1.0, i, config.n);
      for (int j = 0; j < config.n; ++j) {
        const double y = grid_point(-1.0, 1.0, j, config.n);
        bool inside = std::abs(x) + std::abs(y) <= 1.0;
        if (config.params) inside = inside && domain && domain->contains(x, y, 1e-12);
        Row().add_text("grid").add(x).add(y).add(inside ? std::optional(delta_tilde(x, y)) : std::nullopt).write(out);
      }
    }

    if (config.params) {
      const DeltaMinimum<double> min = minimize_delta(*config.params);
      if (degenerate) {
        constexpr int kSegmentSamples = 101;
        const Eigen::Vector2d end = segment_endpoint(*config.params);
        for (int k = 0; k < kSegmentSamples; ++k) {
          const double t = grid_point(-1.0, 1.0, k, kSegmentSamples);
          Row().add_text("segment").add(t * end.x()).add(t * end.y()).add(delta_tilde(t * end.x(), t * end.y())).write(out);
        }
      }
      Row().add_text("min").add(min.x).add(min.y).add(min.value).write(out);
    }
    return kExitOk;
  });
}

int cmd_trajectory(int points, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate_trajectory_points(points);
    Row header;
    header.add_text("p").add_text("x_plus").add_text("z_plus").add_text("x_minus").add_text("z_minus");
    header.write(out);
    for (int i = 0; i < points; ++i) {
      const TrajectoryPoint<double> pt = trajectory(grid_point(0.0, 1.0, i, points));
      Row().add(pt.p).add(pt.bloch_plus.x()).add(pt.bloch_plus.z()).add(pt.bloch_minus.x()).add(pt.bloch_minus.z()).write(out);
    }
    return kExitOk;
  });
}

int cmd_discord(const DiscordConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.mesh.n_theta < 8 || config.mesh.n_phi < 16) throw UsageError("mesh must be at least 8 x 16");
    const TwoQubit<double> rho = read_state_file(config.input);
    const CorrelationReport<double> r = discord_numeric(rho, config.measured, config.mesh);
    out << "measured: " << to_string(config.measured) << '\n'
        << "discord: " << format_number(r.discord) << '\n'
        << "classical: " << format_number(r.classical) << '\n'
        << "mutual: " << format_number(r.mutual) << '\n'
        << "theta: " << format_number(r.argmin_basis->theta) << '\n'
        << "phi_m: " << format_number(r.argmin_basis->phi_m) << '\n';
    return kExitOk;
  });
}

}  // namespace cqd::cli
