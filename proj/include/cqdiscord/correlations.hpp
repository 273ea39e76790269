#ifndef CQDISCORD_CORRELATIONS_HPP
#define CQDISCORD_CORRELATIONS_HPP

// Quantum discord and classical correlations.
//
// Two routes are provided. The closed-form route works on the canonical
// parameters (s, s, phi) of an equal-purity classical-quantum state and goes
// through the universal surface delta~(x, y) minimized over an elliptic
// domain. The numeric route minimizes the post-measurement conditional
// entropy over all rank-1 projective measurements on one qubit, for any
// two-qubit state.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "cqdiscord/errors.hpp"
#include "cqdiscord/qmat.hpp"
#include "cqdiscord/simplex.hpp"
#include "cqdiscord/states.hpp"

namespace cqd {

// Two s values closer than this count as equal purity.
inline constexpr double kEqualPurityTolerance = 1e-10;
// s0 * s1 * sin(phi) at or below this makes the ellipse degenerate.
inline constexpr double kDegenerateEllipseTolerance = 1e-12;
// Measurement outcomes less likely than this are dropped.
inline constexpr double kNegligibleOutcome = 1e-14;

/// Orthonormal qubit basis
///   |Psi0> = cos(theta)|0> + e^{i phi_m} sin(theta)|1>
///   |Psi1> = e^{-i phi_m} sin(theta)|0> - cos(theta)|1>.
/// The formula is valid for every real (theta, phi_m); the canonical box is
/// theta in [0, pi/2], phi_m in [0, 2 pi).
template <typename Scalar = double>
struct MeasurementBasis {
  Scalar theta = 0;
  Scalar phi_m = 0;

  Vector2c<Scalar> ket(int k) const {
    const Scalar c = std::cos(theta), s = std::sin(theta);
    const Complex<Scalar> phase = std::polar(Scalar(1), phi_m);
    if (k == 0) return Vector2c<Scalar>(Complex<Scalar>(c), phase * s);
    return Vector2c<Scalar>(std::conj(phase) * s, Complex<Scalar>(-c));
  }

  Matrix2c<Scalar> projector(int k) const { return outer<Scalar>(ket(k)); }
};

/// The same measurement re-expressed inside the canonical angle box.
template <typename Scalar>
MeasurementBasis<Scalar> fold_into_box(const MeasurementBasis<Scalar>& basis) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  const Scalar polar = 2 * basis.theta;
  const Scalar nx = std::sin(polar) * std::cos(basis.phi_m);
  const Scalar ny = std::sin(polar) * std::sin(basis.phi_m);
  const Scalar nz = std::cos(polar);
  const Scalar transverse = std::hypot(nx, ny);
  MeasurementBasis<Scalar> out;
  out.theta = std::atan2(transverse, nz) / 2;
  out.phi_m = transverse > 0 ? std::atan2(ny, nx) : Scalar(0);
  if (out.phi_m < 0) out.phi_m += two_pi;
  if (out.phi_m >= two_pi) out.phi_m -= two_pi;
  return out;
}

template <typename Scalar = double>
struct EllipseDomain {
  Scalar A = 0;
  Scalar B = 0;
  Scalar C = 0;
  // Semi-axes along x and y; only set when the ellipse is axis aligned (B = 0).
  std::optional<Scalar> rx;
  std::optional<Scalar> ry;

  bool positive_definite() const { return A > 0 && C > 0 && A * C - B * B > 0; }
  bool contains(Scalar x, Scalar y, Scalar slack = Scalar(0)) const {
    return A * x * x + 2 * B * x * y + C * y * y <= 1 + slack;
  }
};

template <typename Scalar = double>
struct DeltaMinimum {
  Scalar value = 0;
  Scalar x = 0;
  Scalar y = 0;
  bool degenerate = false;  // minimized over a segment (or point), not an ellipse
};

template <typename Scalar = double>
struct CorrelationReport {
  Scalar discord = 0;
  Scalar classical = 0;
  Scalar mutual = 0;
  std::optional<MeasurementBasis<Scalar>> argmin_basis;
};

template <typename Scalar = double>
struct MeshOptions {
  int n_theta = 64;
  int n_phi = 128;
  bool refine = true;
};

/// Universal conditional-entropy surface
///   delta~(x, y) = sum_{f = +-1} (1 + f x)/2 h[(1 + f y / (1 + f x)) / 2]
/// on the square |x| + |y| <= 1.
template <typename Scalar>
Scalar delta_tilde(Scalar x, Scalar y) {
  if (!(std::abs(x) + std::abs(y) <= 1 + Scalar(tol::kEntropyArgument))) {
    std::ostringstream msg;
    msg << "delta_tilde: (" << x << ", " << y << ") outside |x| + |y| <= 1";
    throw DomainError(msg.str());
  }
  Scalar total = 0;
  for (const Scalar f : {Scalar(1), Scalar(-1)}) {
    const Scalar mu = 1 + f * x;
    if (mu <= 0) continue;
    const Scalar arg = std::clamp((1 + f * y / mu) / 2, Scalar(0), Scalar(1));
    total += mu / 2 * binary_entropy(arg);
  }
  return total;
}

template <typename Scalar>
bool ellipse_is_degenerate(const CanonicalParams<Scalar>& p) {
  return !(p.s0 * p.s1 * std::sin(p.phi) > Scalar(kDegenerateEllipseTolerance));
}

/// Image of the unit disk under (u13, u33) -> (x, y), written as
/// A x^2 + 2 B x y + C y^2 <= 1. Throws DegenerateDomainError when the map
/// is rank deficient.
template <typename Scalar>
EllipseDomain<Scalar> ellipse_domain(const CanonicalParams<Scalar>& p) {
  require_valid(p);
  if (ellipse_is_degenerate(p)) {
    std::ostringstream msg;
    msg << "ellipse_domain: degenerate domain (s0 s1 sin phi = " << p.s0 * p.s1 * std::sin(p.phi) << ")";
    throw DegenerateDomainError(msg.str());
  }
  const Scalar denom = p.s0 * p.s1 * std::sin(p.phi);
  const Scalar cross = 2 * p.s0 * p.s1 * std::cos(p.phi);
  const Scalar squares = p.s0 * p.s0 + p.s1 * p.s1;
  const Scalar diff = std::sqrt(std::max(squares - cross, Scalar(0)));  // |s0 - s1| as vectors
  const Scalar sum = std::sqrt(std::max(squares + cross, Scalar(0)));   // |s0 + s1|
  EllipseDomain<Scalar> dom;
  dom.A = (diff / denom) * (diff / denom);
  dom.C = (sum / denom) * (sum / denom);
  if (std::abs(p.s0 - p.s1) <= Scalar(kEqualPurityTolerance)) {
    const Scalar s = p.s0;
    dom.B = 0;
    dom.rx = s * std::abs(std::cos(p.phi / 2));
    dom.ry = s * std::abs(std::sin(p.phi / 2));
  } else {
    dom.B = (p.s1 * p.s1 - p.s0 * p.s0) / (denom * denom);
  }
  return dom;
}

/// Minimum of delta~ over a non-degenerate elliptic domain. The minimum lies
/// on the boundary; for B = 0 it is delta~(0, ry) = h[(1 + ry)/2], otherwise
/// the boundary angle is scanned at 512 points and the best bracket refined
/// to 1e-10 rad. Of the two symmetric minimizers the one with y >= 0 is
/// reported.
template <typename Scalar>
DeltaMinimum<Scalar> minimize_delta_on_ellipse(const EllipseDomain<Scalar>& dom) {
  if (!dom.positive_definite()) throw DegenerateDomainError("minimize_delta_on_ellipse: domain is not positive definite");
  DeltaMinimum<Scalar> out;
  if (dom.B == 0) {
    const Scalar ry = dom.ry.value_or(1 / std::sqrt(dom.C));
    out.value = binary_entropy((1 + ry) / 2);
    out.x = 0;
    out.y = ry;
    return out;
  }

  using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
  using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
  Matrix2 q;
  q << dom.A, dom.B, dom.B, dom.C;
  const Eigen::SelfAdjointEigenSolver<Matrix2> eig(q);
  const Matrix2 inv_sqrt =
      eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  auto boundary = [&](Scalar angle) -> Vector2 { return inv_sqrt * Vector2(std::cos(angle), std::sin(angle)); };
  auto objective = [&](Scalar angle) {
    const Vector2 pt = boundary(angle);
    return delta_tilde(pt.x(), pt.y());
  };

  constexpr int kScan = 512;
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  const Scalar step = two_pi / kScan;
  int best = 0;
  Scalar best_value = objective(0);
  for (int i = 1; i < kScan; ++i) {
    const Scalar v = objective(i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  Scalar best_angle = best * step;
  const auto [refined_angle, refined_value] =
      golden_section(objective, best_angle - step, best_angle + step, Scalar(1e-10));
  if (refined_value < best_value) {
    best_value = refined_value;
    best_angle = refined_angle;
  }
  Vector2 pt = boundary(best_angle);
  if (pt.y() < 0) pt = -pt;
  out.value = best_value;
  out.x = pt.x();
  out.y = pt.y();
  return out;
}

/// For a rank-deficient map the image of the unit disk is the segment
/// [-e, e]; returns e (zero when the map vanishes).
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 1> segment_endpoint(const CanonicalParams<Scalar>& p) {
  using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;
  const CqCoefficients<Scalar> c = coefficients(p);
  Matrix2 map;
  map << c.a1, c.a3, c.b1, c.b3;
  const Eigen::JacobiSVD<Matrix2> svd(map, Eigen::ComputeFullU);
  return svd.singularValues()[0] * svd.matrixU().col(0);
}

/// Minimum of delta~ over the image of the unit disk for any canonical
/// parameters. Degenerate parameters collapse the image to a segment through
/// the origin, which is scanned at 101 points and refined.
template <typename Scalar>
DeltaMinimum<Scalar> minimize_delta(const CanonicalParams<Scalar>& p) {
  require_valid(p);
  if (!ellipse_is_degenerate(p)) return minimize_delta_on_ellipse(ellipse_domain(p));

  const Eigen::Matrix<Scalar, 2, 1> end = segment_endpoint(p);
  auto objective = [&](Scalar t) { return delta_tilde(t * end.x(), t * end.y()); };
  constexpr int kScan = 101;
  const Scalar step = Scalar(2) / (kScan - 1);
  int best = 0;
  Scalar best_value = objective(-1);
  for (int i = 1; i < kScan; ++i) {
    const Scalar v = objective(-1 + i * step);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  Scalar best_t = -1 + best * step;
  const Scalar lo = std::max(Scalar(-1), best_t - step), hi = std::min(Scalar(1), best_t + step);
  const auto [refined_t, refined_value] = golden_section(objective, lo, hi, Scalar(1e-12));
  if (refined_value < best_value) {
    best_value = refined_value;
    best_t = refined_t;
  }
  DeltaMinimum<Scalar> out;
  out.value = best_value;
  out.x = best_t * end.x();
  out.y = best_t * end.y();
  if (out.y < 0 || (out.y == 0 && out.x < 0)) {
    out.x = -out.x;
    out.y = -out.y;
  }
  out.degenerate = true;
  return out;
}

template <typename Scalar>
void require_equal_purity(const CanonicalParams<Scalar>& p) {
  require_valid(p);
  if (!(std::abs(p.s0 - p.s1) <= Scalar(kEqualPurityTolerance))) {
    std::ostringstream msg;
    msg << "closed-form correlations need s0 == s1 (got s0=" << p.s0 << ", s1=" << p.s1
        << "); use discord_numeric";
    throw UnsupportedRegimeError(msg.str());
  }
}

/// D = h[(1+s|cos phi/2|)/2] + h[(1+s|sin phi/2|)/2] - h[(1+s)/2] - 1.
template <typename Scalar>
Scalar discord_analytic(const CanonicalParams<Scalar>& p) {
  require_equal_purity(p);
  const Scalar s = p.s0;
  const Scalar d = binary_entropy((1 + s * std::abs(std::cos(p.phi / 2))) / 2) +
                   binary_entropy((1 + s * std::abs(std::sin(p.phi / 2))) / 2) - binary_entropy((1 + s) / 2) - 1;
  return std::max(d, Scalar(0));
}

/// C = 1 - h[(1+s|sin phi/2|)/2].
template <typename Scalar>
Scalar classical_analytic(const CanonicalParams<Scalar>& p) {
  require_equal_purity(p);
  const Scalar s = p.s0;
  return std::max(1 - binary_entropy((1 + s * std::abs(std::sin(p.phi / 2))) / 2), Scalar(0));
}

template <typename Scalar>
CorrelationReport<Scalar> analytic_report(const CanonicalParams<Scalar>& p) {
  CorrelationReport<Scalar> r;
  r.discord = discord_analytic(p);
  r.classical = classical_analytic(p);
  r.mutual = r.discord + r.classical;
  return r;
}

namespace detail {

// Entropy of sigma / Tr(sigma) for a positive 2x2 block.
template <typename Scalar>
Scalar normalized_qubit_entropy(const Matrix2c<Scalar>& sigma, Scalar trace) {
  const Scalar z = (sigma(0, 0).real() - sigma(1, 1).real()) / trace;
  const Scalar xy = 2 * std::abs(sigma(0, 1)) / trace;
  const Scalar r = std::min(std::hypot(z, xy), Scalar(1));
  return binary_entropy((1 + r) / 2);
}

// Sum_k p_k S(rho_k) for a projective measurement on one qubit. The
// post-measurement state is sigma_k (x) |Psi_k><Psi_k| (or mirrored), so
// S(rho_k) equals the entropy of the 2x2 conditional block sigma_k.
template <typename Scalar>
Scalar conditional_entropy(const Matrix4c<Scalar>& rho, const MeasurementBasis<Scalar>& basis, Subsystem measured) {
  Scalar total = 0;
  for (int k = 0; k < 2; ++k) {
    const Vector2c<Scalar> psi = basis.ket(k);
    Matrix2c<Scalar> sigma = Matrix2c<Scalar>::Zero();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            if (measured == Subsystem::B)
              sigma(i, j) += std::conj(psi[a]) * rho(2 * i + a, 2 * j + b) * psi[b];
            else
              sigma(i, j) += std::conj(psi[a]) * rho(2 * a + i, 2 * b + j) * psi[b];
          }
    const Scalar pk = sigma.trace().real();
    if (pk < Scalar(kNegligibleOutcome)) continue;
    total += pk * normalized_qubit_entropy(sigma, pk);
  }
  return total;
}

}  // namespace detail

/// Sum_k p_k S(rho_k) after measuring `measured` in `basis`.
template <typename Scalar>
Scalar conditional_entropy_after_measurement(const TwoQubit<Scalar>& rho, const MeasurementBasis<Scalar>& basis,
                                             Subsystem measured) {
  if (measured != Subsystem::A && measured != Subsystem::B) throw DomainError("invalid subsystem label");
  return detail::conditional_entropy(rho.matrix(), basis, measured);
}

/// I = S(rho_A) + S(rho_B) - S(rho), clamped at zero.
template <typename Scalar>
Scalar mutual_information(const TwoQubit<Scalar>& rho) {
  const Scalar i = von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
                   von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
  return std::max(i, Scalar(0));
}

/// Discord with measurement on `measured`, by scanning the two-angle basis
/// mesh (theta endpoint-exclusive on [0, pi/2), phi_m on [0, 2 pi)) and,
/// optionally, refining the best mesh point with Nelder-Mead. Ties on the mesh
/// go to the lowest theta, then the lowest phi_m.
template <typename Scalar>
CorrelationReport<Scalar> discord_numeric(const TwoQubit<Scalar>& rho, Subsystem measured,
                                          const MeshOptions<Scalar>& mesh = {}) {
  if (mesh.n_theta < 8 || mesh.n_phi < 16) {
    std::ostringstream msg;
    msg << "discord_numeric: mesh " << mesh.n_theta << "x" << mesh.n_phi << " below the 8x16 minimum";
    throw DomainError(msg.str());
  }
  if (measured != Subsystem::A && measured != Subsystem::B) throw DomainError("invalid subsystem label");

  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar d_theta = (pi / 2) / mesh.n_theta;
  const Scalar d_phi = (2 * pi) / mesh.n_phi;
  const Matrix4c<Scalar>& m = rho.matrix();

  MeasurementBasis<Scalar> best{0, 0};
  Scalar best_value = detail::conditional_entropy(m, best, measured);
  for (int i = 0; i < mesh.n_theta; ++i) {
    for (int j = 0; j < mesh.n_phi; ++j) {
      const MeasurementBasis<Scalar> basis{i * d_theta, j * d_phi};
      const Scalar v = detail::conditional_entropy(m, basis, measured);
      if (v < best_value) {
        best_value = v;
        best = basis;
      }
    }
  }

  if (mesh.refine) {
    using Point = Eigen::Matrix<Scalar, 2, 1>;
    auto objective = [&](const Point& x) {
      return detail::conditional_entropy(m, MeasurementBasis<Scalar>{x[0], x[1]}, measured);
    };
    const auto result = nelder_mead<Scalar, 2>(objective, Point(best.theta, best.phi_m), Point(d_theta, d_phi));
    if (result.value < best_value) {
      best_value = result.value;
      best = fold_into_box(MeasurementBasis<Scalar>{result.argmin[0], result.argmin[1]});
    }
  }

  const Scalar s_total = von_neumann_entropy(rho);
  const Scalar s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const Scalar s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const Scalar s_measured = measured == Subsystem::A ? s_a : s_b;

  CorrelationReport<Scalar> report;
  report.mutual = std::max(s_a + s_b - s_total, Scalar(0));
  report.discord = std::clamp(s_measured - s_total + best_value, Scalar(0), report.mutual);
  report.classical = report.mutual - report.discord;
  report.argmin_basis = best;
  return report;
}

}  // namespace cqd

#endif  // CQDISCORD_CORRELATIONS_HPP
