#ifndef CQDISCORD_TESTS_SUPPORT_HPP
#define CQDISCORD_TESTS_SUPPORT_HPP

// Random generators and independent oracles for the test suites. Nothing in
// the oracle namespace calls into the library routine it is used to check.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cqdiscord/cqdiscord.hpp"

namespace cqd::testing {

using Rng = std::mt19937_64;
constexpr double kPi = std::numbers::pi;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

inline BlochVector<double> random_direction(Rng& rng) {
  std::normal_distribution<double> n;
  BlochVector<double> v(n(rng), n(rng), n(rng));
  return v.normalized();
}

inline BlochVector<double> random_bloch(Rng& rng) {
  return random_direction(rng) * std::cbrt(uniform(rng, 0.0, 1.0));
}

template <int Dim>
ComplexMatrix<double, Dim> random_unitary(Rng& rng) {
  std::normal_distribution<double> n;
  Eigen::Matrix<std::complex<double>, Dim, Dim> g;
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j) g(i, j) = {n(rng), n(rng)};
  Eigen::HouseholderQR<Eigen::Matrix<std::complex<double>, Dim, Dim>> qr(g);
  Eigen::Matrix<std::complex<double>, Dim, Dim> q = qr.householderQ();
  const auto r = qr.matrixQR();
  for (int j = 0; j < Dim; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

// Ginibre-distributed mixed two-qubit state.
inline TwoQubit<double> random_two_qubit(Rng& rng) {
  std::normal_distribution<double> n;
  Matrix4c<double> g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = {n(rng), n(rng)};
  Matrix4c<double> m = g * g.adjoint();
  m /= m.trace();
  return TwoQubit<double>(Matrix4c<double>((m + m.adjoint()) / 2.0));
}

inline CqState<double> random_cq(Rng& rng) { return cq_from_bloch(random_bloch(rng), random_bloch(rng)); }

// Equal purity, random orientation of the pair and random opening angle.
inline CqState<double> random_equal_purity_cq(Rng& rng) {
  const double s = uniform(rng, 0.0, 1.0);
  const BlochVector<double> u = random_direction(rng);
  BlochVector<double> w = random_direction(rng);
  const double angle = std::acos(uniform(rng, -1.0, 1.0));
  // Unit vector at `angle` from u, in the plane spanned by u and w.
  BlochVector<double> perp = (w - w.dot(u) * u).normalized();
  const BlochVector<double> v = std::cos(angle) * u + std::sin(angle) * perp;
  return cq_from_bloch<double>(s * u, s * v);
}

inline Qubit<double> rotate(const Qubit<double>& tau, const Matrix2c<double>& u) {
  return Qubit<double>(u * tau.matrix() * u.adjoint());
}

namespace oracle {

inline double h(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(x * std::log(x) + (1.0 - x) * std::log(1.0 - x)) / std::log(2.0);
}

// Von Neumann entropy through the general complex eigensolver.
template <int Dim>
double entropy(const ComplexMatrix<double, Dim>& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix<std::complex<double>, Dim, Dim>> es(m, false);
  double s = 0.0;
  for (int i = 0; i < Dim; ++i) {
    const double l = es.eigenvalues()[i].real();
    if (l > 1e-15) s -= l * std::log2(l);
  }
  return s;
}

// Sum_k p_k S(rho_k) with the full 4x4 projectors 1 (x) Pi_k (or Pi_k (x) 1).
inline double conditional_entropy_4x4(const Matrix4c<double>& rho, double theta, double phi, Subsystem measured) {
  const std::complex<double> e = std::polar(1.0, phi);
  Vector2c<double> k0(std::complex<double>(std::cos(theta)), e * std::sin(theta));
  Vector2c<double> k1(std::conj(e) * std::sin(theta), std::complex<double>(-std::cos(theta)));
  double total = 0.0;
  for (const auto& k : {k0, k1}) {
    const Matrix2c<double> pi = k * k.adjoint();
    Matrix4c<double> lift;
    const Matrix2c<double> id = Matrix2c<double>::Identity();
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            lift(2 * i + a, 2 * j + b) = measured == Subsystem::B ? id(i, j) * pi(a, b) : pi(i, j) * id(a, b);
    const Matrix4c<double> post = lift * rho * lift;
    const double p = post.trace().real();
    if (p < 1e-14) continue;
    total += p * entropy<4>(Matrix4c<double>(post / p));
  }
  return total;
}

// Fine mesh plus compass search on the 4x4 route: min_k sum p_k S(rho_k).
inline double min_conditional_entropy(const Matrix4c<double>& rho, Subsystem measured, int n_theta = 90,
                                      int n_phi = 180) {
  double best = 1e300, bt = 0.0, bp = 0.0;
  for (int i = 0; i <= n_theta; ++i)
    for (int j = 0; j < n_phi; ++j) {
      const double t = (kPi / 2) * i / n_theta, p = 2 * kPi * j / n_phi;
      const double v = conditional_entropy_4x4(rho, t, p, measured);
      if (v < best) best = v, bt = t, bp = p;
    }
  double step = kPi / n_phi;
  while (step > 1e-9) {
    bool moved = false;
    for (const auto& [dt, dp] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const double t = bt + dt * step, p = bp + dp * step;
      const double v = conditional_entropy_4x4(rho, t, p, measured);
      if (v < best) best = v, bt = t, bp = p, moved = true;
    }
    if (!moved) step /= 2;
  }
  return best;
}

inline double discord_4x4(const TwoQubit<double>& rho, Subsystem measured) {
  const Matrix4c<double>& m = rho.matrix();
  Matrix2c<double> reduced = Matrix2c<double>::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        reduced(i, j) += measured == Subsystem::B ? m(2 * k + i, 2 * k + j) : m(2 * i + k, 2 * j + k);
  return entropy<2>(reduced) - entropy<4>(m) + min_conditional_entropy(m, measured);
}

// delta(u13, u33) = sum_k mu_k/2 h[(1 + nu_k/mu_k)/2] directly from the Pauli
// weights, without the (x, y) change of variables.
inline double delta_from_rotation(const CqCoefficients<double>& c, double u13, double u33) {
  double total = 0.0;
  for (const double f : {1.0, -1.0}) {
    const double mu = 1.0 + f * (c.a1 * u13 + c.a3 * u33);
    const double nu = f * (c.b1 * u13 + c.b3 * u33);
    if (mu <= 0.0) continue;
    total += mu / 2.0 * h((1.0 + nu / mu) / 2.0);
  }
  return total;
}

struct DiskMinimum {
  double value;
  double x;
  double y;
};

// Minimum of delta over the filled unit disk of (u13, u33): a polar grid of
// n_radii x n_angles points (rim included), then a compass search in the
// disk with radial projection. Reports the minimizer mapped to (x, y).
inline DiskMinimum min_delta_over_disk(const CanonicalParams<double>& p, int n_radii = 1000, int n_angles = 1000) {
  const CqCoefficients<double> c = coefficients(p);
  double best = 1e300, bu = 0.0, bv = 0.0;
  for (int i = 1; i <= n_radii; ++i) {
    const double r = double(i) / n_radii;
    for (int j = 0; j < n_angles; ++j) {
      const double a = 2 * kPi * j / n_angles;
      const double u = r * std::cos(a), v = r * std::sin(a);
      const double val = delta_from_rotation(c, u, v);
      if (val < best) best = val, bu = u, bv = v;
    }
  }
  auto project = [](double& u, double& v) {
    const double r = std::hypot(u, v);
    if (r > 1.0) u /= r, v /= r;
  };
  double step = 2 * kPi / n_angles;
  while (step > 1e-11) {
    bool moved = false;
    for (const auto& [du, dv] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}) {
      double u = bu + du * step, v = bv + dv * step;
      project(u, v);
      const double val = delta_from_rotation(c, u, v);
      if (val < best) best = val, bu = u, bv = v, moved = true;
    }
    if (!moved) step /= 2;
  }
  return {best, c.a1 * bu + c.a3 * bv, c.b1 * bu + c.b3 * bv};
}

// Closed forms written out independently of the library.
inline double discord_formula(double s, double phi) {
  return h((1 + s * std::abs(std::cos(phi / 2))) / 2) + h((1 + s * std::abs(std::sin(phi / 2))) / 2) -
         h((1 + s) / 2) - 1;
}

inline double classical_formula(double s, double phi) { return 1 - h((1 + s * std::abs(std::sin(phi / 2))) / 2); }

}  // namespace oracle
}  // namespace cqd::testing

#endif  // CQDISCORD_TESTS_SUPPORT_HPP
