#ifndef CQDISCORD_STATES_HPP
#define CQDISCORD_STATES_HPP

// Classical-quantum two-qubit states
//
//   rho = 1/2 (|0><0| (x) tau0 + |1><1| (x) tau1)
//
// and their reduction to three rotation invariants (s0, s1, phi): the two
// Bloch-vector lengths and the angle between them.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cqdiscord/qmat.hpp"

namespace cqd {

template <typename Scalar = double>
struct CqState {
  Qubit<Scalar> tau0;
  Qubit<Scalar> tau1;
};

template <typename Scalar = double>
struct CanonicalParams {
  Scalar s0 = 0;
  Scalar s1 = 0;
  Scalar phi = 0;  // radians, in [0, pi]
};

// Weights of rho = 1/4 [1(x)1 + 1(x)(a1 s1 + a3 s3) + s3(x)(b1 s1 + b3 s3)].
template <typename Scalar = double>
struct CqCoefficients {
  Scalar a1 = 0;
  Scalar a3 = 0;
  Scalar b1 = 0;
  Scalar b3 = 0;
};

template <typename Scalar>
void require_valid(const CanonicalParams<Scalar>& p) {
  const Scalar slack = Scalar(tol::kBlochLength);
  const bool ok = p.s0 >= 0 && p.s0 <= 1 + slack && p.s1 >= 0 && p.s1 <= 1 + slack && p.phi >= 0 &&
                  p.phi <= std::numbers::pi_v<Scalar> + slack;
  if (!ok) {
    std::ostringstream msg;
    msg << "canonical parameters out of range: s0=" << p.s0 << " s1=" << p.s1 << " phi=" << p.phi;
    throw DomainError(msg.str());
  }
}

namespace kets {
template <typename Scalar = double>
Vector2c<Scalar> zero() { return Vector2c<Scalar>(Complex<Scalar>(1), Complex<Scalar>(0)); }
template <typename Scalar = double>
Vector2c<Scalar> one() { return Vector2c<Scalar>(Complex<Scalar>(0), Complex<Scalar>(1)); }
template <typename Scalar = double>
Vector2c<Scalar> plus() { return Vector2c<Scalar>(Complex<Scalar>(1), Complex<Scalar>(1)) / std::sqrt(Scalar(2)); }
template <typename Scalar = double>
Vector2c<Scalar> minus() { return Vector2c<Scalar>(Complex<Scalar>(1), Complex<Scalar>(-1)) / std::sqrt(Scalar(2)); }
}  // namespace kets

template <typename Scalar>
Qubit<Scalar> pure_qubit(const Vector2c<Scalar>& ket) {
  return Qubit<Scalar>(outer<Scalar>(ket.normalized()));
}

template <typename Scalar>
CqState<Scalar> cq_from_bloch(const BlochVector<Scalar>& s0, const BlochVector<Scalar>& s1) {
  return {bloch_to_density(s0), bloch_to_density(s1)};
}

/// tau0 = |+><+|, tau1 = |-><-|: the fully classical starting state.
template <typename Scalar = double>
CqState<Scalar> initial_state() {
  return {pure_qubit(kets::plus<Scalar>()), pure_qubit(kets::minus<Scalar>())};
}

/// tau0 = |0><0|, tau1 = |+><+|: the B92 resource state.
template <typename Scalar = double>
CqState<Scalar> b92_state() {
  return {pure_qubit(kets::zero<Scalar>()), pure_qubit(kets::plus<Scalar>())};
}

/// State in the canonical frame: s0 along +Z, s1 in the XZ plane at angle phi.
template <typename Scalar>
CqState<Scalar> canonical_state(const CanonicalParams<Scalar>& p) {
  require_valid(p);
  const BlochVector<Scalar> v0(0, 0, p.s0);
  const BlochVector<Scalar> v1(p.s1 * std::sin(p.phi), 0, p.s1 * std::cos(p.phi));
  return cq_from_bloch(v0, v1);
}

template <typename Scalar>
TwoQubit<Scalar> assemble(const CqState<Scalar>& cq) {
  const Matrix2c<Scalar> p0 = outer<Scalar>(kets::zero<Scalar>());
  const Matrix2c<Scalar> p1 = outer<Scalar>(kets::one<Scalar>());
  const Matrix4c<Scalar> m = (tensor(p0, cq.tau0.matrix()) + tensor(p1, cq.tau1.matrix())) / Scalar(2);
  return TwoQubit<Scalar>(m);
}

/// Bloch lengths and the angle between them. A zero-length vector gives phi = 0.
template <typename Scalar>
CanonicalParams<Scalar> canonicalize(const CqState<Scalar>& cq) {
  const BlochVector<Scalar> v0 = density_to_bloch(cq.tau0);
  const BlochVector<Scalar> v1 = density_to_bloch(cq.tau1);
  CanonicalParams<Scalar> p;
  p.s0 = std::min(v0.norm(), Scalar(1));
  p.s1 = std::min(v1.norm(), Scalar(1));
  if (v0.norm() == Scalar(0) || v1.norm() == Scalar(0)) {
    p.phi = 0;
    return p;
  }
  const Scalar cosine = std::clamp(v0.dot(v1) / (v0.norm() * v1.norm()), Scalar(-1), Scalar(1));
  p.phi = std::acos(cosine);
  return p;
}

template <typename Scalar>
CqCoefficients<Scalar> coefficients(const CanonicalParams<Scalar>& p) {
  CqCoefficients<Scalar> c;
  c.a1 = p.s1 * std::sin(p.phi) / 2;
  c.b1 = -c.a1;
  c.a3 = (p.s0 + p.s1 * std::cos(p.phi)) / 2;
  c.b3 = (p.s0 - p.s1 * std::cos(p.phi)) / 2;
  return c;
}

/// Rebuilds the 4x4 matrix from its Pauli weights.
template <typename Scalar>
Matrix4c<Scalar> pauli_form(const CqCoefficients<Scalar>& c) {
  const Matrix2c<Scalar> id = pauli<Scalar>(0);
  const Matrix2c<Scalar> x = pauli<Scalar>(1);
  const Matrix2c<Scalar> z = pauli<Scalar>(3);
  const Matrix2c<Scalar> local_b = c.a1 * x + c.a3 * z;
  const Matrix2c<Scalar> correlated_b = c.b1 * x + c.b3 * z;
  return (tensor(id, id) + tensor(id, local_b) + tensor(z, correlated_b)) / Scalar(4);
}

}  // namespace cqd

#endif  // CQDISCORD_STATES_HPP
