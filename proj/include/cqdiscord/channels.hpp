#ifndef CQDISCORD_CHANNELS_HPP
#define CQDISCORD_CHANNELS_HPP

// Single-qubit Kraus channels applied locally to one half of a two-qubit
// state, and the amplitude-damping trajectory of the |+>, |-> pair.

#include <cmath>
#include <numbers>
#include <sstream>

#include "cqdiscord/errors.hpp"
#include "cqdiscord/qmat.hpp"
#include "cqdiscord/states.hpp"

namespace cqd {

/// Two-element Kraus decomposition with E0^dagger E0 + E1^dagger E1 = 1.
template <typename Scalar = double>
class KrausPair {
 public:
  KrausPair(const Matrix2c<Scalar>& e0, const Matrix2c<Scalar>& e1, Scalar p) : e0_(e0), e1_(e1), p_(p) {
    const Matrix2c<Scalar> sum = e0.adjoint() * e0 + e1.adjoint() * e1;
    const Scalar defect = (sum - Matrix2c<Scalar>::Identity()).cwiseAbs().maxCoeff();
    if (!(defect <= Scalar(tol::kMatrixEquality))) {
      std::ostringstream msg;
      msg << "Kraus pair is not trace preserving (max |sum E^dagger E - 1| = " << defect << ")";
      throw DomainError(msg.str());
    }
  }

  const Matrix2c<Scalar>& e0() const { return e0_; }
  const Matrix2c<Scalar>& e1() const { return e1_; }
  Scalar p() const { return p_; }

 private:
  Matrix2c<Scalar> e0_;
  Matrix2c<Scalar> e1_;
  Scalar p_;
};

template <typename Scalar>
void require_probability(Scalar p, const char* what) {
  if (!(p >= 0 && p <= 1)) {
    std::ostringstream msg;
    msg << what << ": damping probability " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

/// E0 = |0><0| + sqrt(1-p)|1><1|, E1 = sqrt(p)|0><1|.
template <typename Scalar>
KrausPair<Scalar> amplitude_damping(Scalar p) {
  require_probability(p, "amplitude_damping");
  using C = Complex<Scalar>;
  Matrix2c<Scalar> e0, e1;
  e0 << C(1), C(0), C(0), C(std::sqrt(1 - p));
  e1 << C(0), C(std::sqrt(p)), C(0), C(0);
  return KrausPair<Scalar>(e0, e1, p);
}

/// p = 1 - exp(-gamma t).
template <typename Scalar>
Scalar p_of_t(Scalar gamma, Scalar t) {
  if (!(gamma >= 0 && t >= 0)) {
    std::ostringstream msg;
    msg << "p_of_t: rate and time must be non-negative (gamma=" << gamma << ", t=" << t << ")";
    throw DomainError(msg.str());
  }
  return -std::expm1(-gamma * t);
}

template <typename Scalar>
Qubit<Scalar> apply(const Qubit<Scalar>& tau, const KrausPair<Scalar>& kraus) {
  const Matrix2c<Scalar>& m = tau.matrix();
  return Qubit<Scalar>(kraus.e0() * m * kraus.e0().adjoint() + kraus.e1() * m * kraus.e1().adjoint());
}

/// Sum_k (1 (x) E_k) rho (1 (x) E_k)^dagger for target B, mirrored for A.
template <typename Scalar>
TwoQubit<Scalar> apply_local(const TwoQubit<Scalar>& rho, const KrausPair<Scalar>& kraus, Subsystem target) {
  const Matrix2c<Scalar> id = Matrix2c<Scalar>::Identity();
  Matrix4c<Scalar> out = Matrix4c<Scalar>::Zero();
  for (const Matrix2c<Scalar>* e : {&kraus.e0(), &kraus.e1()}) {
    Matrix4c<Scalar> lifted;
    switch (target) {
      case Subsystem::A: lifted = tensor<Scalar>(*e, id); break;
      case Subsystem::B: lifted = tensor<Scalar>(id, *e); break;
      default: throw DomainError("apply_local: invalid subsystem label");
    }
    out += lifted * rho.matrix() * lifted.adjoint();
  }
  return TwoQubit<Scalar>(out);
}

template <typename Scalar = double>
struct TrajectoryPoint {
  Scalar p = 0;
  Scalar s = 0;
  Scalar phi = 0;
  BlochVector<Scalar> bloch_plus;
  BlochVector<Scalar> bloch_minus;

  CanonicalParams<Scalar> params() const { return {s, s, phi}; }
};

/// Closed-form image of |+><+| and |-><-| under amplitude damping p:
/// s(p) = sqrt(1 + p(p - 1)), phi(p) = pi - 2 atan(p / sqrt(1 - p)), phi(1) = 0.
template <typename Scalar>
TrajectoryPoint<Scalar> trajectory(Scalar p) {
  require_probability(p, "trajectory");
  TrajectoryPoint<Scalar> pt;
  pt.p = p;
  pt.s = std::sqrt(1 + p * (p - 1));
  pt.phi = p < 1 ? std::numbers::pi_v<Scalar> - 2 * std::atan(p / std::sqrt(1 - p)) : Scalar(0);
  const Scalar x = std::sqrt(1 - p);
  pt.bloch_plus = BlochVector<Scalar>(x, 0, p);
  pt.bloch_minus = BlochVector<Scalar>(-x, 0, p);
  return pt;
}

/// The damped initial state: amplitude damping p applied to qubit B of
/// 1/2 (|0><0| (x) |+><+| + |1><1| (x) |-><-|).
template <typename Scalar>
TwoQubit<Scalar> damped_initial_state(Scalar p) {
  return apply_local(assemble(initial_state<Scalar>()), amplitude_damping(p), Subsystem::B);
}

}  // namespace cqd

#endif  // CQDISCORD_CHANNELS_HPP
