#ifndef CQDISCORD_QMAT_HPP
#define CQDISCORD_QMAT_HPP

// Dense complex linear algebra for one- and two-qubit operators.
//
// Everything is templated on the real scalar type; the complex entry type is
// std::complex<Scalar>. Qubit A is always the left (slow) tensor factor, so
// the two-qubit basis order is |00>, |01>, |10>, |11> with the first digit
// belonging to A.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <string_view>

#include "cqdiscord/errors.hpp"

namespace cqd {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar, int Dim>
using ComplexMatrix = Eigen::Matrix<Complex<Scalar>, Dim, Dim, Eigen::RowMajor>;

template <typename Scalar>
using Matrix2c = ComplexMatrix<Scalar, 2>;

template <typename Scalar>
using Matrix4c = ComplexMatrix<Scalar, 4>;

template <typename Scalar>
using Vector2c = Eigen::Matrix<Complex<Scalar>, 2, 1>;

template <typename Scalar, int Dim>
using RealVector = Eigen::Matrix<Scalar, Dim, 1>;

// Components (x, y, z) of s in tau = (1 + s . sigma) / 2.
template <typename Scalar>
using BlochVector = Eigen::Matrix<Scalar, 3, 1>;

enum class Subsystem { A, B };

// Validation tolerances. These are fixed library constants.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPositivity = 1e-10;
inline constexpr double kBlochLength = 1e-10;
inline constexpr double kEntropyArgument = 1e-12;
inline constexpr double kMatrixEquality = 1e-12;
}  // namespace tol

inline Subsystem parse_subsystem(std::string_view label) {
  if (label == "A" || label == "a") return Subsystem::A;
  if (label == "B" || label == "b") return Subsystem::B;
  throw DomainError("subsystem label must be A or B, got '" + std::string(label) + "'");
}

inline const char* to_string(Subsystem s) {
  return s == Subsystem::A ? "A" : "B";
}

template <typename Scalar, int Dim>
bool approx_equal(const ComplexMatrix<Scalar, Dim>& a, const ComplexMatrix<Scalar, Dim>& b,
                  Scalar tolerance = Scalar(tol::kMatrixEquality)) {
  return (a - b).cwiseAbs().maxCoeff() <= tolerance;
}

template <typename Scalar, int Dim>
Scalar hermiticity_defect(const ComplexMatrix<Scalar, Dim>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Identity (index 0) and the Pauli matrices sigma_1..sigma_3.
template <typename Scalar = double>
Matrix2c<Scalar> pauli(int index) {
  using C = Complex<Scalar>;
  Matrix2c<Scalar> m;
  switch (index) {
    case 0: m << C(1), C(0), C(0), C(1); break;
    case 1: m << C(0), C(1), C(1), C(0); break;
    case 2: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: m << C(1), C(0), C(0), C(-1); break;
    default:
      throw DomainError("pauli index must be in {0,1,2,3}, got " + std::to_string(index));
  }
  return m;
}

template <typename Scalar>
Matrix2c<Scalar> outer(const Vector2c<Scalar>& ket) {
  return ket * ket.adjoint();
}

/// Kronecker product a (x) b with a indexing the slow factor.
template <typename Scalar>
Matrix4c<Scalar> tensor(const Matrix2c<Scalar>& a, const Matrix2c<Scalar>& b) {
  Matrix4c<Scalar> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

/// Real spectrum of a Hermitian matrix, sorted in descending order.
///
/// The 2x2 case is closed form; the 4x4 case uses Eigen's self-adjoint QR
/// iteration. Throws DomainError when the input is not Hermitian within
/// tol::kHermitian.
template <typename Scalar, int Dim>
RealVector<Scalar, Dim> eigvals_hermitian(const ComplexMatrix<Scalar, Dim>& m) {
  static_assert(Dim == 2 || Dim == 4, "only one- and two-qubit operators are supported");
  const Scalar defect = hermiticity_defect(m);
  if (!(defect <= Scalar(tol::kHermitian))) {
    std::ostringstream msg;
    msg << "eigvals_hermitian: matrix is not Hermitian (max |M - M^dagger| = " << defect << ")";
    throw DomainError(msg.str());
  }
  RealVector<Scalar, Dim> values;
  if constexpr (Dim == 2) {
    const Scalar a = m(0, 0).real();
    const Scalar d = m(1, 1).real();
    const Scalar mean = (a + d) / 2;
    const Scalar radius = std::hypot((a - d) / 2, std::abs((m(0, 1) + std::conj(m(1, 0))) / Scalar(2)));
    values << mean + radius, mean - radius;
  } else {
    // Symmetrize first so the solver sees an exactly Hermitian input.
    const Eigen::Matrix<Complex<Scalar>, Dim, Dim> h = (m + m.adjoint()) / Scalar(2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Complex<Scalar>, Dim, Dim>> solver(h, Eigen::EigenvaluesOnly);
    values = solver.eigenvalues().reverse();
  }
  return values;
}

/// Binary Shannon entropy in bits, with h(0) = h(1) = 0.
template <typename Scalar>
Scalar binary_entropy(Scalar x) {
  const Scalar slack = Scalar(tol::kEntropyArgument);
  if (!(x >= -slack && x <= Scalar(1) + slack)) {
    std::ostringstream msg;
    msg << "binary_entropy: argument " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (x <= Scalar(0) || x >= Scalar(1)) return Scalar(0);
  return -x * std::log2(x) - (Scalar(1) - x) * std::log2(Scalar(1) - x);
}

// Shannon entropy (bits) of a spectrum. Eigenvalues in [-kPositivity, 0) are
// treated as exact zeros.
template <typename Scalar, int Dim>
Scalar spectrum_entropy(const RealVector<Scalar, Dim>& spectrum) {
  Scalar s = 0;
  for (int i = 0; i < spectrum.size(); ++i) {
    const Scalar lambda = std::max(spectrum[i], Scalar(0));
    if (lambda > Scalar(0)) s -= lambda * std::log2(lambda);
  }
  return std::max(s, Scalar(0));
}

/// Positive, unit-trace Hermitian operator on one (Dim = 2) or two (Dim = 4)
/// qubits. Construction validates; a constructed value is always valid.
template <typename Scalar, int Dim>
class DensityOperator {
  static_assert(Dim == 2 || Dim == 4, "only one- and two-qubit operators are supported");

 public:
  using Matrix = ComplexMatrix<Scalar, Dim>;

  explicit DensityOperator(const Matrix& m) : matrix_(m) {
    const Scalar defect = hermiticity_defect(m);
    if (!(defect <= Scalar(tol::kHermitian))) {
      std::ostringstream msg;
      msg << "invalid state: not Hermitian (max |M - M^dagger| = " << defect << ")";
      throw InvalidStateError(msg.str());
    }
    const Complex<Scalar> trace = m.trace();
    if (!(std::abs(trace - Complex<Scalar>(1)) <= Scalar(tol::kTrace))) {
      std::ostringstream msg;
      msg << "invalid state: trace is not one (Tr = " << trace.real() << (trace.imag() < 0 ? "" : "+")
          << trace.imag() << "i)";
      throw InvalidStateError(msg.str());
    }
    spectrum_ = eigvals_hermitian(m);
    if (!(spectrum_[Dim - 1] >= -Scalar(tol::kPositivity))) {
      std::ostringstream msg;
      msg << "invalid state: not positive semidefinite (min eigenvalue = " << spectrum_[Dim - 1] << ")";
      throw InvalidStateError(msg.str());
    }
  }

  const Matrix& matrix() const { return matrix_; }
  const RealVector<Scalar, Dim>& spectrum() const { return spectrum_; }

 private:
  Matrix matrix_;
  RealVector<Scalar, Dim> spectrum_;
};

template <typename Scalar>
using Qubit = DensityOperator<Scalar, 2>;

template <typename Scalar>
using TwoQubit = DensityOperator<Scalar, 4>;

/// Von Neumann entropy in bits.
template <typename Scalar, int Dim>
Scalar von_neumann_entropy(const DensityOperator<Scalar, Dim>& rho) {
  return spectrum_entropy<Scalar, Dim>(rho.spectrum());
}

/// tau = (1 + s . sigma) / 2. Throws InvalidStateError when |s| > 1.
template <typename Scalar>
Qubit<Scalar> bloch_to_density(const BlochVector<Scalar>& s) {
  const Scalar length = s.norm();
  if (!(length <= Scalar(1) + Scalar(tol::kBlochLength))) {
    std::ostringstream msg;
    msg << "invalid state: Bloch vector length " << length << " exceeds 1";
    throw InvalidStateError(msg.str());
  }
  using C = Complex<Scalar>;
  Matrix2c<Scalar> m;
  m << C(1 + s.z(), 0), C(s.x(), -s.y()), C(s.x(), s.y()), C(1 - s.z(), 0);
  return Qubit<Scalar>(m / Scalar(2));
}

/// s_i = Tr(tau sigma_i).
template <typename Scalar>
BlochVector<Scalar> density_to_bloch(const Qubit<Scalar>& tau) {
  BlochVector<Scalar> s;
  for (int i = 0; i < 3; ++i) s[i] = (tau.matrix() * pauli<Scalar>(i + 1)).trace().real();
  return s;
}

/// Reduced operator on the subsystem `keep`; works on any 4x4 matrix.
template <typename Scalar>
Matrix2c<Scalar> partial_trace(const Matrix4c<Scalar>& m, Subsystem keep) {
  Matrix2c<Scalar> out = Matrix2c<Scalar>::Zero();
  switch (keep) {
    case Subsystem::A:
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
      break;
    case Subsystem::B:
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(k, l) = m(k, l) + m(2 + k, 2 + l);
      break;
    default:
      throw DomainError("partial_trace: invalid subsystem label");
  }
  return out;
}

template <typename Scalar>
Qubit<Scalar> partial_trace(const TwoQubit<Scalar>& rho, Subsystem keep) {
  return Qubit<Scalar>(partial_trace(rho.matrix(), keep));
}

}  // namespace cqd

#endif  // CQDISCORD_QMAT_HPP
