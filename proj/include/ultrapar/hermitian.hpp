#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "ultrapar/error.hpp"

namespace ultrapar {

template <typename Real>
using HVector = Eigen::Matrix<std::complex<Real>, 3, 1>;

template <typename Real>
using HMatrix = Eigen::Matrix<std::complex<Real>, 3, 3>;

typedef HVector<double> HVectord;
typedef HMatrix<double> HMatrixd;
typedef std::complex<double> cd;

// Default tolerances
inline constexpr double kNullBand = 1e-12;
inline constexpr double kProjTol = 1e-9;

enum class SignClass { Negative, Null, Positive };

// J = diag(1, 1, -1)
template <typename Real>
HMatrix<Real> form_matrix() {
  HMatrix<Real> J = HMatrix<Real>::Zero();
  J(0, 0) = 1;
  J(1, 1) = 1;
  J(2, 2) = -1;
  return J;
}

// <z,w> = z1 conj(w1) + z2 conj(w2) - z3 conj(w3)
template <typename DerivedZ, typename DerivedW>
auto herm_form(const Eigen::MatrixBase<DerivedZ>& z,
               const Eigen::MatrixBase<DerivedW>& w) {
  return z(0) * std::conj(w(0)) + z(1) * std::conj(w(1)) -
         z(2) * std::conj(w(2));
}

template <typename Derived>
SignClass classify_vector(const Eigen::MatrixBase<Derived>& z,
                          double band = kNullBand) {
  const auto n2 = z.squaredNorm();
  if (n2 == 0) throw Error(ErrorKind::ZeroVector, "zero vector has no sign");
  const auto h = std::real(herm_form(z, z));
  if (std::abs(h) < band * n2) return SignClass::Null;
  return h < 0 ? SignClass::Negative : SignClass::Positive;
}

// Index of the largest-modulus coefficient; lowest index wins ties.
template <typename Derived>
Eigen::Index pivot_index(const Eigen::MatrixBase<Derived>& m) {
  Eigen::Index best = 0;
  typename Derived::RealScalar bestAbs = -1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto a = std::abs(m(i, j));
      if (a > bestAbs) {
        bestAbs = a;
        best = i * m.cols() + j;
      }
    }
  return best;
}

template <typename Real>
struct ProjPoint {
  HVector<Real> rep;

  ProjPoint() : rep(HVector<Real>::Zero()) {}
  explicit ProjPoint(const HVector<Real>& z) {
    if (z.squaredNorm() == 0)
      throw Error(ErrorKind::ZeroVector, "projective point from zero vector");
    rep = z / z(pivot_index(z));
  }
};

typedef ProjPoint<double> ProjPointd;

// M1 = lambda * M2 for some complex lambda. Both sides are divided by their
// entry at the pivot of M1, so near-ties in M2 cannot pick a different scale.
template <typename DerivedA, typename DerivedB>
bool proj_equal(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b, double tol = kProjTol) {
  const Eigen::Index k = pivot_index(a);
  const auto cols = a.cols();
  const auto pa = a(k / cols, k % cols);
  const auto pb = b(k / cols, k % cols);
  if (std::abs(pb) == 0) return false;
  return ((a / pa) - (b / pb)).cwiseAbs().maxCoeff() <= tol;
}

template <typename DerivedA, typename DerivedB>
double proj_residual(const Eigen::MatrixBase<DerivedA>& a,
                     const Eigen::MatrixBase<DerivedB>& b) {
  const Eigen::Index k = pivot_index(a);
  const auto cols = a.cols();
  const auto pa = a(k / cols, k % cols);
  const auto pb = b(k / cols, k % cols);
  if (std::abs(pb) == 0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(((a / pa) - (b / pb)).cwiseAbs().maxCoeff());
}

template <typename Real>
bool proj_equal(const ProjPoint<Real>& p, const ProjPoint<Real>& q,
                double tol = kProjTol) {
  return proj_equal(p.rep, q.rep, tol);
}

// cosh^2(rho/2) = <z,w><w,z> / (<z,z><w,w>)
template <typename Real>
Real bergman_dist(const ProjPoint<Real>& p, const ProjPoint<Real>& q) {
  if (classify_vector(p.rep) != SignClass::Negative ||
      classify_vector(q.rep) != SignClass::Negative)
    throw Error(ErrorKind::NotInteriorPoint, "Bergman distance needs negative vectors");
  const Real num = std::norm(herm_form(p.rep, q.rep));
  const Real den = std::real(herm_form(p.rep, p.rep)) *
                   std::real(herm_form(q.rep, q.rep));
  const Real c2 = std::max(Real(1), num / den);
  return 2 * std::acosh(std::sqrt(c2));
}

struct GeodesicRelation {
  enum Kind { Ultraparallel, Ideal, Intersecting } kind;
  double m;  // distance for Ultraparallel, 0 otherwise
};

template <typename DA, typename DB>
GeodesicRelation geodesic_distance(const Eigen::MatrixBase<DA>& c1,
                                   const Eigen::MatrixBase<DB>& c2,
                                   double tol = kProjTol) {
  for (const auto n : {std::real(herm_form(c1, c1)), std::real(herm_form(c2, c2))})
    if (std::abs(n - 1) > tol)
      throw Error(ErrorKind::NotNormalised, "polar vector is not normalised");
  const double a = std::abs(herm_form(c1, c2));
  if (a > 1 + tol) return {GeodesicRelation::Ultraparallel, 2 * std::acosh(a)};
  if (a >= 1 - tol) return {GeodesicRelation::Ideal, 0.0};
  return {GeodesicRelation::Intersecting, 0.0};
}

template <typename Real>
HVector<Real> normalise_polar(const HVector<Real>& c) {
  if (classify_vector(c) != SignClass::Positive)
    throw Error(ErrorKind::NotPositive, "polar vector must be positive");
  return c / std::sqrt(std::real(herm_form(c, c)));
}

template <typename Real>
std::complex<Real> root_of_unity(int n) {
  return std::polar(Real(1), 2 * std::numbers::pi_v<Real> / n);
}

// iota(z) = -z + (1 - mu) <z,c>/<c,c> c,  mu = exp(2 pi i / n)
template <typename Real>
HMatrix<Real> reflection_matrix(const HVector<Real>& c, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "reflection order must be >= 2");
  if (classify_vector(c) != SignClass::Positive)
    throw Error(ErrorKind::NotPositive, "polar vector must be positive");
  const std::complex<Real> mu = root_of_unity<Real>(n);
  const Real cc = std::real(herm_form(c, c));
  const Eigen::Matrix<std::complex<Real>, 1, 3> row =
      c.adjoint() * form_matrix<Real>();
  return -HMatrix<Real>::Identity() + ((Real(1) - mu) / cc) * (c * row);
}

// Projective inverse of an isometry: J M* J.
template <typename Real>
HMatrix<Real> proj_inverse(const HMatrix<Real>& m) {
  const HMatrix<Real> J = form_matrix<Real>();
  return J * m.adjoint() * J;
}

// LU keeps the determinant accurate for large products, where cofactor
// expansion cancels badly.
template <typename Real>
HMatrix<Real> det_normalised(const HMatrix<Real>& m) {
  return m / std::cbrt(std::abs(m.partialPivLu().determinant()));
}

// max |(M*JM - J)_jk| after scaling to |det M| = 1
template <typename Real>
Real form_defect(const HMatrix<Real>& m) {
  const HMatrix<Real> n = det_normalised(m);
  const HMatrix<Real> J = form_matrix<Real>();
  return (n.adjoint() * J * n - J).cwiseAbs().maxCoeff();
}

template <typename Real>
HMatrix<Real> proj_power(const HMatrix<Real>& m, int k) {
  HMatrix<Real> base = k < 0 ? proj_inverse(m) : m;
  HMatrix<Real> out = HMatrix<Real>::Identity();
  for (int e = k < 0 ? -k : k; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

}  // namespace ultrapar
