#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "ultrapar/hermitian.hpp"

namespace ultrapar {

// Boundary point in Heisenberg coordinates, or the point at infinity.
template <typename Real>
struct HeisPoint {
  bool infinite = false;
  std::complex<Real> zeta{};
  Real nu{};

  static HeisPoint at_infinity() {
    HeisPoint p;
    p.infinite = true;
    return p;
  }
  static HeisPoint finite(std::complex<Real> z, Real v) {
    HeisPoint p;
    p.zeta = z;
    p.nu = v;
    return p;
  }
};

typedef HeisPoint<double> HeisPointd;

template <typename Real>
struct Chain {
  bool vertical = true;
  std::complex<Real> base{};  // vertical: base point; finite: centre zeta0
  Real nu0{};                 // finite only
  Real radius{};              // finite only

  static Chain vertical_at(std::complex<Real> z) {
    Chain c;
    c.base = z;
    return c;
  }
  static Chain finite_at(std::complex<Real> z, Real v, Real r) {
    if (!(r > 0)) throw Error(ErrorKind::NotPositive, "chain radius must be positive");
    Chain c;
    c.vertical = false;
    c.base = z;
    c.nu0 = v;
    c.radius = r;
    return c;
  }
};

typedef Chain<double> Chaind;

namespace detail {
template <typename Real>
void require_finite(const HeisPoint<Real>& p) {
  if (p.infinite)
    throw Error(ErrorKind::InfinityOperand, "operation undefined at infinity");
}
}  // namespace detail

// (x1,n1)*(x2,n2) = (x1+x2, n1+n2+2 Im(x1 conj(x2)))
template <typename Real>
HeisPoint<Real> heis_mul(const HeisPoint<Real>& p, const HeisPoint<Real>& q) {
  detail::require_finite(p);
  detail::require_finite(q);
  return HeisPoint<Real>::finite(
      p.zeta + q.zeta,
      p.nu + q.nu + 2 * std::imag(p.zeta * std::conj(q.zeta)));
}

template <typename Real>
HeisPoint<Real> heis_inv(const HeisPoint<Real>& p) {
  detail::require_finite(p);
  return HeisPoint<Real>::finite(-p.zeta, -p.nu);
}

template <typename Real>
HeisPoint<Real> heis_pow(const HeisPoint<Real>& p, long k) {
  detail::require_finite(p);
  // powers of a single element commute, so the twist term vanishes
  return HeisPoint<Real>::finite(p.zeta * Real(k), p.nu * Real(k));
}

// [p,q] = p^-1 q^-1 p q = (0, 4 Im(x1 conj(x2)))
template <typename Real>
HeisPoint<Real> heis_commutator(const HeisPoint<Real>& p,
                                const HeisPoint<Real>& q) {
  detail::require_finite(p);
  detail::require_finite(q);
  return HeisPoint<Real>::finite(
      0, 4 * std::imag(p.zeta * std::conj(q.zeta)));
}

template <typename Real>
Real cygan_dist(const HeisPoint<Real>& p, const HeisPoint<Real>& q) {
  detail::require_finite(p);
  detail::require_finite(q);
  const std::complex<Real> i(0, 1);
  const std::complex<Real> w =
      std::norm(p.zeta - q.zeta) - i * (p.nu - q.nu) -
      Real(2) * i * std::imag(p.zeta * std::conj(q.zeta));
  return std::sqrt(std::abs(w));
}

// [z1:z2:z3] -> (z1/(z2+z3), Im((z2-z3)/(z2+z3))), [0:z:-z] -> infinity
template <typename Real>
HeisPoint<Real> stereo_project(const ProjPoint<Real>& p) {
  const HVector<Real>& z = p.rep;
  if (classify_vector(z) != SignClass::Null)
    throw Error(ErrorKind::NotNullVector, "stereographic projection needs a null vector");
  const std::complex<Real> s = z(1) + z(2);
  if (std::abs(s) <= Real(kNullBand) * z.norm()) return HeisPoint<Real>::at_infinity();
  return HeisPoint<Real>::finite(z(0) / s, std::imag((z(1) - z(2)) / s));
}

template <typename Real>
ProjPoint<Real> stereo_unproject(const HeisPoint<Real>& p) {
  HVector<Real> z;
  if (p.infinite) {
    z << 0, 1, -1;
  } else {
    const std::complex<Real> i(0, 1);
    const Real a = std::norm(p.zeta);
    z << Real(2) * p.zeta, Real(1) - a + i * p.nu, Real(1) + a - i * p.nu;
  }
  return ProjPoint<Real>(z);
}

// Act on a boundary point by matrix, through the stereographic chart.
template <typename Real>
HeisPoint<Real> act(const HMatrix<Real>& m, const HeisPoint<Real>& p) {
  return stereo_project(ProjPoint<Real>(m * stereo_unproject(p).rep));
}

template <typename Real>
HMatrix<Real> translation_matrix(std::complex<Real> xi, Real nu) {
  const std::complex<Real> i(0, 1);
  const std::complex<Real> a = (std::norm(xi) - i * nu) / Real(2);
  const std::complex<Real> xb = std::conj(xi);
  HMatrix<Real> m;
  m << 1, xi, xi,
       -xb, Real(1) - a, -a,
       xb, a, Real(1) + a;
  return m;
}

template <typename Real>
HMatrix<Real> rotation_matrix(std::complex<Real> mu) {
  if (std::abs(std::abs(mu) - 1) > kProjTol)
    throw Error(ErrorKind::NotUnitModulus, "rotation needs |mu| = 1");
  HMatrix<Real> m = HMatrix<Real>::Identity();
  m(0, 0) = mu;
  return m;
}

template <typename Real>
HMatrix<Real> vertical_reflection_matrix(std::complex<Real> phi, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "reflection order must be >= 2");
  const std::complex<Real> mu = root_of_unity<Real>(n);
  const std::complex<Real> k = Real(1) - mu;
  const Real f2 = std::norm(phi);
  const std::complex<Real> pb = std::conj(phi);
  HMatrix<Real> m;
  m << -mu, -k * phi, -k * phi,
       -k * pb, k * f2 - Real(1), k * f2,
       k * pb, -k * f2, -k * f2 - Real(1);
  return m;
}

// Coordinate formula for the reflection in the vertical chain through phi.
template <typename Real>
HeisPoint<Real> vertical_reflection_action(std::complex<Real> phi, int n,
                                           const HeisPoint<Real>& p) {
  detail::require_finite(p);
  const std::complex<Real> mu = root_of_unity<Real>(n);
  const std::complex<Real> k = Real(1) - mu;
  return HeisPoint<Real>::finite(
      mu * p.zeta + k * phi,
      p.nu - 2 * std::norm(phi) * std::imag(k) +
          2 * std::imag(k * std::conj(phi) * p.zeta));
}

template <typename Real>
struct ReflectionFactors {
  std::complex<Real> mu;
  std::complex<Real> xi;
  Real nu;
};

// iota = R_mu T_(xi,nu) = T_(mu xi,nu) R_mu, xi = (conj(mu)-1) phi,
// nu = 2 |phi|^2 sin(2 pi / n)
template <typename Real>
ReflectionFactors<Real> decompose_reflection(std::complex<Real> phi, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "reflection order must be >= 2");
  const std::complex<Real> mu = root_of_unity<Real>(n);
  return {mu, (std::conj(mu) - Real(1)) * phi,
          2 * std::norm(phi) * std::sin(2 * std::numbers::pi_v<Real> / n)};
}

template <typename Real>
HVector<Real> chain_polar(const Chain<Real>& c) {
  HVector<Real> v;
  const std::complex<Real> zb = std::conj(c.base);
  if (c.vertical) {
    v << 1, -zb, zb;
  } else {
    const std::complex<Real> i(0, 1);
    const Real r2 = c.radius * c.radius;
    const Real z2 = std::norm(c.base);
    v << Real(2) * c.base, Real(1) + r2 - z2 + i * c.nu0,
        Real(1) - r2 + z2 - i * c.nu0;
  }
  return v;
}

// Base point of the image of the vertical chain through xi under the order-n
// reflection in the vertical chain through zeta.
template <typename Real>
std::complex<Real> rotate_vertical_chain(std::complex<Real> xi,
                                         std::complex<Real> zeta, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidOrder, "reflection order must be >= 2");
  const std::complex<Real> mu = root_of_unity<Real>(n);
  return mu * xi - (mu - Real(1)) * zeta;
}

// Signed residual |zeta|^4 + nu^2 - 1 against the unit spinal sphere.
template <typename Real>
Real on_unit_spinal_sphere(const HeisPoint<Real>& p) {
  detail::require_finite(p);
  const Real a = std::norm(p.zeta);
  return a * a + p.nu * p.nu - 1;
}

template <typename Real>
struct IsometryClass {
  enum Kind { HeisTranslation, VerticalTranslation, Other } kind;
  std::complex<Real> xi{};
  Real nu{};
};

template <typename Real>
IsometryClass<Real> classify_isometry(const HMatrix<Real>& m,
                                      double tol = kProjTol) {
  if (form_defect(m) > 1e-6)
    throw Error(ErrorKind::NotIsometry, "matrix does not preserve the form");
  IsometryClass<Real> out{IsometryClass<Real>::Other, {}, {}};
  HVector<Real> o;
  o << 0, 1, 1;
  const HVector<Real> img = m * o;
  const std::complex<Real> s = img(1) + img(2);
  if (std::abs(s) <= Real(kNullBand) * img.norm()) return out;
  const std::complex<Real> xi = img(0) / s;
  const Real nu = std::imag((img(1) - img(2)) / s);
  if (!proj_equal(m, translation_matrix(xi, nu), tol)) return out;
  out.xi = xi;
  out.nu = nu;
  out.kind = std::abs(xi) < 1e-9 * (1 + std::abs(nu))
                 ? IsometryClass<Real>::VerticalTranslation
                 : IsometryClass<Real>::HeisTranslation;
  return out;
}

}  // namespace ultrapar
