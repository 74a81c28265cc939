#pragma once

#include <vector>

#include "ultrapar/qsqrt3.hpp"
#include "ultrapar/triangle.hpp"
#include "ultrapar/word.hpp"

namespace ultrapar {

// Row of a g-table: p = w(0) with a(t) = a0 + a1 t, b(t) = b0 + b1 t.
struct GEntry {
  Word p;
  QSqrt3 a0, a1, b0, b1;
};

// g_p(u,v) = A (u-a)^2 + B (v-b)^2 - kappa sec^2(theta), over u = v (mod 2).
// |p + x v1 + y v2|^2 = scale r^2 cos^2(theta) (A (u-a)^2 + B (v-b)^2)
// with u = u_sign (y - x), v = x + y.
struct GTable {
  CaseTag tag;
  std::vector<GEntry> entries;
  int A, B;
  Rational kappa;
  int scale;
  int u_sign;
  int K;         // target min |p + x v1 + y v2|^2 >= K r^2
  double t_max;  // certified range |t| <= t_max
};

const GTable& gtable(CaseTag tag);

// Exact coefficients of g_p(u,v) as a polynomial G0 + G1 t + G2 t^2.
struct GPoly {
  QSqrt3 c0, c1, c2;
  double operator()(double t) const {
    return c0.to_double() + t * (c1.to_double() + t * c2.to_double());
  }
  bool identically_zero() const { return c0.is_zero() && c1.is_zero() && c2.is_zero(); }
};

GPoly g_poly(const GTable& g, const GEntry& e, long u, long v);

struct GPoint {
  int entry;
  long u, v;
  double g;
  bool exact_zero;
};

struct GCheck {
  std::vector<GPoint> points;  // every admissible lattice point in every box
  bool ok = true;
};

// No range check; used outside the certified range by tests and reports.
GCheck gtable_evaluate(CaseTag tag, double t);

bool gtable_certify(CaseTag tag, double t);

}  // namespace ultrapar
