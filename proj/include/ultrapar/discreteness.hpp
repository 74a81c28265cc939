#pragma once

#include <string>
#include <vector>

#include "ultrapar/gtable.hpp"
#include "ultrapar/lattice.hpp"

namespace ultrapar {

enum class Verdict { DiscreteCertified, NonDiscrete, Unknown };
const char* verdict_name(Verdict v);  // discrete-certified | non-discrete | unknown

enum class ShimizuResult { NonDiscrete, Inconclusive };

struct Certificate {
  // compression side
  bool closed_conditions = false;
  bool m_condition = false;
  bool alpha_condition = false;
  double nu = 0;
  bool gtable_pass = false;
  // Shimizu side
  double s = 0;  // t / r_h^2 for H and iota3
  double r_h = 0;
  bool s_below_two = false;
  bool exceptional = false;  // s within tolerance of 2 cos(pi/q)
  int q = 0;                 // matching q when exceptional
  std::string detail;
};

struct Classification {
  Verdict verdict;
  Certificate cert;
};

bool vertical_shift_ok(CaseTag tag, double m, double alpha);

// min |p + x v1 + y v2|^2 over remainder base points and |x|,|y| <= window,
// excluding p = 0, x = y = 0.
double min_orbit_sq_direct(CaseTag tag, double r, double theta, int window = 5);

// Orbit of 0 under words in iota1, iota2 with at most max_len syllables.
std::vector<cd> planar_orbit_bruteforce(CaseTag tag, const TriangleConfig& c, int max_len);

// min |f(0)| over f with at most max_len syllables whose planar map is not
// the identity.
double min_nontrivial_orbit_norm(CaseTag tag, const TriangleConfig& c, int max_len);

// Closed conditions of the discreteness propositions, inclusive.
bool closed_discreteness_conditions(CaseTag tag, double m, double alpha);
bool compression_certified(CaseTag tag, double m, double alpha);

// 2 cos(pi/q), q >= 3, within tol of s; returns the q or 0.
int exceptional_q(double s, double tol = 1e-9);
ShimizuResult shimizu_test(double t, double r_h);
double isometric_sphere_radius(const HMatrixd& m);

// D in cos(alpha) > 1 - 1/(D cosh^2(m/2))
double nondiscrete_D(CaseTag tag);
ShimizuResult nondiscrete_by_case(CaseTag tag, double m, double alpha);

Classification classify(CaseTag tag, double m, double alpha);

struct SweepSpec {
  double m_lo = 0, m_hi = 3;
  double a_lo = 0, a_hi = 6.283185307179586;
  int res_m = 200, res_a = 200;
  double m_at(int i) const { return m_lo + (i + 0.5) * (m_hi - m_lo) / res_m; }
  double a_at(int j) const { return a_lo + (j + 0.5) * (a_hi - a_lo) / res_a; }
};

// Cells are stored row-major with alpha as the row index.
struct SweepGrid {
  CaseTag tag;
  SweepSpec spec;
  std::vector<Classification> cells;
  const Classification& at(int i, int j) const { return cells[j * spec.res_m + i]; }
};

SweepGrid sweep(CaseTag tag, const SweepSpec& spec);

}  // namespace ultrapar
