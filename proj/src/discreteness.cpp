#include "ultrapar/discreteness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ultrapar/format.hpp"

namespace ultrapar {

using std::numbers::pi;
using std::numbers::sqrt3;
using std::numbers::sqrt2;

namespace {

constexpr double kBoundarySlack = 1e-12;

struct ClosedBox {
  double m0;
  double cos_bound;
  const char* m_text;
  const char* cos_text;
};

ClosedBox closed_box(CaseTag tag) {
  switch (tag) {
    case CaseTag::C23:
      return {std::log(3.0), -0.5, "ln 3", "-1/2"};
    case CaseTag::C24:
    case CaseTag::C44:
      return {std::log(3 + 2 * sqrt2), -sqrt3 / 2, "ln(3+2sqrt2)", "-sqrt3/2"};
    case CaseTag::C26:
    case CaseTag::C36:
      return {std::log(7 + 4 * sqrt3), -sqrt3 / 2, "ln(7+4sqrt3)", "-sqrt3/2"};
  }
  return {0, 0, "", ""};
}

// Only the orders and chain base points matter for planar maps.
TriangleConfig planar_config(CaseTag tag, double r, double theta) {
  TriangleConfig c;
  const auto [n1, n2] = case_orders(tag);
  c.type = TriangleType{0, 0, 0, n1, n2, 2};
  c.theta = theta;
  c.r1 = c.r2 = r;
  const cd e = std::polar(1.0, theta);
  c.phi1 = r * e;
  c.phi2 = -r * std::conj(e);
  return c;
}

double theta_of(double alpha) { return (pi - alpha) / 2; }

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DiscreteCertified: return "discrete-certified";
    case Verdict::NonDiscrete: return "non-discrete";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

bool vertical_shift_ok(CaseTag tag, double m, double alpha) {
  return closed_forms(tag, std::cosh(m / 2), theta_of(alpha)).nu >= 2;
}

double min_orbit_sq_direct(CaseTag tag, double r, double theta, int window) {
  if (window < 1) throw Error(ErrorKind::NonPositiveInput, "window must be >= 1");
  const TriangleConfig c = planar_config(tag, r, theta);
  const Translations tr = closed_forms(tag, r, theta);
  double best = std::numeric_limits<double>::infinity();
  for (const GEntry& e : gtable(tag).entries) {
    const Word& w = e.p;
    const cd p = planar_map(w, c)(0.0);
    for (int x = -window; x <= window; ++x)
      for (int y = -window; y <= window; ++y) {
        if (w.empty() && x == 0 && y == 0) continue;
        best = std::min(best, std::norm(p + double(x) * tr.v1 + double(y) * tr.v2));
      }
  }
  return best;
}

std::vector<cd> planar_orbit_bruteforce(CaseTag tag, const TriangleConfig& c, int max_len) {
  (void)tag;
  std::vector<cd> pts;
  for (const Word& w : enumerate_words({1, 2}, max_len, orders_of(c)))
    pts.push_back(planar_map(w, c)(0.0));
  std::sort(pts.begin(), pts.end(), [](cd a, cd b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  });
  std::vector<cd> out;
  for (const cd& p : pts) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend() && p.real() - it->real() <= 1e-9; ++it)
      if (std::abs(p - *it) <= 1e-9) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

double min_nontrivial_orbit_norm(CaseTag tag, const TriangleConfig& c, int max_len) {
  (void)tag;
  double best = std::numeric_limits<double>::infinity();
  for (const Word& w : enumerate_words({1, 2}, max_len, orders_of(c))) {
    const PlanarMap f = planar_map(w, c);
    if (f.is_identity()) continue;
    best = std::min(best, std::abs(f(0.0)));
  }
  return best;
}

bool closed_discreteness_conditions(CaseTag tag, double m, double alpha) {
  const ClosedBox box = closed_box(tag);
  return m >= box.m0 * (1 - kBoundarySlack) &&
         std::cos(alpha) <= box.cos_bound + kBoundarySlack;
}

bool compression_certified(CaseTag tag, double m, double alpha) {
  if (!closed_discreteness_conditions(tag, m, alpha)) return false;
  const double r = std::cosh(m / 2);
  const double t = std::tan(theta_of(alpha));
  const bool shift = vertical_shift_ok(tag, m, alpha);
  const bool table = gtable_certify(tag, t);
  const bool radius = gtable(tag).K * r * r >= 4 * (1 - kBoundarySlack);
  if (!shift || !table || !radius)
    throw Error(ErrorKind::InternalInconsistency,
                std::string("closed conditions hold but a sub-check failed for ") +
                    case_name(tag) + " at m=" + fmt12(m) + " alpha=" + fmt12(alpha));
  return true;
}

int exceptional_q(double s, double tol) {
  if (s < 1 - tol || s >= 2) return 0;
  const double x = std::clamp(s / 2, -1.0, 1.0);
  const double qs = pi / std::acos(x);
  if (!std::isfinite(qs) || qs > 1e9) return 0;
  const long q0 = std::lround(qs);
  for (long q = q0 - 1; q <= q0 + 1; ++q)
    if (q >= 3 && std::abs(s - 2 * std::cos(pi / double(q))) < tol)
      return static_cast<int>(q);
  return 0;
}

ShimizuResult shimizu_test(double t, double r_h) {
  if (!(t > 0) || !(r_h > 0))
    throw Error(ErrorKind::NonPositiveInput, "Shimizu test needs t > 0 and r_h > 0");
  const double s = t / (r_h * r_h);
  return s < 2 && exceptional_q(s) == 0 ? ShimizuResult::NonDiscrete
                                        : ShimizuResult::Inconclusive;
}

double isometric_sphere_radius(const HMatrixd& m) {
  HVectord qinf;
  qinf << 0, 1, -1;
  const HVectord v = m * qinf;
  const double scale = v.norm();
  if (std::abs(v(0)) <= 1e-12 * scale && std::abs(v(1) + v(2)) <= 1e-12 * scale)
    throw Error(ErrorKind::FixesInfinity, "element fixes the point at infinity");
  const HMatrixd n = det_normalised(m);
  const double x = std::abs(n(1, 1) - n(1, 2) + n(2, 1) - n(2, 2));
  if (x < 1e-14) throw Error(ErrorKind::FixesInfinity, "isometric sphere is degenerate");
  return std::sqrt(2 / x);
}

double nondiscrete_D(CaseTag tag) { return nu_coefficient(tag) / 4; }

ShimizuResult nondiscrete_by_case(CaseTag tag, double m, double alpha) {
  const TriangleConfig c = case_config(tag, m, alpha);
  const double r = std::cosh(m / 2);
  const double r_h = isometric_sphere_radius(c.iota3);
  const double t = closed_forms(tag, r, c.theta).nu;
  const ShimizuResult via_shimizu = shimizu_test(t, r_h);

  // cos(alpha) > 1 - 1/(D r^2) and cos(alpha) != 1 - cos(pi/q)/(D r^2)
  const double x = nondiscrete_D(tag) * r * r * (1 - std::cos(alpha));
  const ShimizuResult via_closed = x < 1 && exceptional_q(2 * x) == 0
                                       ? ShimizuResult::NonDiscrete
                                       : ShimizuResult::Inconclusive;
  if (via_shimizu == via_closed) return via_shimizu;
  // the two roundings may straddle a decision boundary; stay conservative there
  const double s = t / (r_h * r_h);
  if (std::abs(s - 2) < 1e-9 || exceptional_q(s, 1e-8) != 0)
    return ShimizuResult::Inconclusive;
  throw Error(ErrorKind::InternalInconsistency,
              std::string("Shimizu and closed-form routes disagree for ") + case_name(tag) +
                  " at m=" + fmt12(m) + " alpha=" + fmt12(alpha));
}

Classification classify(CaseTag tag, double m, double alpha) {
  if (!(alpha > 0 && alpha < 2 * pi))
    throw Error(ErrorKind::UnsupportedAlpha, "alpha must lie in (0, 2pi)");
  if (!(m >= 0)) throw Error(ErrorKind::NonPositiveInput, "m must be >= 0");

  Classification out{Verdict::Unknown, {}};
  Certificate& c = out.cert;
  const ClosedBox box = closed_box(tag);
  const double r = std::cosh(m / 2);
  c.m_condition = m >= box.m0 * (1 - kBoundarySlack);
  c.alpha_condition = std::cos(alpha) <= box.cos_bound + kBoundarySlack;
  c.closed_conditions = c.m_condition && c.alpha_condition;
  c.nu = closed_forms(tag, r, theta_of(alpha)).nu;
  c.r_h = isometric_sphere_radius(case_config(tag, m, alpha).iota3);
  c.s = c.nu / (c.r_h * c.r_h);
  c.s_below_two = c.s < 2;
  c.q = exceptional_q(c.s);
  c.exceptional = c.q != 0;

  if (compression_certified(tag, m, alpha)) {
    c.gtable_pass = true;
    out.verdict = Verdict::DiscreteCertified;
    c.detail = std::string("m >= ") + box.m_text + ", cos(alpha) <= " + box.cos_text +
               ", nu = " + fmt12(c.nu) + " >= 2, g-table pass";
    return out;
  }
  if (nondiscrete_by_case(tag, m, alpha) == ShimizuResult::NonDiscrete) {
    out.verdict = Verdict::NonDiscrete;
    c.detail = "s = " + fmt12(c.s) + " < 2, not of the form 2cos(pi/q)";
    return out;
  }
  std::string why = "compression: ";
  if (!c.m_condition) why += std::string("m < ") + box.m_text;
  if (!c.m_condition && !c.alpha_condition) why += " and ";
  if (!c.alpha_condition) why += std::string("cos(alpha) > ") + box.cos_text;
  why += "; shimizu: s = " + fmt12(c.s);
  why += c.s_below_two ? " = 2cos(pi/" + std::to_string(c.q) + ")" : " >= 2";
  c.detail = why;
  return out;
}

SweepGrid sweep(CaseTag tag, const SweepSpec& spec) {
  if (spec.res_m < 2 || spec.res_a < 2)
    throw Error(ErrorKind::Parse, "sweep resolutions must be >= 2");
  if (!(spec.m_lo >= 0 && spec.m_hi > spec.m_lo))
    throw Error(ErrorKind::Parse, "m range must satisfy 0 <= lo < hi");
  if (!(spec.a_lo >= 0 && spec.a_hi > spec.a_lo && spec.a_hi <= 2 * pi + 1e-12))
    throw Error(ErrorKind::Parse, "alpha range must lie in [0, 2pi]");
  SweepGrid g{tag, spec, {}};
  g.cells.reserve(static_cast<std::size_t>(spec.res_m) * spec.res_a);
  for (int j = 0; j < spec.res_a; ++j)
    for (int i = 0; i < spec.res_m; ++i) g.cells.push_back(classify(tag, spec.m_at(i), spec.a_at(j)));
  return g;
}

}  // namespace ultrapar
