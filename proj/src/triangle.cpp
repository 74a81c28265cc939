#include "ultrapar/triangle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace ultrapar {

using std::numbers::pi;

const HMatrixd& TriangleConfig::generator(int k) const {
  switch (k) {
    case 1: return iota1;
    case 2: return iota2;
    case 3: return iota3;
  }
  throw Error(ErrorKind::InvalidOrder, "generator index must be 1, 2 or 3");
}

const HMatrix<long double>& TriangleConfig::generator_x(int k) const {
  switch (k) {
    case 1: return iota1x;
    case 2: return iota2x;
    case 3: return iota3x;
  }
  throw Error(ErrorKind::InvalidOrder, "generator index must be 1, 2 or 3");
}

int TriangleConfig::order(int k) const {
  switch (k) {
    case 1: return type.n1;
    case 2: return type.n2;
    case 3: return type.n3;
  }
  throw Error(ErrorKind::InvalidOrder, "generator index must be 1, 2 or 3");
}

bool existence_check(double m1, double m2, double m3, double alpha) {
  const double r1 = std::cosh(m1 / 2), r2 = std::cosh(m2 / 2), r3 = std::cosh(m3 / 2);
  return std::cos(alpha) < (r1 * r1 + r2 * r2 + r3 * r3 - 1) / (2 * r1 * r2 * r3);
}

bool admissible_orders(int n1, int n2) {
  const int a = std::min(n1, n2), b = std::max(n1, n2);
  static const std::pair<int, int> table[] = {{2, 2}, {2, 3}, {2, 4}, {2, 6},
                                              {3, 3}, {3, 6}, {4, 4}};
  return std::find(std::begin(table), std::end(table), std::make_pair(a, b)) !=
         std::end(table);
}

TriangleConfig build_config(const TriangleType& type, double alpha) {
  if (type.m3 != 0)
    throw Error(ErrorKind::UnsupportedCase, "only m3 = 0 configurations are built");
  if (!(alpha > 0 && alpha < 2 * pi))
    throw Error(ErrorKind::UnsupportedAlpha, "alpha must lie in (0, 2pi)");
  if (!existence_check(type.m1, type.m2, type.m3, alpha))
    throw Error(ErrorKind::ExistenceFails, "no triangle with these invariants");

  TriangleConfig c;
  c.type = type;
  c.alpha = alpha;
  c.theta = (pi - alpha) / 2;
  c.r1 = std::cosh(type.m1 / 2);
  c.r2 = std::cosh(type.m2 / 2);
  const cd e = std::polar(1.0, c.theta);
  c.phi1 = c.r2 * e;
  c.phi2 = -c.r1 * std::conj(e);
  c.c1 << 1, -std::conj(c.phi1), std::conj(c.phi1);
  c.c2 << 1, -std::conj(c.phi2), std::conj(c.phi2);
  c.c3 << 0, 1, 0;
  c.iota1 = reflection_matrix(c.c1, type.n1);
  c.iota2 = reflection_matrix(c.c2, type.n2);
  c.iota3 = reflection_matrix(c.c3, type.n3);

  typedef long double X;
  const std::complex<X> ex = std::polar(X(1), (std::numbers::pi_v<X> - X(alpha)) / 2);
  const std::complex<X> p1 = std::cosh(X(type.m2) / 2) * ex;
  const std::complex<X> p2 = -std::cosh(X(type.m1) / 2) * std::conj(ex);
  HVector<X> v1, v2;
  v1 << 1, -std::conj(p1), std::conj(p1);
  v2 << 1, -std::conj(p2), std::conj(p2);
  c.iota1x = reflection_matrix(v1, type.n1);
  c.iota2x = reflection_matrix(v2, type.n2);
  c.iota3x = reflection_matrix(HVector<X>(c.c3.cast<std::complex<X>>()), type.n3);
  return c;
}

// arg of <c3,c2><c1,c3><c2,c1>, mapped into [0, 2pi)
double angular_invariant(const HVectord& c1, const HVectord& c2, const HVectord& c3) {
  for (const HVectord* c : {&c1, &c2, &c3}) {
    if (classify_vector(*c) != SignClass::Positive)
      throw Error(ErrorKind::NotPositive, "polar vectors must be positive");
    if (std::abs(std::real(herm_form(*c, *c)) - 1) > kProjTol)
      throw Error(ErrorKind::NotNormalised, "polar vectors must be normalised");
  }
  const cd f1 = herm_form(c3, c2), f2 = herm_form(c1, c3), f3 = herm_form(c2, c1);
  if (std::abs(f1) == 0 || std::abs(f2) == 0 || std::abs(f3) == 0)
    throw Error(ErrorKind::DegenerateProduct, "a Hermitian pairing vanishes");
  double a = std::arg(f1 * f2 * f3);
  if (a < 0) a += 2 * pi;
  if (a >= 2 * pi) a -= 2 * pi;
  return a;
}

CaseTag case_of(const TriangleType& t) {
  if (t.m1 != t.m2 || t.m3 != 0 || t.n3 != 2)
    throw Error(ErrorKind::UnsupportedCase, "need type [m,m,0;n1,n2,2]");
  const int a = std::min(t.n1, t.n2), b = std::max(t.n1, t.n2);
  if (a != t.n1)
    throw Error(ErrorKind::UnsupportedCase, "orders must be listed as n1 <= n2");
  if (a == 2 && b == 3) return CaseTag::C23;
  if (a == 2 && b == 4) return CaseTag::C24;
  if (a == 4 && b == 4) return CaseTag::C44;
  if (a == 2 && b == 6) return CaseTag::C26;
  if (a == 3 && b == 6) return CaseTag::C36;
  std::ostringstream os;
  os << "order pair {" << a << "," << b << "} is not one of the implemented cases";
  throw Error(ErrorKind::UnsupportedCase, os.str());
}

const char* case_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::C23: return "C23";
    case CaseTag::C24: return "C24";
    case CaseTag::C44: return "C44";
    case CaseTag::C26: return "C26";
    case CaseTag::C36: return "C36";
  }
  return "?";
}

std::pair<int, int> case_orders(CaseTag tag) {
  switch (tag) {
    case CaseTag::C23: return {2, 3};
    case CaseTag::C24: return {2, 4};
    case CaseTag::C44: return {4, 4};
    case CaseTag::C26: return {2, 6};
    case CaseTag::C36: return {3, 6};
  }
  return {0, 0};
}

TriangleType case_type(CaseTag tag, double m) {
  const auto [n1, n2] = case_orders(tag);
  return TriangleType{m, m, 0, n1, n2, 2};
}

TriangleConfig case_config(CaseTag tag, double m, double alpha) {
  return build_config(case_type(tag, m), alpha);
}

namespace {

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || !std::isfinite(v))
    throw Error(ErrorKind::Parse, "bad number '" + s + "' in triangle type");
  return v;
}

int parse_order(const std::string& s) {
  const double v = parse_real(s);
  if (v != std::floor(v) || v < 2 || v > 1000)
    throw Error(ErrorKind::Parse, "bad order '" + s + "' in triangle type");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char ch : s) {
    if (ch == sep)
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

}  // namespace

TriangleType parse_type(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorKind::Parse, "triangle type must look like [m,m,0;n1,n2,2]");
  const auto halves = split(s.substr(1, s.size() - 2), ';');
  if (halves.size() != 2)
    throw Error(ErrorKind::Parse, "triangle type needs exactly one ';'");
  const auto ms = split(halves[0], ','), ns = split(halves[1], ',');
  if (ms.size() != 3 || ns.size() != 3)
    throw Error(ErrorKind::Parse, "triangle type needs three distances and three orders");
  TriangleType t;
  t.m1 = parse_real(ms[0]);
  t.m2 = parse_real(ms[1]);
  t.m3 = parse_real(ms[2]);
  if (t.m1 < 0 || t.m2 < 0 || t.m3 < 0)
    throw Error(ErrorKind::Parse, "distances must be non-negative");
  t.n1 = parse_order(ns[0]);
  t.n2 = parse_order(ns[1]);
  t.n3 = parse_order(ns[2]);
  return t;
}

}  // namespace ultrapar
