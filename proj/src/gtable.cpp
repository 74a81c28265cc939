#include "ultrapar/gtable.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace ultrapar {

namespace {

// r + s sqrt(3) with r = rn/rd, s = sn/sd
QSqrt3 q(std::int64_t rn, std::int64_t rd, std::int64_t sn = 0, std::int64_t sd = 1) {
  return {Rational(rn, rd), Rational(sn, sd)};
}

Word w(const char* s) { return reduce_word(parse_word(s), {6, 6, 6}); }

const QSqrt3 Z = q(0, 1);

GTable make(CaseTag tag) {
  const double t12 = 2 - std::numbers::sqrt3;
  switch (tag) {
    case CaseTag::C23:
      return {tag,
              {{w("Id"), Z, Z, Z, Z},
               {w("1"), q(-1, 2), q(0, 1, 1, 6), q(-1, 6), q(0, 1, -1, 6)},
               {w("2"), q(1, 2), Z, Z, q(0, 1, -1, 6)},
               {w("12"), q(-1, 1), q(0, 1, 1, 6), q(-1, 6), Z},
               {w("22"), q(1, 4), q(0, 1, 1, 4), q(1, 4), q(0, 1, -1, 12)},
               {w("122"), q(-3, 4), q(0, 1, -1, 12), q(-5, 12), q(0, 1, -1, 12)}},
              1, 3, Rational(1, 4), 12, 1, 3, 1 / std::numbers::sqrt3};
    case CaseTag::C24:
      return {tag,
              {{w("Id"), Z, Z, Z, Z},
               {w("1"), q(-1, 2), q(1, 2), q(-1, 2), q(-1, 2)},
               {w("2"), q(1, 2), Z, Z, q(-1, 2)},
               {w("21"), q(1, 1), q(1, 2), q(-1, 2), Z}},
              1, 1, Rational(1, 4), 8, 1, 2, t12};
    case CaseTag::C44:
      return {tag,
              {{w("Id"), Z, Z, Z, Z},
               {w("1"), q(-1, 2), q(-1, 2), q(1, 2), q(-1, 2)},
               {w("11"), q(-1, 1), Z, Z, q(-1, 1)},
               {w("111"), q(-1, 2), q(1, 2), q(-1, 2), q(-1, 2)}},
              1, 1, Rational(1, 2), 4, -1, 2, t12};
    case CaseTag::C26:
      return {tag,
              {{w("Id"), Z, Z, Z, Z},
               {w("1"), q(1, 1), Z, Z, q(0, 1, -1, 3)},
               {w("2"), q(-1, 4), q(0, 1, 1, 4), q(-1, 4), q(0, 1, -1, 12)},
               {w("21"), q(1, 4), q(0, 1, -1, 4), q(-3, 4), q(0, 1, -1, 4)},
               {w("22"), q(-3, 4), q(0, 1, 1, 4), q(-1, 4), q(0, 1, -1, 4)},
               {w("221"), q(-5, 4), q(0, 1, -1, 4), q(-3, 4), q(0, 1, -1, 12)}},
              1, 3, Rational(1, 4), 4, 1, 1, t12};
    case CaseTag::C36:
      return {tag,
              {{w("Id"), Z, Z, Z, Z},
               {w("2"), q(-1, 6), q(0, 1, 1, 6), q(-1, 2), q(0, 1, -1, 6)},
               {w("22"), q(-1, 2), q(0, 1, 1, 6), q(-1, 2), q(0, 1, -1, 2)},
               {w("112"), q(5, 6), q(0, 1, -1, 6), q(-1, 2), q(0, 1, -1, 6)},
               {w("221"), q(-1, 2), q(0, 1, -1, 6), q(-3, 2), q(0, 1, -1, 2)},
               {w("222"), q(-2, 3), Z, Z, q(0, 1, -2, 3)}},
              3, 1, Rational(1, 3), 3, 1, 1, t12};
  }
  throw Error(ErrorKind::UnsupportedCase, "no g-table for this case");
}

}  // namespace

const GTable& gtable(CaseTag tag) {
  static const std::map<CaseTag, GTable> tables = {
      {CaseTag::C23, make(CaseTag::C23)}, {CaseTag::C24, make(CaseTag::C24)},
      {CaseTag::C44, make(CaseTag::C44)}, {CaseTag::C26, make(CaseTag::C26)},
      {CaseTag::C36, make(CaseTag::C36)}};
  return tables.at(tag);
}

GPoly g_poly(const GTable& g, const GEntry& e, long u, long v) {
  const QSqrt3 A(g.A), B(g.B), k(g.kappa), two(2);
  const QSqrt3 du = QSqrt3(u) - e.a0;
  const QSqrt3 dv = QSqrt3(v) - e.b0;
  return {A * du * du + B * dv * dv - k,
          -(two * A * du * e.a1 + two * B * dv * e.b1),
          A * e.a1 * e.a1 + B * e.b1 * e.b1 - k};
}

GCheck gtable_evaluate(CaseTag tag, double t) {
  const GTable& g = gtable(tag);
  const double sec2 = 1 + t * t;
  const double gu = std::sqrt(g.kappa.to_double() * sec2 / g.A);
  const double gv = std::sqrt(g.kappa.to_double() * sec2 / g.B);
  GCheck out;
  for (std::size_t k = 0; k < g.entries.size(); ++k) {
    const GEntry& e = g.entries[k];
    const double a = e.a0.to_double() + e.a1.to_double() * t;
    const double b = e.b0.to_double() + e.b1.to_double() * t;
    // closed box, widened slightly so equality points on the edge are kept
    const double eps = 1e-9;
    const long ulo = static_cast<long>(std::ceil(a - gu - eps));
    const long uhi = static_cast<long>(std::floor(a + gu + eps));
    const long vlo = static_cast<long>(std::ceil(b - gv - eps));
    const long vhi = static_cast<long>(std::floor(b + gv + eps));
    for (long u = ulo; u <= uhi; ++u)
      for (long v = vlo; v <= vhi; ++v) {
        if (((u - v) % 2) != 0) continue;
        if (e.p.empty() && u == 0 && v == 0) continue;
        const GPoly poly = g_poly(g, e, u, v);
        const double val = poly(t);
        out.points.push_back({static_cast<int>(k), u, v, val, poly.identically_zero()});
        if (val < 0) out.ok = false;
      }
  }
  return out;
}

bool gtable_certify(CaseTag tag, double t) {
  const GTable& g = gtable(tag);
  if (!(std::abs(t) <= g.t_max * (1 + 1e-12)))
    throw Error(ErrorKind::OutOfCertifiedRange, "t outside the certified range");
  return gtable_evaluate(tag, t).ok;
}

}  // namespace ultrapar
