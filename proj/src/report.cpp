#include "ultrapar/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace ultrapar {

using nlohmann::ordered_json;

namespace {

// Round through the 12-digit text so JSON numbers carry the same digits.
double num(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

ordered_json cnum(cd z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json certificate(const Certificate& c) {
  return {{"closed_conditions", c.closed_conditions},
          {"m_condition", c.m_condition},
          {"alpha_condition", c.alpha_condition},
          {"nu", num(c.nu)},
          {"gtable_pass", c.gtable_pass},
          {"s", num(c.s)},
          {"r_h", num(c.r_h)},
          {"s_below_two", c.s_below_two},
          {"exceptional", c.exceptional},
          {"q", c.q},
          {"detail", c.detail}};
}

const char* fill_of(Verdict v) {
  switch (v) {
    case Verdict::DiscreteCertified: return kFillDiscrete;
    case Verdict::NonDiscrete: return kFillNonDiscrete;
    case Verdict::Unknown: return kFillUnknown;
  }
  return kFillUnknown;
}

}  // namespace

std::string sweep_csv(const SweepGrid& g) {
  std::string out = "case,m,alpha,verdict,detail\n";
  for (int j = 0; j < g.spec.res_a; ++j)
    for (int i = 0; i < g.spec.res_m; ++i) {
      const Classification& c = g.at(i, j);
      out += std::string(case_name(g.tag)) + "," + fmt12(g.spec.m_at(i)) + "," +
             fmt12(g.spec.a_at(j)) + "," + verdict_name(c.verdict) + "," +
             csv_field(c.cert.detail) + "\n";
    }
  return out;
}

std::string sweep_json(const SweepGrid& g) {
  ordered_json cells = ordered_json::array();
  for (int j = 0; j < g.spec.res_a; ++j)
    for (int i = 0; i < g.spec.res_m; ++i) {
      const Classification& c = g.at(i, j);
      cells.push_back({{"m", num(g.spec.m_at(i))},
                       {"alpha", num(g.spec.a_at(j))},
                       {"verdict", verdict_name(c.verdict)},
                       {"detail", c.cert.detail}});
    }
  const ordered_json j = {
      {"schema", kSchema},
      {"case", case_name(g.tag)},
      {"m_range", {num(g.spec.m_lo), num(g.spec.m_hi)}},
      {"alpha_range", {num(g.spec.a_lo), num(g.spec.a_hi)}},
      {"res", {g.spec.res_m, g.spec.res_a}},
      {"cells", cells}};
  return dump(j);
}

// Layout: 2px cells, m to the right, alpha upward, one rect per run of
// equal verdicts in a row.
std::string sweep_svg(const SweepGrid& g) {
  constexpr int cell = 2, left = 60, top = 20, right = 20, bottom = 50;
  const int pw = g.spec.res_m * cell, ph = g.spec.res_a * cell;
  const int w = left + pw + right, h = top + ph + bottom;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<title>" << case_name(g.tag) << " (m, alpha) classification</title>\n"
     << "<g shape-rendering=\"crispEdges\">\n";
  for (int j = 0; j < g.spec.res_a; ++j) {
    const int y = top + (g.spec.res_a - 1 - j) * cell;
    int i0 = 0;
    for (int i = 1; i <= g.spec.res_m; ++i) {
      if (i < g.spec.res_m && g.at(i, j).verdict == g.at(i0, j).verdict) continue;
      os << "<rect x=\"" << left + i0 * cell << "\" y=\"" << y << "\" width=\""
         << (i - i0) * cell << "\" height=\"" << cell << "\" fill=\""
         << fill_of(g.at(i0, j).verdict) << "\"/>\n";
      i0 = i;
    }
  }
  os << "</g>\n"
     << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  const int base = top + ph;
  os << "<text x=\"" << left << "\" y=\"" << base + 16 << "\" text-anchor=\"middle\">"
     << fmt12(g.spec.m_lo) << "</text>\n"
     << "<text x=\"" << left + pw << "\" y=\"" << base + 16 << "\" text-anchor=\"middle\">"
     << fmt12(g.spec.m_hi) << "</text>\n"
     << "<text x=\"" << left + pw / 2 << "\" y=\"" << base + 36
     << "\" text-anchor=\"middle\">m</text>\n"
     << "<text x=\"" << left - 6 << "\" y=\"" << base << "\" text-anchor=\"end\">"
     << fmt12(g.spec.a_lo) << "</text>\n"
     << "<text x=\"" << left - 6 << "\" y=\"" << top + 10 << "\" text-anchor=\"end\">"
     << fmt12(g.spec.a_hi) << "</text>\n"
     << "<text x=\"" << left - 30 << "\" y=\"" << top + ph / 2
     << "\" text-anchor=\"middle\">&#945;</text>\n"
     << "</svg>\n";
  return os.str();
}

std::string classify_json(CaseTag tag, double m, double alpha, const Classification& c) {
  const ordered_json j = {{"schema", kSchema},
                          {"case", case_name(tag)},
                          {"m", num(m)},
                          {"alpha", num(alpha)},
                          {"verdict", verdict_name(c.verdict)},
                          {"certificate", certificate(c.cert)}};
  return dump(j);
}

std::string verify_json(const RelationReport& rep, const std::vector<TranslationCheck>& tr,
                        double m, double alpha, double tol, bool ok) {
  ordered_json ids = ordered_json::array();
  for (const RelationResult& r : rep.results) {
    ordered_json e = {{"identity", r.lhs + " = " + r.rhs},
                      {"lhs_word", r.lhs},
                      {"rhs_expr", r.rhs},
                      {"residual", num(r.residual)},
                      {"holds", r.holds}};
    if (r.variant) e["variant"] = r.variant;
    ids.push_back(e);
  }
  ordered_json groups = ordered_json::array();
  for (const auto& g : rep.groups)
    groups.push_back({{"variant", g.variant}, {"lhs_word", g.lhs}, {"holding", g.holding}});
  ordered_json trs = ordered_json::array();
  for (const TranslationCheck& t : tr)
    trs.push_back({{"element", t.name},
                   {"word", format_word(t.word)},
                   {"expected_xi", cnum(t.expected_xi)},
                   {"expected_t", num(t.expected_t)},
                   {"measured_xi", cnum(t.measured_xi)},
                   {"measured_t", num(t.measured_t)},
                   {"rel_error", num(t.rel_error)},
                   {"translation", t.is_translation}});
  const ordered_json j = {{"schema", kSchema},
                          {"case", case_name(rep.tag)},
                          {"m", num(m)},
                          {"alpha", num(alpha)},
                          {"tol", num(tol)},
                          {"ok", ok},
                          {"identities", ids},
                          {"variant_groups", groups},
                          {"translations", trs}};
  return dump(j);
}

std::string lattice_info_json(CaseTag tag, const TriangleConfig& c) {
  const CaseData& d = case_data(tag);
  const Translations tr = closed_forms(tag, c.r1, c.theta);
  const std::string hp = d.H_power == 1 ? "H" : "H^" + std::to_string(d.H_power);
  const std::string comm = d.t1_first ? "[T1,T2]" : "[T2,T1]";
  ordered_json rem = ordered_json::array();
  for (const Word& w : d.remainders) rem.push_back(format_word(w));
  const ordered_json j = {
      {"schema", kSchema},
      {"case", case_name(tag)},
      {"m", num(2 * std::acosh(c.r1))},
      {"alpha", num(c.alpha)},
      {"r", num(c.r1)},
      {"theta", num(c.theta)},
      {"T1", {{"word", format_word(d.T1)}, {"xi", cnum(tr.v1)}, {"t", num(tr.t1)}}},
      {"T2", {{"word", format_word(d.T2)}, {"xi", cnum(tr.v2)}, {"t", num(tr.t2)}}},
      {"H", {{"word", format_word(d.H)}, {"nu", num(tr.nu)}}},
      {"commutator", hp + " = " + comm + " = (12)^" + std::to_string(d.k12)},
      {"remainders", rem}};
  return dump(j);
}

std::string orbit_csv(const OrbitPlot& p) {
  std::string out = "re,im\n";
  for (const cd& z : p.points) out += fmt12(z.real()) + "," + fmt12(z.imag()) + "\n";
  return out;
}

std::string orbit_json(const OrbitPlot& p) {
  ordered_json pts = ordered_json::array();
  for (const cd& z : p.points) pts.push_back(cnum(z));
  const ordered_json j = {{"schema", kSchema},
                          {"case", case_name(p.tag)},
                          {"m", num(p.m)},
                          {"alpha", num(p.alpha)},
                          {"max_len", p.max_len},
                          {"count", p.points.size()},
                          {"points", pts}};
  return dump(j);
}

std::string orbit_svg(const OrbitPlot& p) {
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const cd& z : p.points) {
    lo_x = std::min(lo_x, z.real());
    hi_x = std::max(hi_x, z.real());
    lo_y = std::min(lo_y, z.imag());
    hi_y = std::max(hi_y, z.imag());
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  const double pad = 0.05 * span, marker = 0.006 * span;
  const double x0 = lo_x - pad, y0 = -(hi_y + pad);
  const double w = hi_x - lo_x + 2 * pad, h = hi_y - lo_y + 2 * pad;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\""
     << fmt12(600 * h / w) << "\" viewBox=\"" << fmt12(x0) << " " << fmt12(y0) << " "
     << fmt12(w) << " " << fmt12(h) << "\">\n"
     << "<title>" << case_name(p.tag) << " orbit of 0, m=" << fmt12(p.m)
     << " alpha=" << fmt12(p.alpha) << " max_len=" << p.max_len << " points=" << p.points.size()
     << "</title>\n<g fill=\"#000000\">\n";
  // y is flipped so the imaginary axis points up
  for (const cd& z : p.points)
    os << "<circle cx=\"" << fmt12(z.real()) << "\" cy=\"" << fmt12(-z.imag()) << "\" r=\""
       << fmt12(marker) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ultrapar
