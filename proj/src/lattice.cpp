#include "ultrapar/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>

namespace ultrapar {

namespace {

const double kSqrt3 = std::numbers::sqrt3;

std::vector<Word> words(std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(reduce_word(parse_word(w), {6, 6, 6}));
  return out;
}

Word word(const char* w) { return reduce_word(parse_word(w), {6, 6, 6}); }

CaseData make_c23() {
  return {CaseTag::C23, word("21212"), word("12212"), power(word("12"), 6), 1, true, 6,
          words({"Id", "1", "2", "12", "22", "122"}),
          {{"(12)^6", "T1^-1 T2^-1 T1 T2"},
           {"12122", "T2 T1^-1"},
           {"21221", "T1 T2^-1"},
           {"22121", "T2^-1"},
           {"12121", "T2 T1^-1 221"},
           {"22122", "T1^-1 21"},
           {"21", "T1 T2^-1 12"},
           {"212", "T1 T2^-1 122"},
           {"1212", "T2 T1^-1 22"},
           {"2122", "T1 T2^-1 1", 1},
           {"2122", "T2^-1 1", 1},
           {"121", "T2 T1^-1 2"},
           {"221", "T2^-1 122"},
           {"1221", "T2 22"},
           {"2121", "T1 22"},
           {"T2 H T2^-1", "(12)^6"},
           {"H T1", "T1 H"},
           {"H T2", "T2 H"},
           {"T2 T1", "T1 T2 H^-1"}}};
}

CaseData make_c24() {
  return {CaseTag::C24, word("212"), word("122"), power(word("12"), 4), 1, true, 4,
          words({"Id", "1", "2", "21"}),
          {{"(12)^4", "T1^-1 T2^-1 T1 T2"},
           {"221", "T2^-1"},
           {"121", "T2 T1^-1 2"},
           {"222", "T1^-1 21"},
           {"12", "T2 T1^-1 21"},
           {"22", "T2^-1 1"},
           {"T2 H T2^-1", "(12)^4"},
           {"H T1", "T1 H"},
           {"H T2", "T2 H"},
           {"T2 T1", "T1 T2 H^-1"}}};
}

CaseData make_c44() {
  return {CaseTag::C44, word("1112"), word("2111"), word("1212"), 2, false, 4,
          words({"Id", "1", "11", "111"}),
          {{"T2^-1 T1^-1 T2 T1", "H^2"},
           {"(12)^4", "H^2"},
           {"1121", "T1 H^-1 T2^-1 T1^-1"},
           {"1221", "T2^-1 T1^-1"},
           {"1122", "T1 H^-1 T2^-1"},
           {"2121", "T2 T1 H^-1 T2^-1 T1^-1"},
           {"2211", "T2 H T1^-1"},
           {"2122", "T2 T1 H^-1 T2^-1"},
           {"1211", "H T1^-1"},
           {"2112", "T2 T1"},
           {"1222", "T2^-1"},
           {"2212", "T2 H"},
           {"2221", "T1^-1"},
           {"2", "T2 1"},
           {"22", "T2 H T1^-1 11"},
           {"211", "T2 111"},
           {"12", "H T1^-1 11"},
           {"112", "T1 H^-1 T2^-1 T1^-1 111"},
           {"221", "T2 H T1^-1 111"},
           {"21", "T2 11"},
           {"121", "H T1^-1 111"},
           {"122", "T2^-1 T1^-1 111"},
           {"2121", "H"},
           {"H T1", "T1 H"},
           {"H T2", "T2 H"},
           {"T2 T1", "T1 T2 H^2"}}};
}

CaseData make_c26() {
  return {CaseTag::C26, word("2122"), word("2212"), word("121212"), 2, false, 6,
          words({"Id", "1", "2", "21", "22", "221"}),
          {{"T2^-1 T1^-1 T2 T1", "H^2"},
           {"(12)^6", "H^2"},
           {"1222", "H T2^-1 T1"},
           {"2221", "T1^-1 T2 H^-1"},
           {"1212", "H T2^-1 22"},
           {"2121", "T1 T2^-1 22"},
           {"1221", "H T2^-1 T1 T2^-1 22"},
           {"2222", "T1^-1 21"},
           {"12", "H T2^-1 21"},
           {"212", "T1 T2^-1 221"},
           {"121", "H T2^-1 2"},
           {"222", "T1^-1 T2 H^-1 1"},
           {"122", "H T2^-1 T1 T2^-1 221"},
           {"212121", "H"},
           {"H T1", "T1 H"},
           {"H T2", "T2 H"},
           {"T2 T1", "T1 T2 H^2"}}};
}

CaseData make_c36() {
  return {CaseTag::C36, word("1122"), word("2211"), word("1212"), 3, false, 6,
          words({"Id", "2", "22", "112", "221", "222"}),
          {{"T2^-1 T1^-1 T2 T1", "H^3"},
           {"(12)^6", "H^3"},
           {"1221", "T2^-1 T1^-1"},
           {"2112", "T1 T2 H^2"},
           {"2121", "H"},
           {"1121", "T2^-1 H 2"},
           {"2122", "H 112"},
           {"2222", "T1^-1 11"},
           {"1211", "H^-1 T2^-1 T1^-1 2"},
           {"2212", "T2 112", 1},
           {"2212", "T2^2 112", 1},
           {"2212", "T1 112", 1},
           {"1222", "T2^-1 H^-1 121"},
           {"2221", "T2 H T1^-1 112"},
           {"1", "T2^-1 22"},
           {"21", "H T1 222"},
           {"211", "H T1 T2 H T1^-1 112"},
           {"11", "T2^-1 221"},
           {"121", "H T1^-1 112"},
           {"12", "T2^-1 222"},
           {"122", "T2^-1 T1^-1 T2^-1 221"},
           {"H T1", "T1 H"},
           {"H T2", "T2 H"},
           {"T2 T1", "T1 T2 H^3"}}};
}

}  // namespace

const CaseData& case_data(CaseTag tag) {
  static const std::map<CaseTag, CaseData> table = {
      {CaseTag::C23, make_c23()}, {CaseTag::C24, make_c24()},
      {CaseTag::C44, make_c44()}, {CaseTag::C26, make_c26()},
      {CaseTag::C36, make_c36()}};
  return table.at(tag);
}

double nu_coefficient(CaseTag tag) {
  switch (tag) {
    case CaseTag::C23: return 96 * kSqrt3;
    case CaseTag::C24: return 64;
    case CaseTag::C44: return 16;
    case CaseTag::C26: return 16 * kSqrt3;
    case CaseTag::C36: return 8 * kSqrt3;
  }
  return 0;
}

Translations closed_forms(CaseTag tag, double r, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double rc = r * c, r2c2 = r * r * c * c, r2sc = r * r * s * c;
  const cd i(0, 1);
  Translations t{};
  switch (tag) {
    case CaseTag::C23:
      t.v1 = 4 * kSqrt3 * rc * i;
      t.t1 = 32 * kSqrt3 * r2c2;
      t.v2 = 2 * rc * (3.0 + kSqrt3 * i);
      t.t2 = 24 * r2sc - 8 * kSqrt3 * r2c2;
      break;
    case CaseTag::C24:
      t.v1 = 4 * rc * i;
      t.t1 = 16 * r2c2;
      t.v2 = 4 * rc;
      t.t2 = 16 * r2sc;
      break;
    case CaseTag::C44:
      t.v1 = 2 * rc * (1.0 + i);
      t.t1 = 8 * r2sc;
      t.v2 = -2 * rc * (1.0 - i);
      t.t2 = -8 * r2sc;
      break;
    case CaseTag::C26:
      t.v1 = 2 * rc * (1.0 + kSqrt3 * i);
      t.t1 = 8 * kSqrt3 * r2c2 + 8 * r2sc;
      t.v2 = -2 * rc * (1.0 - kSqrt3 * i);
      t.t2 = 8 * kSqrt3 * r2c2 - 8 * r2sc;
      break;
    case CaseTag::C36:
      t.v1 = rc * (3.0 + kSqrt3 * i);
      t.t1 = 12 * r2sc;
      t.v2 = -rc * (3.0 - kSqrt3 * i);
      t.t2 = -12 * r2sc;
      break;
  }
  t.nu = nu_coefficient(tag) * r2c2;
  return t;
}

HMatrixd eval_expr(const std::string& expr, const CaseData& data,
                   const TriangleConfig& c) {
  static const std::regex named(R"((T1|T2|H)(\^(-?\d+))?)");
  static const std::regex paren(R"(\(([123]+)\)\^(-?\d+))");
  static const std::regex digits(R"([123]+)");
  HMatrixd m = HMatrixd::Identity();
  std::istringstream in(expr);
  std::string tok;
  std::smatch g;
  while (in >> tok) {
    if (std::regex_match(tok, g, named)) {
      const Word& w = g[1] == "T1" ? data.T1 : g[1] == "T2" ? data.T2 : data.H;
      const int e = g[3].matched ? std::stoi(g[3]) : 1;
      m = m * proj_power(eval_word(w, c), e);
    } else if (std::regex_match(tok, g, paren)) {
      m = m * proj_power(eval_word(parse_word(g[1]), c), std::stoi(g[2]));
    } else if (std::regex_match(tok, digits)) {
      m = m * eval_word(parse_word(tok), c);
    } else {
      throw Error(ErrorKind::Parse, "bad token '" + tok + "' in relation");
    }
  }
  return m;
}

RelationReport verify_relations(CaseTag tag, const TriangleConfig& c, double tol) {
  const CaseData& d = case_data(tag);
  RelationReport rep;
  rep.tag = tag;
  std::map<int, RelationReport::Group> groups;
  for (const auto& id : d.identities) {
    const HMatrixd lhs = eval_expr(id.lhs, d, c);
    const HMatrixd rhs = eval_expr(id.rhs, d, c);
    RelationResult r{id.lhs, id.rhs, id.variant, proj_residual(lhs, rhs), false};
    r.holds = r.residual <= tol;
    if (id.variant == 0) {
      rep.ok = rep.ok && r.holds;
    } else {
      auto& grp = groups[id.variant];
      grp.variant = id.variant;
      grp.lhs = id.lhs;
      if (r.holds) grp.holding.push_back(id.rhs);
    }
    rep.results.push_back(r);
  }
  for (auto& [k, grp] : groups) {
    rep.ok = rep.ok && grp.holding.size() == 1;
    rep.groups.push_back(grp);
  }
  return rep;
}

PlanarMap planar_generator(int gen, const TriangleConfig& c) {
  if (gen != 1 && gen != 2)
    throw Error(ErrorKind::NotInE, "only iota1 and iota2 fix infinity");
  const cd mu = root_of_unity<double>(c.order(gen));
  const cd phi = gen == 1 ? c.phi1 : c.phi2;
  return {mu, (1.0 - mu) * phi};
}

PlanarMap planar_map(const Word& w, const TriangleConfig& c) {
  PlanarMap f;
  for (const Syllable& s : w) {
    const PlanarMap j = planar_generator(s.gen, c);
    const int n = c.order(s.gen);
    for (int e = ((s.exp % n) + n) % n; e > 0; --e) f = f.compose(j);
  }
  return f;
}

namespace {

struct LatticeBasis {
  HeisPointd T1, T2;
  double nu;
};

LatticeBasis lattice_basis(const CaseData& d, const TriangleConfig& c) {
  const auto a = classify_isometry(eval_word(d.T1, c));
  const auto b = classify_isometry(eval_word(d.T2, c));
  const auto h = classify_isometry(eval_word(d.H, c));
  if (a.kind != IsometryClass<double>::HeisTranslation ||
      b.kind != IsometryClass<double>::HeisTranslation ||
      h.kind != IsometryClass<double>::VerticalTranslation)
    throw Error(ErrorKind::InternalInconsistency,
                "T1, T2, H do not evaluate to the expected translations");
  return {HeisPointd::finite(a.xi, a.nu), HeisPointd::finite(b.xi, b.nu), h.nu};
}

long integral(double v, const char* what) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-6) {
    std::ostringstream os;
    os << what << " = " << v << " is not an integer";
    throw Error(ErrorKind::NoLatticeSolution, os.str());
  }
  return static_cast<long>(r);
}

}  // namespace

NormalForm normal_form(const Word& w, CaseTag tag, const TriangleConfig& c) {
  for (const Syllable& s : w)
    if (s.gen == 3) throw Error(ErrorKind::NotInE, "word contains iota3");
  const CaseData& d = case_data(tag);
  const PlanarMap f = planar_map(w, c);

  NormalForm nf;
  nf.w = -1;
  for (std::size_t k = 0; k < d.remainders.size(); ++k)
    if (std::abs(planar_map(d.remainders[k], c).lambda - f.lambda) < 1e-6)
      nf.w = static_cast<int>(k);
  if (nf.w < 0)
    throw Error(ErrorKind::NoLatticeSolution, "no remainder with matching rotation");

  const HMatrixd m = eval_word(w, c) * proj_inverse(eval_word(d.remainders[nf.w], c));
  const auto tr = classify_isometry(m);
  if (tr.kind == IsometryClass<double>::Other)
    throw Error(ErrorKind::NoLatticeSolution, "stripped word is not a translation");

  const LatticeBasis b = lattice_basis(d, c);
  Eigen::Matrix2d A;
  A << b.T1.zeta.real(), b.T2.zeta.real(), b.T1.zeta.imag(), b.T2.zeta.imag();
  const Eigen::Vector2d xy = A.partialPivLu().solve(Eigen::Vector2d(tr.xi.real(), tr.xi.imag()));
  nf.x = integral(xy(0), "x");
  nf.y = integral(xy(1), "y");
  const HeisPointd base = heis_mul(heis_pow(b.T1, nf.x), heis_pow(b.T2, nf.y));
  nf.n = integral((tr.nu - base.nu) / b.nu, "n");
  return nf;
}

HMatrixd eval_normal_form(const NormalForm& nf, CaseTag tag, const TriangleConfig& c) {
  const CaseData& d = case_data(tag);
  return proj_power(eval_word(d.T1, c), static_cast<int>(nf.x)) *
         proj_power(eval_word(d.T2, c), static_cast<int>(nf.y)) *
         proj_power(eval_word(d.H, c), static_cast<int>(nf.n)) *
         eval_word(d.remainders.at(nf.w), c);
}

std::vector<VerticalHit> vertical_translations(CaseTag tag, const TriangleConfig& c,
                                               int max_len) {
  const CaseData& d = case_data(tag);
  const double nu = classify_isometry(eval_word(d.H, c)).nu;
  std::vector<VerticalHit> out;
  for (const Word& w : enumerate_words({1, 2}, max_len, orders_of(c))) {
    if (w.empty()) continue;
    const auto cls = classify_isometry(eval_word(w, c));
    if (cls.kind == IsometryClass<double>::VerticalTranslation)
      out.push_back({w, cls.nu / nu});
  }
  return out;
}

bool vertical_subgroup_check(CaseTag tag, const TriangleConfig& c, int max_len) {
  for (const auto& hit : vertical_translations(tag, c, max_len))
    if (std::abs(hit.multiple - std::round(hit.multiple)) >
        1e-6 * std::max(1.0, std::abs(hit.multiple)))
      return false;
  return true;
}

std::vector<TranslationCheck> check_translations(CaseTag tag, const TriangleConfig& c) {
  const CaseData& d = case_data(tag);
  const Translations tr = closed_forms(tag, c.r1, c.theta);
  const struct {
    const char* name;
    const Word& w;
    cd xi;
    double t;
  } rows[] = {{"T1", d.T1, tr.v1, tr.t1}, {"T2", d.T2, tr.v2, tr.t2}, {"H", d.H, 0.0, tr.nu}};
  std::vector<TranslationCheck> out;
  for (const auto& row : rows) {
    TranslationCheck k{row.name, row.w, row.xi, 0.0, row.t, 0.0, 0.0, false};
    const auto cls = classify_isometry(eval_word(row.w, c));
    k.is_translation = cls.kind != IsometryClass<double>::Other;
    k.measured_xi = cls.xi;
    k.measured_t = cls.nu;
    const double scale = std::max({1.0, std::abs(row.xi), std::abs(row.t)});
    k.rel_error = std::max(std::abs(cls.xi - row.xi), std::abs(cls.nu - row.t)) / scale;
    out.push_back(k);
  }
  return out;
}

}  // namespace ultrapar
