#include "ultrapar/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>

#include "CLI11.hpp"
#include "ultrapar/report.hpp"

namespace ultrapar {

namespace {

struct RunConfig {
  std::string type;
  double alpha = std::numbers::pi;
  std::optional<double> m;
  std::string m_range = "0:3";
  std::string alpha_range = "0:6.283185307179586";
  std::string res = "200x200";
  int max_len = 6;
  std::string format;
  std::string out;
  double tol = kProjTol;
};

double to_real(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw Error(ErrorKind::Parse, std::string("bad ") + what + ": '" + s + "'");
  return v;
}

std::pair<double, double> parse_range(const std::string& s, const char* what) {
  const auto k = s.find(':');
  if (k == std::string::npos)
    throw Error(ErrorKind::Parse, std::string(what) + " must look like a:b");
  const double a = to_real(s.substr(0, k), what), b = to_real(s.substr(k + 1), what);
  if (!(b > a)) throw Error(ErrorKind::Parse, std::string(what) + " must be non-empty");
  return {a, b};
}

std::pair<int, int> parse_res(const std::string& s) {
  const auto k = s.find('x');
  if (k == std::string::npos) throw Error(ErrorKind::Parse, "--res must look like NxM");
  const double a = to_real(s.substr(0, k), "--res"), b = to_real(s.substr(k + 1), "--res");
  if (a != std::floor(a) || b != std::floor(b) || a < 2 || b < 2 || a > 1e5 || b > 1e5)
    throw Error(ErrorKind::Parse, "--res needs integers >= 2");
  return {int(a), int(b)};
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + cfg.out + "' for writing");
  f << text;
  if (!f) throw std::runtime_error("write to '" + cfg.out + "' failed");
}

struct Target {
  CaseTag tag;
  double m;
};

Target target(const RunConfig& cfg) {
  const TriangleType t = parse_type(cfg.type);
  return {case_of(t), cfg.m.value_or(t.m1)};
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Target t = target(cfg);
  const TriangleConfig c = case_config(t.tag, t.m, cfg.alpha);
  const RelationReport rep = verify_relations(t.tag, c, cfg.tol);
  const auto tr = check_translations(t.tag, c);
  bool ok = rep.ok;
  for (const auto& k : tr) ok = ok && k.is_translation && k.rel_error <= cfg.tol;
  emit(cfg, verify_json(rep, tr, t.m, cfg.alpha, cfg.tol, ok), out);
  return ok ? kExitOk : kExitFailure;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Target t = target(cfg);
  const Classification c = classify(t.tag, t.m, cfg.alpha);
  out << verdict_name(c.verdict) << "\n";
  emit(cfg, classify_json(t.tag, t.m, cfg.alpha, c), out);
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const CaseTag tag = case_of(parse_type(cfg.type));
  SweepSpec spec;
  std::tie(spec.m_lo, spec.m_hi) = parse_range(cfg.m_range, "--m-range");
  std::tie(spec.a_lo, spec.a_hi) = parse_range(cfg.alpha_range, "--alpha-range");
  std::tie(spec.res_m, spec.res_a) = parse_res(cfg.res);
  const SweepGrid g = sweep(tag, spec);
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  emit(cfg, fmt == "json" ? sweep_json(g) : fmt == "svg" ? sweep_svg(g) : sweep_csv(g), out);
  return kExitOk;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_len < 0 || cfg.max_len > kMaxLenCap)
    throw Error(ErrorKind::CapExceeded,
                "--max-len must lie in [0, " + std::to_string(kMaxLenCap) + "]");
  const Target t = target(cfg);
  const TriangleConfig c = case_config(t.tag, t.m, cfg.alpha);
  const OrbitPlot p{t.tag, t.m, cfg.alpha, cfg.max_len,
                    planar_orbit_bruteforce(t.tag, c, cfg.max_len)};
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  emit(cfg, fmt == "json" ? orbit_json(p) : fmt == "svg" ? orbit_svg(p) : orbit_csv(p), out);
  err << "points: " << p.points.size() << "\n";
  return kExitOk;
}

int cmd_lattice_info(const RunConfig& cfg, std::ostream& out) {
  const Target t = target(cfg);
  emit(cfg, lattice_info_json(t.tag, case_config(t.tag, t.m, cfg.alpha)), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ultra-parallel complex hyperbolic triangle groups"};
  app.name("ultrapar");
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "triangle type [m,m,0;n1,n2,2]")->required();
    sub->add_option("--tol", cfg.tol, "projective tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out, "output path (default stdout)");
  };
  auto add_point = [&cfg](CLI::App* sub) {
    sub->add_option("--alpha", cfg.alpha, "angular invariant in (0, 2pi)");
    sub->add_option("--m", cfg.m, "overrides the distance in --type");
  };

  CLI::App* verify = app.add_subcommand("verify", "check relation tables and translations");
  add_common(verify);
  add_point(verify);
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  CLI::App* cls = app.add_subcommand("classify", "discreteness verdict with certificate");
  add_common(cls);
  add_point(cls);
  cls->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  CLI::App* sw = app.add_subcommand("sweep", "classify a grid in the (m, alpha) plane");
  add_common(sw);
  sw->add_option("--m-range", cfg.m_range, "a:b");
  sw->add_option("--alpha-range", cfg.alpha_range, "a:b");
  sw->add_option("--res", cfg.res, "NxM cells (m by alpha)");
  sw->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json", "svg"}));

  CLI::App* orb = app.add_subcommand("orbit", "orbit of 0 under the planar rotations");
  add_common(orb);
  add_point(orb);
  orb->add_option("--max-len", cfg.max_len, "maximum syllables");
  orb->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json", "svg"}));

  CLI::App* li = app.add_subcommand("lattice-info", "translation lattice data");
  add_common(li);
  add_point(li);
  li->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(cfg, out);
    if (*cls) return cmd_classify(cfg, out);
    if (*sw) return cmd_sweep(cfg, out);
    if (*orb) return cmd_orbit(cfg, out, err);
    return cmd_lattice_info(cfg, out);
  } catch (const Error& e) {
    err << "error [" << kind_name(e.kind()) << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInconsistency ? kExitFailure : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace ultrapar
