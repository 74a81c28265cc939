#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracle.hpp"
#include "ultrapar/discreteness.hpp"
#include "ultrapar/heisenberg.hpp"

using namespace ultrapar;
using oracle::kPi;
using oracle::kS3;
using oracle::uniform;

namespace {

double m0(CaseTag tag) {
  switch (tag) {
    case CaseTag::C23: return std::log(3.0);
    case CaseTag::C24:
    case CaseTag::C44: return std::log(3 + 2 * std::sqrt(2.0));
    default: return std::log(7 + 4 * kS3);
  }
}

double cos_bound(CaseTag tag) { return tag == CaseTag::C23 ? -0.5 : -kS3 / 2; }

double D(CaseTag tag) {
  switch (tag) {
    case CaseTag::C23: return 24 * kS3;
    case CaseTag::C24: return 16;
    case CaseTag::C44: return 4;
    case CaseTag::C26: return 4 * kS3;
    case CaseTag::C36: return 2 * kS3;
  }
  return 0;
}

}  // namespace

TEST_CASE("vertical_shift_ok") {
  CHECK(vertical_shift_ok(CaseTag::C23, std::log(3.0), 2 * kPi / 3));
  CHECK(closed_forms(CaseTag::C23, std::cosh(std::log(3.0) / 2), kPi / 6).nu ==
        doctest::Approx(96 * kS3).epsilon(1e-12));
  CHECK_FALSE(vertical_shift_ok(CaseTag::C44, 0, 1e-7));
  CHECK(vertical_shift_ok(CaseTag::C36, std::log(7 + 4 * kS3), kPi));
  CHECK(closed_forms(CaseTag::C36, 2, 0).nu == doctest::Approx(32 * kS3).epsilon(1e-14));
}

TEST_CASE("min_orbit_sq_direct") {
  CHECK(min_orbit_sq_direct(CaseTag::C23, 1, 0, 3) == doctest::Approx(3).epsilon(1e-12));
  CHECK(min_orbit_sq_direct(CaseTag::C44, 1, 0, 3) == doctest::Approx(2).epsilon(1e-12));
  for (CaseTag tag : kAllCases)
    for (double r : {1.5, 2.0, 3.7})
      CHECK(min_orbit_sq_direct(tag, r, 0) ==
            doctest::Approx(r * r * min_orbit_sq_direct(tag, 1, 0)).epsilon(1e-12));
  CHECK_THROWS_AS(min_orbit_sq_direct(CaseTag::C23, 1, 0, 0), Error);
}

TEST_CASE("planar_orbit_bruteforce") {
  const TriangleConfig c = case_config(CaseTag::C23, 0, kPi);
  const auto p0 = planar_orbit_bruteforce(CaseTag::C23, c, 0);
  REQUIRE(p0.size() == 1);
  CHECK(std::abs(p0[0]) == 0);
  const auto p1 = planar_orbit_bruteforce(CaseTag::C23, c, 1);
  CHECK(p1.size() == 4);
  bool has_two = false;
  for (const cd& z : p1) has_two = has_two || std::abs(z - 2.0) < 1e-12;
  CHECK(has_two);
}

TEST_CASE("orbit points lie on the lattice cosets") {
  for (CaseTag tag : kAllCases) {
    const auto [n1, n2] = case_orders(tag);
    for (int k = 0; k < 3; ++k) {
      const double m = k == 0 ? 0 : uniform(0.1, 2), a = k == 0 ? kPi : uniform(0.5, 5.8);
      const TriangleConfig c = case_config(tag, m, a);
      const oracle::Forms f = oracle::forms(n1, n2, c.r1, c.theta);
      std::vector<cd> bases;
      for (const Word& w : case_data(tag).remainders) bases.push_back(planar_map(w, c)(0.0));
      for (const cd& z : planar_orbit_bruteforce(tag, c, 6)) {
        double best = 1e300;
        for (const cd& p : bases) best = std::min(best, oracle::lattice_gap(z - p, f.v1, f.v2));
        CHECK(best < 1e-9 * std::max(1.0, std::abs(z)));
      }
    }
  }
}

TEST_CASE("orbit deduplication") {
  const TriangleConfig c = case_config(CaseTag::C44, 0.5, 2.5);
  const auto pts = planar_orbit_bruteforce(CaseTag::C44, c, 5);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(std::abs(pts[i] - pts[j]) > 1e-9);
}

TEST_CASE("exceptional_q") {
  CHECK(exceptional_q(1.0) == 3);
  CHECK(exceptional_q(std::sqrt(2.0)) == 4);
  CHECK(exceptional_q(2 * std::cos(kPi / 1000)) == 1000);
  CHECK(exceptional_q(0.9374) == 0);
  CHECK(exceptional_q(1.5) == 0);
  for (int k = 0; k < 2000; ++k) {
    const double s = uniform(0, 2);
    CHECK((exceptional_q(s) != 0) == oracle::exceptional_scan(s));
  }
}

TEST_CASE("shimizu_test") {
  CHECK(shimizu_test(2.5, 1) == ShimizuResult::Inconclusive);
  CHECK(shimizu_test(1.0, 1) == ShimizuResult::Inconclusive);
  CHECK(shimizu_test(0.9374, 1) == ShimizuResult::NonDiscrete);
  CHECK(shimizu_test(4.0, 2) == ShimizuResult::Inconclusive);
  CHECK_THROWS_AS(shimizu_test(0, 1), Error);
  CHECK_THROWS_AS(shimizu_test(1, -1), Error);
  // every s below 1 is non-exceptional
  for (int k = 1; k < 1000; ++k)
    CHECK(shimizu_test(k / 1000.0, 1) == ShimizuResult::NonDiscrete);
}

TEST_CASE("isometric_sphere_radius") {
  HMatrixd d = HMatrixd::Zero();
  d.diagonal() << -1, 1, -1;
  CHECK(isometric_sphere_radius(d) == 1.0);
  CHECK(isometric_sphere_radius(HMatrixd(cd(3, -2) * d)) == doctest::Approx(1).epsilon(1e-15));
  CHECK_THROWS_AS(isometric_sphere_radius(translation_matrix<double>({1, 2}, 3)), Error);
  try {
    isometric_sphere_radius(translation_matrix<double>(0, 1));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FixesInfinity);
  }
}

TEST_CASE("compression_certified") {
  CHECK(compression_certified(CaseTag::C23, std::log(3.0), kPi));
  CHECK_FALSE(compression_certified(CaseTag::C23, std::log(3.0) - 0.01, kPi));
  CHECK(compression_certified(CaseTag::C44, std::log(3 + 2 * std::sqrt(2.0)), kPi));
  CHECK(compression_certified(CaseTag::C23, std::log(3.0), 2 * kPi / 3));
  CHECK(compression_certified(CaseTag::C23, std::log(3.0), 4 * kPi / 3));
  CHECK(compression_certified(CaseTag::C26, std::log(7 + 4 * kS3), 5 * kPi / 6));
  CHECK_FALSE(compression_certified(CaseTag::C26, std::log(7 + 4 * kS3), 5 * kPi / 6 - 1e-6));
}

TEST_CASE("closed conditions over the plane") {
  for (CaseTag tag : kAllCases)
    for (int k = 0; k < 2000; ++k) {
      const double m = uniform(0, 4), a = uniform(1e-3, 2 * kPi - 1e-3);
      const bool expect = m >= m0(tag) && std::cos(a) <= cos_bound(tag);
      CHECK(compression_certified(tag, m, a) == expect);
    }
}

TEST_CASE("nondiscrete_by_case") {
  CHECK(nondiscrete_by_case(CaseTag::C23, 1, std::acos(0.99)) == ShimizuResult::NonDiscrete);
  CHECK(nondiscrete_by_case(CaseTag::C44, 1, std::acos(0.5)) == ShimizuResult::Inconclusive);
  // cos(alpha) = 1 - cos(pi/q)/(D cosh^2(m/2)) is exceptional
  for (CaseTag tag : kAllCases)
    for (int q : {3, 4, 7}) {
      const double m = 0.3, ch2 = std::cosh(m / 2) * std::cosh(m / 2);
      const double a = std::acos(1 - std::cos(kPi / q) / (D(tag) * ch2));
      CHECK(nondiscrete_by_case(tag, m, a) == ShimizuResult::Inconclusive);
    }
  CHECK(nondiscrete_D(CaseTag::C23) == doctest::Approx(24 * kS3).epsilon(1e-15));
  CHECK(nondiscrete_D(CaseTag::C36) == doctest::Approx(2 * kS3).epsilon(1e-15));
}

TEST_CASE("Shimizu and closed routes agree") {
  for (CaseTag tag : kAllCases)
    for (int k = 0; k < 10000; ++k) {
      const double m = uniform(0, 3), a = uniform(1e-4, 2 * kPi - 1e-4);
      const double x = D(tag) * std::cosh(m / 2) * std::cosh(m / 2) * (1 - std::cos(a));
      const bool expect = x < 1 && !oracle::exceptional_scan(2 * x);
      CHECK((nondiscrete_by_case(tag, m, a) == ShimizuResult::NonDiscrete) == expect);
    }
}

TEST_CASE("Shimizu input is the H translation and iota3") {
  for (CaseTag tag : kAllCases) {
    const TriangleConfig c = case_config(tag, 0.7, 0.4);
    CHECK(isometric_sphere_radius(c.iota3) == doctest::Approx(1).epsilon(1e-15));
    const auto h = classify_isometry(eval_word(case_data(tag).H, c));
    CHECK(h.nu == doctest::Approx(closed_forms(tag, c.r1, c.theta).nu).epsilon(1e-9));
    // s = nu / r_h^2 = 2 D r^2 (1 - cos alpha)
    CHECK(h.nu == doctest::Approx(2 * D(tag) * c.r1 * c.r1 * (1 - std::cos(0.4))).epsilon(1e-9));
  }
}

TEST_CASE("classify") {
  CHECK(classify(CaseTag::C23, 2.0, kPi).verdict == Verdict::DiscreteCertified);
  CHECK(classify(CaseTag::C23, 1.0, 0.1).verdict == Verdict::NonDiscrete);
  const Classification u = classify(CaseTag::C23, 0.5, kPi / 2);
  CHECK(u.verdict == Verdict::Unknown);
  CHECK_FALSE(u.cert.detail.empty());
  CHECK(u.cert.detail.find("m < ln 3") != std::string::npos);
  CHECK(classify(CaseTag::C23, 1e-3, kPi - 1e-4).verdict == Verdict::Unknown);
  CHECK_THROWS_AS(classify(CaseTag::C23, 1, 0), Error);
  CHECK_THROWS_AS(classify(CaseTag::C23, -1, 1), Error);
  const Classification n = classify(CaseTag::C24, 1.0, 0.05);
  CHECK(n.verdict == Verdict::NonDiscrete);
  CHECK(n.cert.s < 1);
  CHECK(verdict_name(Verdict::Unknown) == std::string("unknown"));
}

TEST_CASE("certificates are always populated") {
  for (CaseTag tag : kAllCases)
    for (int k = 0; k < 300; ++k) {
      const Classification c = classify(tag, uniform(0, 3), uniform(0.01, 6.27));
      CHECK_FALSE(c.cert.detail.empty());
      CHECK(c.cert.r_h > 0);
      if (c.verdict == Verdict::DiscreteCertified) CHECK(c.cert.gtable_pass);
      if (c.verdict == Verdict::NonDiscrete) CHECK((c.cert.s_below_two && !c.cert.exceptional));
    }
}

TEST_CASE("certification is monotone in m") {
  for (CaseTag tag : kAllCases)
    for (int k = 0; k < 200; ++k) {
      const double m = uniform(0, 3), a = uniform(0.01, 6.27);
      if (classify(tag, m, a).verdict != Verdict::DiscreteCertified) continue;
      CHECK(classify(tag, m + uniform(0, 2), a).verdict == Verdict::DiscreteCertified);
    }
}

TEST_CASE("certified parameters satisfy the orbit conditions") {
  for (CaseTag tag : kAllCases)
    for (int k = 0; k < 4; ++k) {
      const double m = m0(tag) + uniform(0, 1);
      const double amin = std::acos(cos_bound(tag));
      const double a = uniform(amin, 2 * kPi - amin);
      REQUIRE(compression_certified(tag, m, a));
      const TriangleConfig c = case_config(tag, m, a);
      CHECK(min_nontrivial_orbit_norm(tag, c, 6) >= 2 - 1e-9);
      CHECK(closed_forms(tag, c.r1, c.theta).nu >= 2);
    }
}

TEST_CASE("sweep") {
  SweepSpec s;
  s.m_lo = std::log(3.0);
  s.m_hi = 3;
  s.a_lo = 2 * kPi / 3;
  s.a_hi = 4 * kPi / 3;
  s.res_m = s.res_a = 2;
  const SweepGrid g = sweep(CaseTag::C23, s);
  CHECK(g.cells.size() == 4);
  for (const auto& c : g.cells) CHECK(c.verdict == Verdict::DiscreteCertified);

  SweepSpec bad;
  bad.res_m = 1;
  CHECK_THROWS_AS(sweep(CaseTag::C23, bad), Error);

  SweepSpec f;
  f.res_m = 30;
  f.res_a = 40;
  const SweepGrid a = sweep(CaseTag::C36, f), b = sweep(CaseTag::C36, f);
  CHECK(a.cells.size() == 1200);
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    CHECK(a.cells[k].verdict == b.cells[k].verdict);
    CHECK(a.cells[k].cert.detail == b.cells[k].cert.detail);
  }
  // row-major, alpha is the row
  CHECK(&a.at(3, 2) == &a.cells[2 * 30 + 3]);
}

TEST_CASE("sweep rows inside the discrete box are uniform") {
  SweepSpec s;
  s.res_m = s.res_a = 60;
  const SweepGrid g = sweep(CaseTag::C23, s);
  for (int j = 0; j < s.res_a; ++j)
    for (int i = 0; i < s.res_m; ++i)
      if (s.m_at(i) >= std::log(3.0) && std::cos(s.a_at(j)) <= -0.5)
        CHECK(g.at(i, j).verdict == Verdict::DiscreteCertified);
}
