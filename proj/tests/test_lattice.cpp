#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "ultrapar/lattice.hpp"

using namespace ultrapar;
using oracle::kPi;
using oracle::kS3;
using oracle::uniform;

namespace {

TriangleConfig random_config(CaseTag tag) {
  return case_config(tag, uniform(0.1, 3), uniform(0.1, 2 * kPi - 0.1));
}

HMatrixd ev(const Word& w, const TriangleConfig& c) { return eval_word(w, c); }

}  // namespace

TEST_CASE("case tables") {
  const CaseData& c23 = case_data(CaseTag::C23);
  CHECK(format_word(c23.T1) == "21212");
  CHECK(format_word(c23.T2) == "12212");
  CHECK(format_word(c23.H) == "121212121212");
  CHECK(c23.remainders.size() == 6);
  const CaseData& c44 = case_data(CaseTag::C44);
  CHECK(format_word(c44.T1) == "1112");
  CHECK(format_word(c44.H) == "1212");
  CHECK(c44.H_power == 2);
  const CaseData& c36 = case_data(CaseTag::C36);
  CHECK(format_word(c36.T2) == "2211");
  CHECK(c36.H_power == 3);
  CHECK(format_word(c36.remainders[3]) == "112");
  CHECK(case_data(CaseTag::C24).remainders.size() == 4);
  CHECK(case_data(CaseTag::C26).remainders.size() == 6);
}

TEST_CASE("closed forms agree with an independent transcription") {
  for (CaseTag tag : kAllCases) {
    const auto [n1, n2] = case_orders(tag);
    for (int k = 0; k < 20; ++k) {
      const double r = uniform(1, 3), th = uniform(-1.5, 1.5);
      const Translations t = closed_forms(tag, r, th);
      const oracle::Forms o = oracle::forms(n1, n2, r, th);
      CHECK(std::abs(t.v1 - o.v1) < 1e-12 * r);
      CHECK(std::abs(t.v2 - o.v2) < 1e-12 * r);
      CHECK(std::abs(t.t1 - o.t1) < 1e-11 * r * r);
      CHECK(std::abs(t.t2 - o.t2) < 1e-11 * r * r);
      CHECK(std::abs(t.nu - o.nu) < 1e-11 * r * r);
    }
  }
  CHECK(closed_forms(CaseTag::C36, 1, 0).nu == doctest::Approx(8 * kS3).epsilon(1e-15));
}

TEST_CASE("T1, T2 and H evaluate to the closed-form translations") {
  for (CaseTag tag : kAllCases) {
    const auto [n1, n2] = case_orders(tag);
    const CaseData& d = case_data(tag);
    for (int k = 0; k < 20; ++k) {
      const TriangleConfig c = random_config(tag);
      const oracle::Forms o = oracle::forms(n1, n2, c.r1, c.theta);
      const double scale = std::max({1.0, o.nu, std::abs(o.v1), std::abs(o.v2)});
      const auto a = classify_isometry(ev(d.T1, c));
      const auto b = classify_isometry(ev(d.T2, c));
      const auto h = classify_isometry(ev(d.H, c));
      REQUIRE(a.kind == IsometryClass<double>::HeisTranslation);
      REQUIRE(b.kind == IsometryClass<double>::HeisTranslation);
      REQUIRE(h.kind == IsometryClass<double>::VerticalTranslation);
      CHECK(std::abs(a.xi - o.v1) < 1e-9 * scale);
      CHECK(std::abs(a.nu - o.t1) < 1e-9 * scale);
      CHECK(std::abs(b.xi - o.v2) < 1e-9 * scale);
      CHECK(std::abs(b.nu - o.t2) < 1e-9 * scale);
      CHECK(std::abs(h.nu - o.nu) < 1e-9 * scale);
      for (const TranslationCheck& t : check_translations(tag, c)) {
        CHECK(t.is_translation);
        CHECK(t.rel_error < 1e-9);
      }
    }
  }
}

TEST_CASE("C23 T1 at a sample point") {
  const TriangleConfig c = case_config(CaseTag::C23, 2 * std::acosh(1.5), 2.0);
  const auto a = classify_isometry(ev(case_data(CaseTag::C23).T1, c));
  const double cs = std::cos(c.theta);
  CHECK(std::abs(a.xi - cd(0, 4 * 1.5 * kS3 * cs)) < 1e-9);
  CHECK(a.nu == doctest::Approx(32 * kS3 * 2.25 * cs * cs).epsilon(1e-10));
}

TEST_CASE("commutator relations") {
  for (CaseTag tag : kAllCases) {
    const CaseData& d = case_data(tag);
    for (int k = 0; k < 20; ++k) {
      const TriangleConfig c = random_config(tag);
      const HMatrixd t1 = ev(d.T1, c), t2 = ev(d.T2, c), h = ev(d.H, c);
      const HMatrixd p = d.t1_first ? t1 : t2, q = d.t1_first ? t2 : t1;
      const HMatrixd comm = proj_inverse(p) * proj_inverse(q) * p * q;
      CHECK(proj_equal(comm, proj_power(h, d.H_power)));
      CHECK(oracle::proj_gap(comm, proj_power(h, d.H_power)) < 1e-9);
      CHECK(proj_equal(proj_power(HMatrixd(c.iota1 * c.iota2), d.k12),
                       proj_power(h, d.H_power)));
    }
  }
}

TEST_CASE("every printed identity holds") {
  for (CaseTag tag : kAllCases)
    for (int k = 0; k < 20; ++k) {
      const TriangleConfig c = random_config(tag);
      const RelationReport rep = verify_relations(tag, c);
      CHECK(rep.ok);
      for (const auto& r : rep.results)
        if (r.variant == 0) CHECK_MESSAGE(r.holds, case_name(tag), " ", r.lhs, " = ", r.rhs);
    }
}

TEST_CASE("variant lines are adjudicated") {
  const RelationReport a = verify_relations(CaseTag::C23, random_config(CaseTag::C23));
  REQUIRE(a.groups.size() == 1);
  CHECK(a.groups[0].lhs == "2122");
  CHECK(a.groups[0].holding == std::vector<std::string>{"T1 T2^-1 1"});
  const RelationReport b = verify_relations(CaseTag::C36, random_config(CaseTag::C36));
  REQUIRE(b.groups.size() == 1);
  CHECK(b.groups[0].holding == std::vector<std::string>{"T2 112"});
}

TEST_CASE("eval_expr rejects bad tokens") {
  const TriangleConfig c = random_config(CaseTag::C24);
  CHECK_THROWS_AS(eval_expr("T3", case_data(CaseTag::C24), c), Error);
  CHECK(proj_equal(eval_expr("(12)^4", case_data(CaseTag::C24), c),
                   ev(case_data(CaseTag::C24).H, c)));
}

TEST_CASE("planar maps agree with direct rotation") {
  for (CaseTag tag : kAllCases) {
    const auto [n1, n2] = case_orders(tag);
    const TriangleConfig c = random_config(tag);
    for (const Word& w : enumerate_words({1, 2}, 4, orders_of(c))) {
      std::string digits;
      for (const auto& s : w) digits.append(std::size_t(s.exp), char('0' + s.gen));
      const cd z = oracle::cuniform(2);
      CHECK(std::abs(planar_map(w, c)(z) - oracle::planar(digits, n1, n2, c.phi1, c.phi2, z)) <
            1e-12);
    }
  }
  CHECK_THROWS_AS(planar_generator(3, case_config(CaseTag::C23, 1, 1)), Error);
}

TEST_CASE("normal_form examples") {
  const TriangleConfig c = random_config(CaseTag::C23);
  const CaseData& d = case_data(CaseTag::C23);
  CHECK(normal_form(d.T1, CaseTag::C23, c) == NormalForm{1, 0, 0, 0});
  CHECK(normal_form(d.T2, CaseTag::C23, c) == NormalForm{0, 1, 0, 0});
  CHECK(normal_form(d.H, CaseTag::C23, c) == NormalForm{0, 0, 1, 0});
  const NormalForm nf = normal_form(parse_word("1212"), CaseTag::C23, c);
  CHECK(format_word(d.remainders[nf.w]) == "22");
  CHECK(nf.x == -1);
  CHECK(nf.y == 1);
  CHECK_THROWS_AS(normal_form(parse_word("13"), CaseTag::C23, c), Error);
}

TEST_CASE("normal_form round trip up to length 8") {
  for (CaseTag tag : kAllCases) {
    const TriangleConfig c = random_config(tag);
    int failures = 0;
    for (const Word& w : enumerate_words({1, 2}, 8, orders_of(c))) {
      const NormalForm nf = normal_form(w, tag, c);
      if (!proj_equal(eval_normal_form(nf, tag, c), ev(w, c))) ++failures;
    }
    CHECK_MESSAGE(failures == 0, case_name(tag));
  }
}

TEST_CASE("random long words round trip") {
  for (CaseTag tag : kAllCases) {
    const TriangleConfig c = random_config(tag);
    const auto pool = enumerate_words({1, 2}, 1, orders_of(c));
    for (int k = 0; k < 50; ++k) {
      Word w;
      for (int i = 0; i < 10; ++i) w = concat(w, pool[1 + std::size_t(k * 31 + i * 17) % (pool.size() - 1)]);
      w = reduce_word(w, orders_of(c));
      CHECK(proj_equal(eval_normal_form(normal_form(w, tag, c), tag, c), ev(w, c)));
    }
  }
}

TEST_CASE("vertical translations are powers of H") {
  CHECK(vertical_subgroup_check(CaseTag::C23, random_config(CaseTag::C23), 12));
  CHECK(vertical_subgroup_check(CaseTag::C24, random_config(CaseTag::C24), 0));
  const auto hits = vertical_translations(CaseTag::C44, random_config(CaseTag::C44), 8);
  CHECK(vertical_subgroup_check(CaseTag::C44, random_config(CaseTag::C44), 8));
  bool found = false;
  for (const auto& h : hits)
    if (format_word(h.word) == "1212") found = std::abs(h.multiple - 1) < 1e-9;
  CHECK(found);
}
