#pragma once

#include <string>
#include <vector>

#include "ultrapar/heisenberg.hpp"
#include "ultrapar/word.hpp"

namespace ultrapar {

// One printed identity lhs = rhs. Entries sharing a nonzero `variant`
// are competing readings of the same printed line.
struct RelationIdentity {
  std::string lhs;
  std::string rhs;
  int variant = 0;
};

struct CaseData {
  CaseTag tag;
  Word T1, T2, H;
  int H_power;        // commutator = H^H_power
  bool t1_first;      // true: [T1,T2] = H^p, false: [T2,T1] = H^p
  int k12;            // (iota1 iota2)^k12 = H^H_power
  std::vector<Word> remainders;
  std::vector<RelationIdentity> identities;
};

const CaseData& case_data(CaseTag tag);

// Printed translation parts of T1, T2 and H.
struct Translations {
  cd v1, v2;
  double t1, t2, nu;
};
Translations closed_forms(CaseTag tag, double r, double theta);
double nu_coefficient(CaseTag tag);  // nu = coefficient * r^2 cos^2(theta)

// Measured translation of T1, T2 or H against its closed form.
struct TranslationCheck {
  std::string name;
  Word word;
  cd expected_xi, measured_xi;
  double expected_t, measured_t;
  double rel_error;  // max component error / max(1, |xi|, |t|)
  bool is_translation;
};
std::vector<TranslationCheck> check_translations(CaseTag tag, const TriangleConfig& c);

// Tokens separated by spaces: T1, T2, H with optional ^k, (12)^k, or a
// digit word such as 221.
HMatrixd eval_expr(const std::string& expr, const CaseData& data,
                   const TriangleConfig& c);

struct RelationResult {
  std::string lhs, rhs;
  int variant;
  double residual;
  bool holds;
};

struct RelationReport {
  CaseTag tag;
  std::vector<RelationResult> results;
  // variant groups: exactly one reading must hold
  struct Group {
    int variant;
    std::string lhs;
    std::vector<std::string> holding;
  };
  std::vector<Group> groups;
  bool ok = true;
};

RelationReport verify_relations(CaseTag tag, const TriangleConfig& c,
                                double tol = kProjTol);

// z -> lambda z + shift on the complex plane
struct PlanarMap {
  cd lambda{1.0, 0.0};
  cd shift{0.0, 0.0};
  cd operator()(cd z) const { return lambda * z + shift; }
  // this after inner
  PlanarMap compose(const PlanarMap& inner) const {
    return {lambda * inner.lambda, lambda * inner.shift + shift};
  }
  bool is_identity(double tol = 1e-9) const {
    return std::abs(lambda - 1.0) < tol && std::abs(shift) < tol;
  }
};

PlanarMap planar_generator(int gen, const TriangleConfig& c);
PlanarMap planar_map(const Word& w, const TriangleConfig& c);

struct NormalForm {
  long x = 0, y = 0, n = 0;
  int w = 0;  // index into remainders
  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const Word& w, CaseTag tag, const TriangleConfig& c);
HMatrixd eval_normal_form(const NormalForm& nf, CaseTag tag, const TriangleConfig& c);

struct VerticalHit {
  Word word;
  double multiple;  // translation amount / nu
};
std::vector<VerticalHit> vertical_translations(CaseTag tag, const TriangleConfig& c,
                                               int max_len);
bool vertical_subgroup_check(CaseTag tag, const TriangleConfig& c, int max_len);

}  // namespace ultrapar
