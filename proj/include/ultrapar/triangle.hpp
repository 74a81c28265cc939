#pragma once

#include <array>
#include <string>
#include <utility>

#include "ultrapar/hermitian.hpp"

namespace ultrapar {

// [m1,m2,m3; n1,n2,n3]; only m3 = 0 is constructed.
struct TriangleType {
  double m1 = 0, m2 = 0, m3 = 0;
  int n1 = 2, n2 = 2, n3 = 2;
};

enum class CaseTag { C23, C24, C44, C26, C36 };

inline constexpr std::array<CaseTag, 5> kAllCases = {
    CaseTag::C23, CaseTag::C24, CaseTag::C44, CaseTag::C26, CaseTag::C36};

struct TriangleConfig {
  TriangleType type;
  double alpha = 0;
  double theta = 0;  // (pi - alpha) / 2
  double r1 = 1, r2 = 1;
  cd phi1, phi2;  // base points of the vertical chains C1, C2
  HVectord c1, c2, c3;
  HMatrixd iota1, iota2, iota3;
  // same generators in extended precision, for long products
  HMatrix<long double> iota1x, iota2x, iota3x;

  const HMatrixd& generator(int k) const;
  const HMatrix<long double>& generator_x(int k) const;
  int order(int k) const;
};

bool existence_check(double m1, double m2, double m3, double alpha);
bool admissible_orders(int n1, int n2);
TriangleConfig build_config(const TriangleType& type, double alpha);
double angular_invariant(const HVectord& c1, const HVectord& c2, const HVectord& c3);

CaseTag case_of(const TriangleType& type);
const char* case_name(CaseTag tag);
std::pair<int, int> case_orders(CaseTag tag);
TriangleType case_type(CaseTag tag, double m);
TriangleConfig case_config(CaseTag tag, double m, double alpha);

// "[m,m,0;n1,n2,2]", whitespace-insensitive
TriangleType parse_type(const std::string& s);

}  // namespace ultrapar
