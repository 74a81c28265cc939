#pragma once

#include <string>
#include <vector>

#include "ultrapar/discreteness.hpp"
#include "ultrapar/format.hpp"
#include "ultrapar/lattice.hpp"

namespace ultrapar {

inline constexpr const char* kSchema = "ultrapar/v1";

// Fills used for the three verdicts in sweep plots.
inline constexpr const char* kFillDiscrete = "#c8c8c8";
inline constexpr const char* kFillNonDiscrete = "#505050";
inline constexpr const char* kFillUnknown = "#ffffff";

std::string sweep_csv(const SweepGrid& g);
std::string sweep_json(const SweepGrid& g);
std::string sweep_svg(const SweepGrid& g);

std::string classify_json(CaseTag tag, double m, double alpha, const Classification& c);

std::string verify_json(const RelationReport& rep, const std::vector<TranslationCheck>& tr,
                        double m, double alpha, double tol, bool ok);

std::string lattice_info_json(CaseTag tag, const TriangleConfig& c);

struct OrbitPlot {
  CaseTag tag;
  double m, alpha;
  int max_len;
  std::vector<cd> points;
};

std::string orbit_csv(const OrbitPlot& p);
std::string orbit_json(const OrbitPlot& p);
std::string orbit_svg(const OrbitPlot& p);

}  // namespace ultrapar
