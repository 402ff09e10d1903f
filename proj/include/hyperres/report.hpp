#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperres/family.hpp"
#include "hyperres/resilience.hpp"
#include "hyperres/sunflower.hpp"

namespace hyperres {

struct SunflowerScan {
  int size = 0;
  std::optional<PseudoSunflower> witness;
  friend bool operator==(const SunflowerScan&, const SunflowerScan&) = default;
};

/// |F| against a known or conjectured bound on m(k, ν).
struct BoundComparison {
  std::string formula;
  std::string value;  ///< exact rational
  bool within = true;
  std::string note;
  friend bool operator==(const BoundComparison&,
                         const BoundComparison&) = default;
};

struct AnalysisReport {
  int k = 0;
  int n = 0;
  std::size_t size = 0;
  int nu = 0;
  std::vector<Mask> matching;
  int tau = 0;
  Mask cover = 0;
  /// Absent for the empty family.
  std::optional<ResilienceReport> resilience;
  int intersection_level = 0;
  std::vector<SunflowerScan> sunflowers;
  /// Filled only when F is (k-1)-resilient with ν >= 1.
  std::vector<BoundComparison> bounds;

  friend bool operator==(const AnalysisReport&,
                         const AnalysisReport&) = default;
};

/// Everything recomputable about F. Pseudo sunflowers are scanned at the
/// requested sizes, or at kν+1 when none are given and ν >= 1.
AnalysisReport analyze(const KFamily& f, std::span<const int> sunflower_sizes = {});

nlohmann::json to_json(const AnalysisReport& r);
/// Inverse of to_json. Throws ParseError(kBadJson) on malformed input.
AnalysisReport report_from_json(const nlohmann::json& j);

/// Plain-text rendering with the same numbers as the JSON form.
std::string format_report(const AnalysisReport& r);

}  // namespace hyperres
