#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "waringlab/report.hpp"

namespace waringlab {

struct SuiteOptions {
  std::uint64_t seed = 7;
  long max_coeff = Rng::kDefaultMaxCoeff;
  /// Overrides the per-suite sample budget where one applies (a43, q3).
  int samples = 0;
};

struct SuiteResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  long cases = 0;
  long failed = 0;
  /// Suite-specific counters.
  Json summary = Json::object();
  /// Records of the first failing cases.
  Json failures = Json::array();
  std::vector<std::string> notes;
};

/// a3, a2, q1, q2, q3, a45, a43, i1.
const std::vector<std::string>& suite_ids();
/// Throws PreconditionError listing the known ids for an unknown one.
std::string suite_anchor(std::string_view id);
SuiteResult run_suite(std::string_view id, const SuiteOptions& options = {});

Json to_json(const SuiteResult& r);

/// Anchors of the single-shot CLI commands.
namespace anchors {
inline constexpr const char* kRankProfile = "r(F) = c(F) if the minimal apolar form is squarefree, else r(F) = d + 2 - c(F)";
inline constexpr const char* kNonUniqueness = "W_{F,t} = intersection of <S> over irredundant S of size t";
inline constexpr const char* kSpanPair = "{q} = <S> ∩ <A>, S and A irredundant of size r/2 + 1";
}  // namespace anchors

}  // namespace waringlab
