// Brute-force checks of the framework's theorems over bounded spaces.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tomex/explain.hpp"
#include "tomex/scenario.hpp"

namespace tomex::oracle {

struct TheoremReport {
  std::string id;
  std::string claim;
  std::size_t instances_checked = 0;
  /// Instances where the theorem's premise fails.
  std::size_t premise_excluded = 0;
  /// T1 only: engine explanations whose explanandum contradicts the theory,
  /// which classical abduction can never produce.
  std::size_t extra = 0;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

struct TheoremBounds {
  unsigned vocab_size = 3;
  unsigned max_literals = 3;
  unsigned max_seq_len = 2;
  /// Generated state pairs per kind (identical, permuted, random).
  unsigned pairs_per_kind = 12;
  std::uint32_t seed = 20231;
};

using NamedScenario = std::pair<std::string, Scenario>;

/// Dalal single-agent states without laws: classical abduction implies Expl.
TheoremReport verify_theorem1(const TheoremBounds& bounds = {});

/// Equivalent states (bounded check) have the same explanations.
TheoremReport verify_theorem2(const TheoremBounds& bounds = {});

/// Equivalence plus introspection of e_j gives i correct beliefs about j.
/// The equivalence premise uses a modal pool and `introspection_seq_len`
/// revision steps.
TheoremReport verify_theorem3(const TheoremBounds& bounds = {}, unsigned introspection_seq_len = 0);

/// Expl implies the possibility explanation when the reasoning premise
/// holds, for every agent of every scenario.
TheoremReport verify_theorem4(const std::vector<NamedScenario>& scenarios,
                              const TheoremBounds& bounds = {});

/// Adequacy and equal preference keys give equal optimal sets.
TheoremReport verify_theorem5(const std::vector<NamedScenario>& scenarios,
                              const TheoremBounds& bounds = {},
                              const PreferenceOrder& order = PreferenceOrder::parse("min_letters"),
                              unsigned pool_literals = 2);

std::vector<TheoremReport> verify_all(const std::vector<NamedScenario>& scenarios,
                                      const TheoremBounds& bounds = {});

std::string render_reports(const std::vector<TheoremReport>& reports);

}  // namespace tomex::oracle
