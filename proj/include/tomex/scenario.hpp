// Scenario documents: JSON descriptions of agents, vocabulary, laws and
// stratified beliefs, including what agents believe about each other.
//
//   {
//     "agents": ["mary", "bob"],
//     "vocabulary": ["rain", "wetFloor"],
//     "laws": ["rain -> wetFloor"],
//     "depth": 3,
//     "operator": "prioritized",            // or {"default": ..., "bob": "dalal"}
//     "beliefs": {"mary": [["rain"]]},
//     "nested": {"mary.bob": [["~rain"]]},
//     "queries": [{"formula": "B[mary] wetFloor", "expected": true}]
//   }
//
// A missing nested entry means the ignorant model (laws only), never a copy
// of the other agent's actual state.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tomex/formula.hpp"
#include "tomex/state.hpp"

namespace tomex {

struct ScenarioQuery {
  std::string text;
  Formula formula;
  std::optional<bool> expected;
};

struct Scenario {
  std::string description;
  std::vector<AgentId> agents;
  Vocabulary vocabulary;
  std::vector<Formula> laws;
  unsigned depth = 3;
  RevisionOperator default_operator = RevisionOperator::prioritized;
  std::map<AgentId, RevisionOperator> operators;  // per-agent overrides
  std::map<AgentId, StratifiedBase> beliefs;
  /// Keyed by agent path, e.g. {mary, bob} for "mary.bob".
  std::map<std::vector<AgentId>, StratifiedBase> nested;
  std::vector<ScenarioQuery> queries;

  RevisionOperator operator_of(const AgentId& agent) const;
  std::shared_ptr<const Frame> frame() const;
};

Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

struct BuildResult {
  StateVector vector;
  std::vector<std::string> warnings;
};

/// Builds every agent's tower. A node whose base contradicts the laws becomes
/// the inconsistent state and produces a warning.
BuildResult build_vector(const Scenario& scenario);

}  // namespace tomex
