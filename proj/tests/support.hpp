// Shared helpers for the test binaries: fixture access and seeded generators.

#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "tomex/formula.hpp"
#include "tomex/scenario.hpp"
#include "tomex/state.hpp"

namespace tomex::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(TOMEX_FIXTURE_DIR) / name;
}

inline std::vector<std::filesystem::path> all_fixtures() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(TOMEX_FIXTURE_DIR)) {
    if (entry.path().extension() == ".scn") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Loaded {
  Scenario scenario;
  StateVector vector;

  Formula f(const std::string& text) const {
    return parse(text, scenario.vocabulary, scenario.agents);
  }
  const EpistemicState& state(const std::string& agent) const { return vector.at(AgentId(agent)); }
};

inline Loaded load(const std::string& name) {
  Loaded out{load_scenario(fixture_path(name)), {}};
  out.vector = build_vector(out.scenario).vector;
  return out;
}

inline AgentId ag(const std::string& name) { return AgentId(name); }

/// Random formulas over a fixed vocabulary and agent list.
class FormulaGen {
 public:
  FormulaGen(std::mt19937& rng, std::vector<std::string> symbols, std::vector<AgentId> agents)
      : rng_(rng), symbols_(std::move(symbols)), agents_(std::move(agents)) {}

  Formula any(unsigned depth) {
    if (depth == 0) return atom();
    switch (pick(5)) {
      case 0: return atom();
      case 1: return Formula::negation(any(depth - 1));
      case 2: return Formula::conjunction(any(depth - 1), any(depth - 1));
      case 3: return Formula::believes(agent(), any(depth - 1));
      default: return Formula::after_revision(agent(), any(depth - 1), any(depth - 1));
    }
  }

  Formula literal() {
    Formula a = atom();
    return pick(2) ? Formula::negation(a) : a;
  }

  /// Random propositional formula built from literals with & and |.
  Formula propositional(unsigned depth) {
    if (depth == 0) return literal();
    switch (pick(4)) {
      case 0: return literal();
      case 1: return Formula::negation(propositional(depth - 1));
      case 2: return Formula::conjunction(propositional(depth - 1), propositional(depth - 1));
      default: return Formula::disjunction(propositional(depth - 1), propositional(depth - 1));
    }
  }

  /// Agent formula in the belief fragment: boolean combinations of B[j] over
  /// propositional content, nested at most `depth` deep.
  Formula agent_formula(unsigned depth) {
    switch (depth == 0 ? 0 : pick(4)) {
      case 0: return Formula::believes(agent(), propositional(1));
      case 1: return Formula::negation(agent_formula(depth - 1));
      case 2: return Formula::conjunction(agent_formula(depth - 1), agent_formula(depth - 1));
      default: return Formula::believes(agent(), agent_formula(depth - 1));
    }
  }

  Formula atom() { return Formula::atom(symbols_[pick(symbols_.size())]); }
  AgentId agent() { return agents_[pick(agents_.size())]; }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  std::mt19937& rng_;
  std::vector<std::string> symbols_;
  std::vector<AgentId> agents_;
};

/// Random stratified base of literals and binary clauses.
inline StratifiedBase random_base(FormulaGen& gen, std::size_t max_strata = 3) {
  StratifiedBase base(gen.pick(max_strata + 1));
  for (Stratum& stratum : base) {
    std::size_t n = 1 + gen.pick(2);
    for (std::size_t k = 0; k < n; ++k) {
      stratum.push_back(gen.pick(3) == 0 ? Formula::disjunction(gen.literal(), gen.literal())
                                         : gen.literal());
    }
  }
  return base;
}

/// Random tower owned by `owner`: random bases at every level, each nested
/// model present with probability 2/3.
inline EpistemicState random_tower(FormulaGen& gen, const std::shared_ptr<const Frame>& frame,
                                   const AgentId& owner, unsigned depth) {
  EpistemicState::ModelMap models;
  if (depth > 0) {
    for (const AgentId& other : frame->agents) {
      if (other == owner || gen.pick(3) == 0) continue;
      models.emplace(other, random_tower(gen, frame, other, depth - 1));
    }
  }
  return EpistemicState::from_base(frame, owner, random_base(gen), depth, std::move(models));
}

}  // namespace tomex::testing
