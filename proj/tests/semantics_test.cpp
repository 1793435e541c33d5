#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tomex/error.hpp"
#include "tomex/explain.hpp"
#include "tomex/oracle/reference.hpp"
#include "tomex/pool.hpp"
#include "tomex/revision.hpp"
#include "tomex/semantics.hpp"

using namespace tomex;
using tomex::testing::ag;
namespace ref = tomex::oracle;

namespace {

// Bounded equivalence unfolded on reference states.
bool ref_equivalent(const ref::RefState& a, const ref::RefState& b,
                    const std::vector<Formula>& pool, unsigned len) {
  auto believes = [](const ref::RefState& s, const Formula& f) {
    for (const auto& w : s.worlds) {
      if (!ref::ref_eval(w, f)) return false;
    }
    return true;
  };
  if (a.worlds.empty() != b.worlds.empty()) return false;
  for (const Formula& f : pool) {
    if (believes(a, f) != believes(b, f)) return false;
  }
  if (len == 0) return true;
  for (const Formula& f : pool) {
    if (!ref_equivalent(ref::ref_revise(a, f), ref::ref_revise(b, f), pool, len - 1)) return false;
  }
  return true;
}

struct Lab {
  Vocabulary vocab{{"p", "q", "r"}};
  std::vector<AgentId> agents{ag("a"), ag("b")};
  std::shared_ptr<const Frame> frame =
      make_frame(vocab, agents, {parse("p -> q | r", vocab, agents)});
};

}  // namespace

TEST(Entails, Examples) {
  auto w = tomex::testing::load("wet_floor.scn");
  EXPECT_TRUE(entails(w.state("bob"), w.f("holeInRoof")));
  EXPECT_TRUE(entails(w.state("bob"), w.f("true")));
  EXPECT_FALSE(entails(w.state("tom"), w.f("holeInRoof")));
  EpistemicState empty = revise(w.state("bob"), w.f("false"));
  ASSERT_FALSE(empty.consistent());
  EXPECT_TRUE(entails(empty, w.f("false")));
  EXPECT_THROW(entails(w.state("bob"), w.f("B[tom] rain")), Error);
}

TEST(TruthAt, Examples) {
  auto w = tomex::testing::load("wet_floor.scn");
  const EpistemicState& mary = w.state("mary");
  EXPECT_TRUE(truth_at(mary, w.f("B[bob] ~rain")));
  EXPECT_TRUE(truth_at(mary, w.f("~B[mary] false")));
  EXPECT_TRUE(truth_at(mary, expand_expl(w.scenario.vocabulary, ag("bob"), w.f("rain"),
                                         w.f("wetFloor"))));
  EXPECT_FALSE(truth_at(mary, w.f("B[tom] holeInRoof")));
  // Atoms are read from the world; Mary has a single world.
  EXPECT_TRUE(truth_at(mary, w.f("rain & B[tom] rain")));
}

TEST(TruthSet, WorldDependent) {
  auto w = tomex::testing::load("wet_floor.scn");
  EpistemicState ignorant = EpistemicState::ignorant(w.scenario.frame(), ag("tom"), 1);
  // Truth sets range over every valuation, not only the state's worlds.
  EXPECT_EQ(truth_set(ignorant, w.f("rain")).size(), 4u);
  EXPECT_TRUE(truth_at(ignorant, w.f("rain & holeInRoof -> wetFloor")));
  // World-independent belief formulas give all worlds or none.
  EXPECT_EQ(truth_set(ignorant, w.f("B[bob] rain")).size(), 0u);
  EXPECT_EQ(truth_set(ignorant, w.f("~B[bob] rain")).size(), 8u);
}

TEST(Holds, RunningExample) {
  auto w = tomex::testing::load("wet_floor.scn");
  EXPECT_TRUE(holds(w.vector, w.f("B[mary] wetFloor & B[mary] holeInRoof")));
  EXPECT_TRUE(holds(w.vector, w.f("B[mary] B[tom] rain & B[mary] B[tom] ~holeInRoof")));
  EXPECT_TRUE(holds(w.vector, w.f("~B[bob] false & ~B[tom] false")));
  EXPECT_TRUE(holds(w.vector, w.f("[rain]_bob B[bob] wetFloor")));
  EXPECT_FALSE(holds(w.vector, w.f("[rain]_tom B[tom] wetFloor")));
  try {
    holds(w.vector, w.f("rain"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAgentFormula);
  }
}

TEST(Holds, ScenarioQueries) {
  for (const auto& path : tomex::testing::all_fixtures()) {
    Scenario s = load_scenario(path);
    StateVector v = build_vector(s).vector;
    for (const ScenarioQuery& q : s.queries) {
      if (q.expected) {
        EXPECT_EQ(holds(v, q.formula), *q.expected) << path << ": " << q.text;
      }
    }
  }
}

TEST(StatesEquivalent, Examples) {
  auto w = tomex::testing::load("wet_floor.scn");
  FormulaPool pool = full_pool(w.scenario.vocabulary, w.scenario.agents, 2);
  EXPECT_TRUE(states_equivalent(w.state("bob"), w.state("bob"), pool, 2));
  EXPECT_FALSE(states_equivalent(w.state("bob"), w.state("tom"), pool, 0));
}

TEST(StatesEquivalent, SameWorldsDifferentStrata) {
  // Expected verdicts come from the reference oracle over the same pool and
  // bound; the engine must agree.
  auto w = tomex::testing::load("wet_floor.scn");
  auto frame = w.scenario.frame();
  FormulaPool pool = full_pool(w.scenario.vocabulary, {}, 2);
  std::vector<Formula> members = pool.members(w.scenario.vocabulary);
  auto bob = [&](StratifiedBase base) {
    return EpistemicState::from_base(frame, ag("bob"), std::move(base), 0);
  };
  EpistemicState layered = bob({{w.f("holeInRoof")}, {w.f("~rain"), w.f("~wetFloor")}});
  EpistemicState swapped = bob({{w.f("holeInRoof")}, {w.f("~wetFloor"), w.f("~rain")}});
  EpistemicState flat = bob({{w.f("~rain & holeInRoof & ~wetFloor")}});
  ASSERT_EQ(layered.worlds(), flat.worlds());

  bool oracle_swapped = ref_equivalent(ref::from_engine(layered), ref::from_engine(swapped), members, 2);
  bool oracle_flat = ref_equivalent(ref::from_engine(layered), ref::from_engine(flat), members, 2);
  EXPECT_TRUE(oracle_swapped);
  EXPECT_FALSE(oracle_flat);
  EXPECT_EQ(states_equivalent(layered, swapped, pool, 2), oracle_swapped);
  EXPECT_EQ(states_equivalent(layered, flat, pool, 2), oracle_flat);
  // With no revision steps only the current beliefs are compared.
  EXPECT_TRUE(states_equivalent(layered, flat, pool, 0));
}

// -- Properties ---------------------------------------------------------------

TEST(SemanticsProperty, Introspection) {
  Lab lab;
  std::mt19937 rng(17);
  tomex::testing::FormulaGen gen(rng, lab.vocab.symbols(), lab.agents);
  int consistent = 0;
  for (int n = 0; n < 600; ++n) {
    AgentId self = gen.agent();
    EpistemicState e = tomex::testing::random_tower(gen, lab.frame, self, n % 3);
    if (!e.consistent()) continue;
    ++consistent;
    Formula phi = n % 2 ? gen.propositional(2) : gen.agent_formula(2);
    bool base = truth_at(e, phi);
    EXPECT_EQ(truth_at(e, Formula::believes(self, phi)), base) << render(phi);
    EXPECT_EQ(truth_at(e, Formula::negation(Formula::believes(self, phi))), !base) << render(phi);
  }
  EXPECT_GT(consistent, 300);
}

TEST(SemanticsProperty, InconsistentStateBelievesEverything) {
  Lab lab;
  std::mt19937 rng(19);
  tomex::testing::FormulaGen gen(rng, lab.vocab.symbols(), lab.agents);
  EpistemicState empty =
      EpistemicState::from_base(lab.frame, ag("a"), {{parse("p & ~q & ~r", lab.vocab, lab.agents)}}, 1);
  ASSERT_FALSE(empty.consistent());
  for (int n = 0; n < 300; ++n) {
    EXPECT_TRUE(truth_at(empty, gen.any(3)));
  }
  // Objectively, ~B[a] false fails exactly for the inconsistent agent.
  StateVector v({{ag("a"), empty}, {ag("b"), EpistemicState::ignorant(lab.frame, ag("b"), 1)}});
  EXPECT_FALSE(holds(v, Formula::negation(Formula::believes(ag("a"), lab.vocab.bottom()))));
  EXPECT_TRUE(holds(v, Formula::negation(Formula::believes(ag("b"), lab.vocab.bottom()))));
}

TEST(SemanticsProperty, ConjunctionClause) {
  Lab lab;
  std::mt19937 rng(23);
  tomex::testing::FormulaGen gen(rng, lab.vocab.symbols(), lab.agents);
  for (int n = 0; n < 200; ++n) {
    StateVector v({{ag("a"), tomex::testing::random_tower(gen, lab.frame, ag("a"), 2)},
                   {ag("b"), tomex::testing::random_tower(gen, lab.frame, ag("b"), 2)}});
    Formula x = gen.agent_formula(2);
    Formula y = gen.agent_formula(2);
    EXPECT_EQ(holds(v, Formula::conjunction(x, y)), holds(v, x) && holds(v, y));
  }
}

TEST(SemanticsProperty, AgreesWithReference) {
  Lab lab;
  std::mt19937 rng(29);
  tomex::testing::FormulaGen gen(rng, lab.vocab.symbols(), lab.agents);
  for (int n = 0; n < 400; ++n) {
    StateVector v({{ag("a"), tomex::testing::random_tower(gen, lab.frame, ag("a"), 2)},
                   {ag("b"), tomex::testing::random_tower(gen, lab.frame, ag("b"), 2)}});
    Formula phi = gen.agent_formula(2);
    if (n % 2) {
      AgentId j = gen.agent();
      Formula input = gen.propositional(1);
      if (gen.pick(2)) input = Formula::conjunction(input, Formula::believes(gen.agent(), gen.literal()));
      phi = Formula::after_revision(j, input, phi);
    }
    ASSERT_EQ(holds(v, phi), ref::ref_holds(ref::from_engine(v), phi)) << render(phi);
  }
}

TEST(SemanticsProperty, EquivalenceRelation) {
  // World sets drawn from three candidates with assorted bases, so that
  // equivalent pairs are common.
  Lab lab;
  std::mt19937 rng(31);
  tomex::testing::FormulaGen gen(rng, lab.vocab.symbols(), lab.agents);
  std::vector<Formula> shapes{parse("p & q", lab.vocab, lab.agents),
                              parse("~p", lab.vocab, lab.agents),
                              parse("q | r", lab.vocab, lab.agents)};
  auto random_state = [&]() {
    Formula core = shapes[gen.pick(shapes.size())];
    StratifiedBase base;
    switch (gen.pick(3)) {
      case 0: base = {{core}}; break;
      case 1: base = {{core}, {gen.literal()}}; break;
      default: base = {{core, Formula::negation(Formula::negation(core))}}; break;
    }
    return EpistemicState::from_base(lab.frame, ag("a"), base, 0);
  };
  FormulaPool pool = full_pool(lab.vocab, {}, 1);
  std::vector<Formula> members = pool.members(lab.vocab);
  int related = 0;
  for (int n = 0; n < 400; ++n) {
    EpistemicState x = random_state(), y = random_state(), z = random_state();
    bool xy = states_equivalent(x, y, members, 1);
    bool yz = states_equivalent(y, z, members, 1);
    EXPECT_TRUE(states_equivalent(x, x, members, 1));
    EXPECT_EQ(xy, states_equivalent(y, x, members, 1));
    if (xy && yz) {
      ++related;
      EXPECT_TRUE(states_equivalent(x, z, members, 1));
    }
  }
  EXPECT_GT(related, 5);
}
