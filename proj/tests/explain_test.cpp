#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "tomex/error.hpp"
#include "tomex/explain.hpp"
#include "tomex/oracle/reference.hpp"
#include "tomex/pool.hpp"
#include "tomex/semantics.hpp"

using namespace tomex;
using tomex::testing::ag;
using tomex::testing::Loaded;
namespace ref = tomex::oracle;

namespace {

std::vector<std::string> rendered(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const Formula& f : fs) out.push_back(render(f));
  return out;
}

bool contains(const std::vector<Formula>& fs, const Formula& f) {
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

class Running : public ::testing::Test {
 protected:
  Loaded w = tomex::testing::load("wet_floor.scn");
  AgentId mary = ag("mary"), bob = ag("bob"), tom = ag("tom");
  Formula f(const std::string& text) const { return w.f(text); }
};

}  // namespace

TEST_F(Running, ExpandExpl) {
  EXPECT_EQ(expand_expl(w.scenario.vocabulary, bob, f("rain"), f("wetFloor")),
            f("[rain]_bob (B[bob] wetFloor & ~B[bob] false)"));
  EXPECT_EQ(expand_expl(w.scenario.vocabulary, tom, f("holeInRoof"), f("wetFloor")),
            f("[holeInRoof]_tom (B[tom] wetFloor & ~B[tom] false)"));
}

TEST_F(Running, Explanation) {
  EXPECT_TRUE(is_explanation(w.vector, bob, f("rain"), f("wetFloor")));
  EXPECT_FALSE(is_explanation(w.vector, bob, f("rain & holeInRoof & ~wetFloor"), f("wetFloor")));
  EXPECT_FALSE(is_explanation(w.vector, tom, f("rain"), f("wetFloor")));
  EXPECT_TRUE(is_explanation(w.vector, tom, f("holeInRoof"), f("wetFloor")));
  // A tautology explains exactly what is already believed.
  EXPECT_TRUE(is_explanation(w.vector, bob, f("true"), f("holeInRoof")));
  EXPECT_FALSE(is_explanation(w.vector, bob, f("true"), f("wetFloor")));
}

TEST_F(Running, SubjectiveExplanation) {
  EXPECT_TRUE(is_subjective_explanation(w.vector, mary, bob, f("rain"), f("wetFloor")));
  EXPECT_TRUE(is_subjective_explanation(w.vector, mary, tom, f("holeInRoof"), f("wetFloor")));
  EXPECT_FALSE(is_subjective_explanation(w.vector, mary, tom, f("rain"), f("wetFloor")));

  Loaded forgot = tomex::testing::load("wet_floor_inadequate_1.scn");
  EXPECT_TRUE(is_subjective_explanation(forgot.vector, mary, bob, forgot.f("holeInRoof & rain"),
                                        forgot.f("wetFloor")));
  EXPECT_FALSE(is_subjective_explanation(forgot.vector, mary, bob, forgot.f("rain"),
                                         forgot.f("wetFloor")));
}

TEST_F(Running, PossibilityExplanation) {
  EXPECT_TRUE(is_possibility_explanation(w.vector, bob, f("rain"), f("wetFloor")));
  EXPECT_FALSE(is_possibility_explanation(w.vector, bob, f("true"), f("wetFloor")));
  // Tom already believes rain, so revising by it leaves ~wetFloor in place.
  // The verdict is taken from the reference evaluator.
  bool oracle = ref::ref_holds(ref::from_engine(w.vector), f("[rain]_tom ~B[tom] ~wetFloor"));
  EXPECT_FALSE(oracle);
  EXPECT_EQ(is_possibility_explanation(w.vector, tom, f("rain"), f("wetFloor")), oracle);
}

TEST_F(Running, ExplainsForAll) {
  std::vector<std::pair<AgentId, Formula>> both{{bob, f("wetFloor")}, {tom, f("wetFloor")}};
  EXPECT_TRUE(explains_for_all(w.vector, mary, f("rain & holeInRoof"), both));
  EXPECT_FALSE(explains_for_all(w.vector, mary, f("rain"), both));
  EXPECT_TRUE(explains_for_all(w.vector, mary, f("rain"), {}));
}

TEST_F(Running, Privacy) {
  Loaded p = tomex::testing::load("wet_floor_privacy.scn");
  EXPECT_TRUE(is_private_explanation(p.vector, mary, p.f("rain"), p.f("wetFloor"), bob, tom));
  EXPECT_FALSE(is_private_explanation(p.vector, mary, p.f("rain & holeInRoof"), p.f("wetFloor"), bob, tom));
  EXPECT_FALSE(is_private_explanation(p.vector, mary, p.f("rain"), p.f("wetFloor"), bob, bob));
  EXPECT_TRUE(is_private_explanation(p.vector, mary, p.f("holeInRoof"), p.f("wetFloor"), tom, bob));
}

TEST_F(Running, NestedChains) {
  std::vector<AgentId> one{mary};
  EXPECT_EQ(nested_explanation_holds(w.vector, one, bob, f("rain"), f("wetFloor")),
            is_subjective_explanation(w.vector, mary, bob, f("rain"), f("wetFloor")));
  // Mary has no model of Bob's model of Tom, so it is the ignorant one and the
  // hole alone does not give wetFloor. The verdict is taken from the reference
  // evaluator.
  std::vector<AgentId> two{mary, bob};
  Formula nested = f("B[mary] B[bob] [holeInRoof]_tom (B[tom] wetFloor & ~B[tom] false)");
  bool oracle = ref::ref_holds(ref::from_engine(w.vector), nested);
  EXPECT_FALSE(oracle);
  EXPECT_EQ(nested_explanation_holds(w.vector, two, tom, f("holeInRoof"), f("wetFloor")), oracle);
  // Two explainers, checked independently.
  EXPECT_TRUE(holds(w.vector, f("B[mary] [rain & holeInRoof]_tom B[tom] wetFloor")));
  EXPECT_TRUE(holds(w.vector, f("B[bob] [rain]_bob B[bob] wetFloor")));
}

TEST(NestedExample, TomModelBelievingRain) {
  Loaded n = tomex::testing::load("wet_floor_nested.scn");
  Formula alpha = n.f("B[tom] ~holeInRoof");
  Formula beta = n.f("~B[tom] wetFloor");
  EXPECT_TRUE(is_explanation(n.vector, ag("bob"), alpha, beta));
  EXPECT_TRUE(holds(n.vector, n.f("[B[tom] ~holeInRoof]_bob (B[bob] ~B[tom] wetFloor & ~B[bob] false)")));
  bool oracle = ref::ref_explains(ref::from_engine(n.vector), "bob", alpha, beta);
  EXPECT_TRUE(oracle);
}

TEST_F(Running, Synthesize) {
  FormulaPool pool = abducible_pool(w.scenario.vocabulary, w.scenario.agents, f("wetFloor"), 2);
  auto for_bob = synthesize(w.vector, mary, bob, f("wetFloor"), pool, PreferenceOrder::parse("min_letters"));
  ASSERT_FALSE(for_bob.empty());
  EXPECT_EQ(for_bob.front().candidate, f("rain"));
  auto for_tom = synthesize(w.vector, mary, tom, f("wetFloor"), pool, PreferenceOrder::standard());
  ASSERT_FALSE(for_tom.empty());
  EXPECT_EQ(for_tom.front().candidate, f("holeInRoof"));
  EXPECT_EQ(rendered(optimal_candidates(for_tom)), std::vector<std::string>{"holeInRoof"});

  // Already believed: the empty explanation wins.
  FormulaPool full = full_pool(w.scenario.vocabulary, w.scenario.agents, 2);
  auto known = synthesize(w.vector, mary, bob, f("holeInRoof"), full, PreferenceOrder::standard());
  ASSERT_FALSE(known.empty());
  EXPECT_EQ(known.front().candidate, f("true"));
  EXPECT_EQ(known.front().scores.letters, 0u);
}

TEST_F(Running, SynthesizeScores) {
  FormulaPool pool = abducible_pool(w.scenario.vocabulary, w.scenario.agents, f("wetFloor"), 2);
  auto r = synthesize(w.vector, mary, bob, f("wetFloor"), pool, PreferenceOrder::standard());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(render(r[1].candidate), "(holeInRoof & rain)");
  EXPECT_TRUE(r[0].optimal);
  EXPECT_FALSE(r[1].optimal);
  EXPECT_TRUE(r[0].objective);
  EXPECT_TRUE(r[0].scores.truthful);
  EXPECT_EQ(r[0].scores.plausibility, 2u);
  EXPECT_EQ(r[0].subjective_for, std::vector<AgentId>{mary});
}

TEST_F(Running, SynthesizeDegenerate) {
  // The only member of an empty-symbol pool is `true`, which does not explain
  // wetFloor to Bob.
  FormulaPool trivial{{}, {}, 0, 0};
  EXPECT_TRUE(synthesize(w.vector, mary, bob, f("wetFloor"), trivial, PreferenceOrder::standard()).empty());
  EXPECT_THROW(PreferenceOrder::parse("fastest"), Error);
}

TEST(PreferenceOrder, Parse) {
  EXPECT_EQ(PreferenceOrder::parse("lexicographic").to_string(),
            "lexicographic(truthful,min_letters,plausibility)");
  EXPECT_EQ(PreferenceOrder::parse("lexicographic(plausibility, min_letters)").to_string(),
            "lexicographic(plausibility,min_letters)");
  EXPECT_EQ(PreferenceOrder::parse("semantic_minimality").criteria,
            std::vector<Criterion>{Criterion::semantic_minimality});
}

TEST_F(Running, Truthfulness) {
  EXPECT_TRUE(is_subjectively_truthful(w.vector, mary, bob, f("rain"), f("wetFloor")));
  Loaded x = tomex::testing::load("wet_floor_extended.scn");
  EXPECT_TRUE(is_subjective_explanation(x.vector, mary, bob, x.f("tomPouredWater"), x.f("wetFloor")));
  EXPECT_FALSE(is_subjectively_truthful(x.vector, mary, bob, x.f("tomPouredWater"), x.f("wetFloor")));
  EXPECT_TRUE(is_subjectively_truthful(w.vector, mary, bob, f("true"), f("holeInRoof")));
}

TEST_F(Running, Plausibility) {
  const EpistemicState& b = w.state("bob");
  // Reference value: the nearest law model of rain is two flips away.
  int oracle = ref::ref_plausibility(ref::from_engine(b), f("rain"));
  EXPECT_EQ(oracle, 2);
  EXPECT_EQ(plausibility_distance(b, f("rain")), static_cast<unsigned>(oracle));
  EXPECT_EQ(plausibility_distance(b, f("~rain")), 0u);
  EXPECT_EQ(plausibility_distance(b, f("holeInRoof")), 0u);
  try {
    plausibility_distance(b, f("rain & holeInRoof & ~wetFloor"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoLawConsistentModel);
  }
}

TEST_F(Running, SemanticMinimality) {
  std::vector<Formula> candidates{f("rain"), f("rain & holeInRoof")};
  EXPECT_TRUE(semantically_minimal(candidates, f("rain"), *w.scenario.frame()));
  EXPECT_FALSE(semantically_minimal(candidates, f("rain & holeInRoof"), *w.scenario.frame()));
  std::vector<Formula> single{f("rain")};
  EXPECT_TRUE(semantically_minimal(single, f("rain"), *w.scenario.frame()));
}

TEST_F(Running, Discrepancies) {
  FormulaPool pool = full_pool(w.scenario.vocabulary, {}, 1);
  auto seen_by_mary = find_discrepancies(w.vector, mary, bob, pool, mary);
  EXPECT_TRUE(contains(seen_by_mary, f("wetFloor")));
  EXPECT_TRUE(find_discrepancies(w.vector, bob, bob, pool).empty());
  auto mediated = find_discrepancies(w.vector, bob, tom, pool, mary);
  EXPECT_TRUE(contains(mediated, f("~rain")));
  EXPECT_TRUE(contains(mediated, f("holeInRoof")));
  EXPECT_TRUE(resolves_discrepancy(w.vector, mary, bob, f("rain"), f("wetFloor")));
  EXPECT_FALSE(resolves_discrepancy(w.vector, mary, bob, f("true"), f("wetFloor")));
}

TEST(Adequacy, Fixtures) {
  Loaded ok = tomex::testing::load("wet_floor.scn");
  FormulaPool pool = abducible_pool(ok.scenario.vocabulary, ok.scenario.agents, ok.f("wetFloor"), 2);
  AdequacyResult good = is_adequate(ok.vector, ag("mary"), ag("bob"), ok.f("wetFloor"), pool);
  EXPECT_TRUE(good.adequate);
  EXPECT_TRUE(good.witnesses.empty());

  Loaded forgot = tomex::testing::load("wet_floor_inadequate_1.scn");
  AdequacyResult a = is_adequate(forgot.vector, ag("mary"), ag("bob"), forgot.f("wetFloor"), pool);
  EXPECT_FALSE(a.adequate);
  ASSERT_EQ(a.witnesses.size(), 1u);
  EXPECT_EQ(a.witnesses[0].alpha, forgot.f("rain"));
  EXPECT_FALSE(a.witnesses[0].subjective);
  EXPECT_TRUE(a.witnesses[0].objective);

  Loaded confused = tomex::testing::load("wet_floor_inadequate_2.scn");
  AdequacyResult b = is_adequate(confused.vector, ag("mary"), ag("bob"), confused.f("wetFloor"), pool);
  EXPECT_FALSE(b.adequate);
  auto hole = std::find_if(b.witnesses.begin(), b.witnesses.end(),
                           [&](const AdequacyWitness& x) { return x.alpha == confused.f("holeInRoof"); });
  ASSERT_NE(hole, b.witnesses.end());
  EXPECT_TRUE(hole->subjective);
  EXPECT_FALSE(hole->objective);
}

TEST(Inadequacy, Examples) {
  FormulaPool pool;
  Loaded one = tomex::testing::load("wet_floor_inadequate_1.scn");
  pool = abducible_pool(one.scenario.vocabulary, one.scenario.agents, one.f("wetFloor"), 2);
  auto ranked = synthesize(one.vector, ag("mary"), ag("bob"), one.f("wetFloor"), pool,
                           PreferenceOrder::standard());
  EXPECT_EQ(rendered(optimal_candidates(ranked)), std::vector<std::string>{"(holeInRoof & rain)"});

  Loaded two = tomex::testing::load("wet_floor_inadequate_2.scn");
  EXPECT_TRUE(is_subjective_explanation(two.vector, ag("mary"), ag("bob"), two.f("holeInRoof"),
                                        two.f("wetFloor")));
  EXPECT_FALSE(is_explanation(two.vector, ag("bob"), two.f("holeInRoof"), two.f("wetFloor")));

  Loaded three = tomex::testing::load("wet_floor_inadequate_3.scn");
  FormulaPool literals = full_pool(three.scenario.vocabulary, {}, 1);
  auto objective = find_discrepancies(three.vector, ag("mary"), ag("bob"), literals);
  auto subjective = find_discrepancies(three.vector, ag("mary"), ag("bob"), literals, ag("mary"));
  EXPECT_TRUE(contains(objective, three.f("wetFloor")));
  EXPECT_FALSE(contains(subjective, three.f("wetFloor")));
}

// -- Properties ---------------------------------------------------------------

TEST(ExplainProperty, ExplanationImpliesPossibility) {
  for (const auto& path : tomex::testing::all_fixtures()) {
    Scenario s = load_scenario(path);
    StateVector v = build_vector(s).vector;
    std::vector<Formula> pool = full_pool(s.vocabulary, {}, 2).members(s.vocabulary);
    for (const AgentId& agent : s.agents) {
      if (!v.at(agent).consistent()) continue;
      for (const Formula& alpha : pool) {
        for (const Formula& beta : pool) {
          if (is_explanation(v, agent, alpha, beta)) {
            EXPECT_TRUE(is_possibility_explanation(v, agent, alpha, beta))
                << path.filename() << " " << agent << " " << render(alpha) << " " << render(beta);
          }
        }
      }
    }
  }
}

TEST(ExplainProperty, MinLettersArgminIgnoresPoolOrder) {
  std::mt19937 rng(37);
  for (const char* name : {"wet_floor.scn", "wet_floor_inadequate_1.scn", "wet_floor_extended.scn"}) {
    Loaded w = tomex::testing::load(name);
    Formula beta = w.f("wetFloor");
    FormulaPool pool = abducible_pool(w.scenario.vocabulary, w.scenario.agents, beta, 2);
    auto ranked = synthesize(w.vector, ag("mary"), ag("bob"), beta, pool,
                             PreferenceOrder::parse("min_letters"));
    std::vector<Formula> expected = optimal_candidates(ranked);
    std::sort(expected.begin(), expected.end(),
              [](const Formula& a, const Formula& b) { return render(a) < render(b); });
    std::vector<Formula> members = pool.members(w.scenario.vocabulary);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(members.begin(), members.end(), rng);
      std::size_t best = SIZE_MAX;
      std::vector<Formula> argmin;
      for (const Formula& alpha : members) {
        if (!is_subjective_explanation(w.vector, ag("mary"), ag("bob"), alpha, beta)) continue;
        std::size_t n = letter_count(alpha);
        if (n < best) {
          best = n;
          argmin.clear();
        }
        if (n == best) argmin.push_back(alpha);
      }
      std::sort(argmin.begin(), argmin.end(),
                [](const Formula& a, const Formula& b) { return render(a) < render(b); });
      EXPECT_EQ(argmin, expected) << name;
    }
  }
}

TEST(ExplainProperty, OptimalBlockIsNotBeaten) {
  Loaded w = tomex::testing::load("wet_floor_extended.scn");
  Formula beta = w.f("wetFloor");
  FormulaPool pool = full_pool(w.scenario.vocabulary, w.scenario.agents, 2);
  auto ranked = synthesize(w.vector, ag("mary"), ag("bob"), beta, pool, PreferenceOrder::standard());
  ASSERT_FALSE(ranked.empty());
  const ExplanationScores& top = ranked.front().scores;
  for (const ExplanationResult& r : ranked) {
    auto key = [](const ExplanationScores& s) {
      return std::make_tuple(!s.truthful, s.letters, s.plausibility);
    };
    EXPECT_LE(key(top), key(r.scores)) << render(r.candidate);
    EXPECT_EQ(r.optimal, key(top) == key(r.scores));
  }
}

TEST(ExplainProperty, PrivacyAsymmetry) {
  std::mt19937 rng(41);
  for (const auto& path : tomex::testing::all_fixtures()) {
    Scenario s = load_scenario(path);
    StateVector v = build_vector(s).vector;
    std::vector<Formula> pool = full_pool(s.vocabulary, {}, 2).members(s.vocabulary);
    tomex::testing::FormulaGen gen(rng, s.vocabulary.symbols(), s.agents);
    for (int n = 0; n < 200; ++n) {
      AgentId i = gen.agent(), j = gen.agent(), k = gen.agent();
      const Formula& alpha = pool[gen.pick(pool.size())];
      const Formula& beta = pool[gen.pick(pool.size())];
      EXPECT_FALSE(is_private_explanation(v, i, alpha, beta, j, k) &&
                   is_private_explanation(v, i, alpha, beta, k, j));
    }
  }
}

TEST(ExplainProperty, SubjectiveIgnoresExplaineeState) {
  std::mt19937 rng(43);
  Loaded w = tomex::testing::load("wet_floor.scn");
  auto frame = w.scenario.frame();
  tomex::testing::FormulaGen gen(rng, w.scenario.vocabulary.symbols(), w.scenario.agents);
  std::vector<Formula> pool = full_pool(w.scenario.vocabulary, {}, 2).members(w.scenario.vocabulary);
  for (int n = 0; n < 100; ++n) {
    AgentId j = gen.pick(2) ? ag("bob") : ag("tom");
    StateVector mutated = w.vector.with(j, tomex::testing::random_tower(gen, frame, j, 2));
    const Formula& alpha = pool[gen.pick(pool.size())];
    const Formula& beta = pool[gen.pick(pool.size())];
    EXPECT_EQ(is_subjective_explanation(w.vector, ag("mary"), j, alpha, beta),
              is_subjective_explanation(mutated, ag("mary"), j, alpha, beta));
  }
}
