#include "tomex/oracle/theorems.hpp"

#include <algorithm>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "tomex/error.hpp"
#include "tomex/oracle/reference.hpp"
#include "tomex/revision.hpp"
#include "tomex/semantics.hpp"

namespace tomex::oracle {

namespace {

constexpr std::size_t kMaxRecorded = 20;

void violation(TheoremReport& report, std::string text) {
  if (report.violations.size() < kMaxRecorded) {
    report.violations.push_back(std::move(text));
  } else if (report.violations.size() == kMaxRecorded) {
    report.violations.push_back("... further violations omitted");
  }
}

Vocabulary small_vocabulary(unsigned size) {
  static const char* names[] = {"p", "q", "r"};
  if (size == 0 || size > 3) {
    throw Error(ErrorCode::InvalidArgument, "theorem suites support 1 to 3 atoms");
  }
  return Vocabulary(std::vector<std::string>(names, names + size));
}

// Literal conjunctions plus their dual clauses, every one over distinct atoms.
std::vector<Formula> terms_and_clauses(const Vocabulary& vocabulary, unsigned max_literals) {
  std::vector<Formula> out = FormulaPool{vocabulary.symbols(), {}, max_literals, 0}.members(vocabulary);
  const std::size_t terms = out.size();
  for (std::size_t k = 0; k < terms; ++k) {
    if (out[k].kind() != FormulaKind::And || letter_count(out[k]) < 2) continue;
    std::vector<Formula> literals;
    Formula rest = out[k];
    while (rest.kind() == FormulaKind::And) {
      literals.push_back(rest.rhs());
      rest = rest.lhs();
    }
    literals.push_back(rest);
    Formula clause = literals.back();
    for (auto it = literals.rbegin() + 1; it != literals.rend(); ++it) {
      clause = Formula::disjunction(clause, *it);
    }
    out.push_back(clause);
  }
  out.push_back(vocabulary.bottom());
  return out;
}

WorldSet to_world_set(const std::vector<Assignment>& rows, const Vocabulary& vocabulary) {
  WorldSet out = WorldSet::none(vocabulary.size());
  for (const auto& row : rows) {
    Valuation v = 0;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
      if (row.at(vocabulary.symbols()[i])) v |= Valuation{1} << i;
    }
    out.insert(v);
  }
  return out;
}

class Generator {
 public:
  Generator(const Vocabulary& vocabulary, std::uint32_t seed) : vocabulary_(vocabulary), rng_(seed) {}

  Formula literal() {
    const auto& symbols = vocabulary_.symbols();
    Formula atom = Formula::atom(symbols[pick(symbols.size())]);
    return coin() ? atom : Formula::negation(atom);
  }

  Formula formula() {
    switch (pick(4)) {
      case 0:
      case 1: return literal();
      case 2: return Formula::conjunction(literal(), literal());
      default: return Formula::disjunction(literal(), literal());
    }
  }

  StratifiedBase base() {
    StratifiedBase out(1 + pick(3));
    for (auto& stratum : out) {
      const std::size_t n = 1 + pick(2);
      for (std::size_t k = 0; k < n; ++k) stratum.push_back(formula());
    }
    return out;
  }

  StratifiedBase permuted(const StratifiedBase& base) {
    std::vector<Formula> flat = flatten(base);
    std::shuffle(flat.begin(), flat.end(), rng_);
    StratifiedBase out;
    for (const auto& f : flat) {
      if (out.empty() || coin()) out.emplace_back();
      out.back().push_back(f);
    }
    return out;
  }

  std::vector<Formula> laws() {
    if (pick(3) != 0) return {};
    return {Formula::disjunction(literal(), literal())};
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return pick(2) == 1; }

 private:
  const Vocabulary& vocabulary_;
  std::mt19937 rng_;
};

std::shared_ptr<const Frame> consistent_frame(Generator& gen, const Vocabulary& vocabulary,
                                              const std::vector<AgentId>& agents) {
  for (;;) {
    try {
      return make_frame(vocabulary, agents, gen.laws());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InconsistentLaws) throw;
    }
  }
}

std::string describe_base(const StratifiedBase& base) {
  std::string out = "[";
  for (std::size_t s = 0; s < base.size(); ++s) {
    out += s ? "; " : "";
    for (std::size_t k = 0; k < base[s].size(); ++k) out += (k ? ", " : "") + render(base[s][k]);
  }
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------------------

TheoremReport verify_theorem1(const TheoremBounds& bounds) {
  TheoremReport report;
  report.id = "T1";
  report.claim = "classical abduction implies Expl (Dalal, no laws)";
  const Vocabulary vocabulary = small_vocabulary(bounds.vocab_size);
  const AgentId agent("a");
  auto frame = make_frame(vocabulary, {agent}, {}, {{agent, RevisionOperator::dalal}});
  const auto inputs = terms_and_clauses(vocabulary, bounds.max_literals);
  const auto rows = truth_table(vocabulary.symbols());

  for (std::size_t mask = 1; mask < (std::size_t{1} << rows.size()); ++mask) {
    std::vector<Assignment> theory;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if ((mask >> k) & 1u) theory.push_back(rows[k]);
    }
    const auto state = EpistemicState::from_worlds(frame, agent, to_world_set(theory, vocabulary), 0,
                                                   RevisionOperator::dalal);
    const StateVector vector({{agent, state}});
    for (const auto& alpha : inputs) {
      for (const auto& beta : inputs) {
        if (!classical_explains(theory, alpha, beta)) {
          ++report.premise_excluded;
          const bool beta_contradicts = std::none_of(
              theory.begin(), theory.end(), [&](const Assignment& w) { return ref_eval(w, beta); });
          if (beta_contradicts && is_explanation(vector, agent, alpha, beta)) ++report.extra;
          continue;
        }
        ++report.instances_checked;
        if (!is_explanation(vector, agent, alpha, beta)) {
          violation(report, "T=" + render_worlds(state.worlds(), vocabulary) +
                                " alpha=" + render(alpha) + " beta=" + render(beta));
        }
      }
    }
  }
  return report;
}

TheoremReport verify_theorem2(const TheoremBounds& bounds) {
  TheoremReport report;
  report.id = "T2";
  report.claim = "equivalent states have the same explanations";
  const Vocabulary vocabulary = small_vocabulary(bounds.vocab_size);
  const AgentId i("i");
  const AgentId j("j");
  const auto pool = FormulaPool{vocabulary.symbols(), {}, bounds.max_literals, 0}.members(vocabulary);
  Generator gen(vocabulary, bounds.seed);

  for (unsigned kind = 0; kind < 3; ++kind) {
    for (unsigned n = 0; n < bounds.pairs_per_kind; ++n) {
      auto frame = consistent_frame(gen, vocabulary, {i, j});
      const StratifiedBase a = gen.base();
      const StratifiedBase b = kind == 0 ? a : kind == 1 ? gen.permuted(a) : gen.base();
      const auto ei = EpistemicState::from_base(frame, i, a, 0);
      const auto ej = EpistemicState::from_base(frame, j, b, 0);
      if (!states_equivalent(ei, ej, pool, bounds.max_seq_len)) {
        ++report.premise_excluded;
        continue;
      }
      const StateVector vector({{i, ei}, {j, ej}});
      const RefVector ref = from_engine(vector);
      for (const auto& alpha : pool) {
        for (const auto& beta : pool) {
          ++report.instances_checked;
          const bool for_i = is_explanation(vector, i, alpha, beta);
          const bool for_j = is_explanation(vector, j, alpha, beta);
          const std::string where = " e_i=" + describe_base(a) + " e_j=" + describe_base(b) +
                                    " alpha=" + render(alpha) + " beta=" + render(beta);
          if (for_i != for_j) violation(report, "explanation sets differ:" + where);
          if (for_i != ref_explains(ref, "i", alpha, beta) ||
              for_j != ref_explains(ref, "j", alpha, beta)) {
            violation(report, "engine and reference disagree:" + where);
          }
        }
      }
    }
  }
  return report;
}

TheoremReport verify_theorem3(const TheoremBounds& bounds, unsigned introspection_seq_len) {
  TheoremReport report;
  report.id = "T3";
  report.claim = "equivalence and introspection give correct beliefs about j";
  const Vocabulary vocabulary = small_vocabulary(bounds.vocab_size);
  const AgentId i("i");
  const AgentId j("j");
  const std::vector<AgentId> agents{i, j};
  const auto modal_pool =
      FormulaPool{vocabulary.symbols(), agents, std::min(bounds.max_literals, 2u), 1}.members(vocabulary);
  const auto pool = FormulaPool{vocabulary.symbols(), {}, bounds.max_literals, 0}.members(vocabulary);
  Generator gen(vocabulary, bounds.seed + 3);

  for (unsigned kind = 0; kind < 3; ++kind) {
    for (unsigned n = 0; n < bounds.pairs_per_kind; ++n) {
      auto frame = consistent_frame(gen, vocabulary, agents);
      const StratifiedBase shared = gen.base();
      StratifiedBase i_base = shared;
      StratifiedBase j_base = shared;
      StratifiedBase i_of_j = shared;
      StratifiedBase j_of_i = shared;
      if (kind == 1) i_of_j = gen.base();
      if (kind == 2) {
        i_base = gen.base();
        j_base = gen.base();
        i_of_j = gen.coin() ? j_base : gen.base();
        j_of_i = gen.base();
      }
      const auto ei = EpistemicState::from_base(frame, i, i_base, 1,
                                                {{j, EpistemicState::from_base(frame, j, i_of_j, 0)}});
      const auto ej = EpistemicState::from_base(frame, j, j_base, 1,
                                                {{i, EpistemicState::from_base(frame, i, j_of_i, 0)}});
      const StateVector vector({{i, ei}, {j, ej}});

      bool premise = states_equivalent(ei, ej, modal_pool, introspection_seq_len);
      for (const auto& phi : pool) {
        if (!premise) break;
        const Formula bj = Formula::believes(j, phi);
        const Formula not_bj = Formula::negation(bj);
        premise = holds(vector, bj) == holds(vector, Formula::believes(j, bj)) &&
                  holds(vector, not_bj) == holds(vector, Formula::believes(j, not_bj));
      }
      if (!premise) {
        ++report.premise_excluded;
        continue;
      }
      const RefVector ref = from_engine(vector);
      for (const auto& phi : pool) {
        ++report.instances_checked;
        const Formula bj = Formula::believes(j, phi);
        const Formula not_bj = Formula::negation(bj);
        const Formula bi_bj = Formula::believes(i, bj);
        const Formula bi_not_bj = Formula::believes(i, not_bj);
        const std::string where = " e_i=" + describe_base(i_base) + " model_of_j=" +
                                  describe_base(i_of_j) + " e_j=" + describe_base(j_base) +
                                  " phi=" + render(phi);
        if (holds(vector, bj) != holds(vector, bi_bj)) violation(report, "positive:" + where);
        if (holds(vector, not_bj) != holds(vector, bi_not_bj)) violation(report, "negative:" + where);
        if (holds(vector, bi_bj) != ref_holds(ref, bi_bj) ||
            holds(vector, bi_not_bj) != ref_holds(ref, bi_not_bj)) {
          violation(report, "engine and reference disagree:" + where);
        }
      }
    }
  }
  return report;
}

TheoremReport verify_theorem4(const std::vector<NamedScenario>& scenarios,
                              const TheoremBounds& bounds) {
  TheoremReport report;
  report.id = "T4";
  report.claim = "Expl implies the possibility explanation";
  for (const auto& [name, scenario] : scenarios) {
    const StateVector vector = build_vector(scenario).vector;
    const RefVector ref = from_engine(vector);
    const Vocabulary& vocabulary = scenario.vocabulary;
    const auto flat = FormulaPool{vocabulary.symbols(), {}, bounds.max_literals, 0}.members(vocabulary);
    const auto modal = FormulaPool{vocabulary.symbols(), scenario.agents, 1, 1}.members(vocabulary);
    for (const auto& agent : scenario.agents) {
      for (const auto* pool : {&flat, &modal}) {
        for (const auto& alpha : *pool) {
          for (const auto& beta : *pool) {
            const Formula both = Formula::conjunction(Formula::believes(agent, beta),
                                                      Formula::believes(agent, Formula::negation(beta)));
            const Formula reasoning = Formula::after_revision(
                agent, alpha, Formula::implication(both, Formula::believes(agent, vocabulary.bottom())));
            if (!holds(vector, reasoning)) {
              ++report.premise_excluded;
              continue;
            }
            ++report.instances_checked;
            const bool expl = is_explanation(vector, agent, alpha, beta);
            const std::string where = name + ": agent=" + agent.name() + " alpha=" + render(alpha) +
                                      " beta=" + render(beta);
            if (expl && !is_possibility_explanation(vector, agent, alpha, beta)) {
              violation(report, where);
            }
            if (expl != ref_explains(ref, agent.name(), alpha, beta)) {
              violation(report, "engine and reference disagree: " + where);
            }
          }
        }
      }
    }
  }
  return report;
}

namespace {

bool same_keys(const ExplanationScores& a, const ExplanationScores& b, const PreferenceOrder& order) {
  for (Criterion c : order.criteria) {
    switch (c) {
      case Criterion::truthful:
        if (a.truthful != b.truthful) return false;
        break;
      case Criterion::min_letters:
        if (a.letters != b.letters) return false;
        break;
      case Criterion::plausibility:
        if (a.plausibility != b.plausibility) return false;
        break;
      case Criterion::semantic_minimality:
        if (a.non_entailing != b.non_entailing) return false;
        break;
    }
  }
  return true;
}

std::set<std::string> rendered(const std::vector<Formula>& formulas) {
  std::set<std::string> out;
  for (const auto& f : formulas) out.insert(render(f));
  return out;
}

}  // namespace

TheoremReport verify_theorem5(const std::vector<NamedScenario>& scenarios,
                              const TheoremBounds& bounds, const PreferenceOrder& order,
                              unsigned pool_literals) {
  (void)bounds;
  TheoremReport report;
  report.id = "T5";
  report.claim = "adequacy and equal preferences give equal optimal sets";
  for (const auto& [name, scenario] : scenarios) {
    const StateVector vector = build_vector(scenario).vector;
    const Vocabulary& vocabulary = scenario.vocabulary;
    const FormulaPool pool{vocabulary.symbols(), {}, pool_literals, 0};
    auto explananda = FormulaPool{vocabulary.symbols(), {}, 1, 0}.members(vocabulary);
    explananda.erase(explananda.begin());  // `true`
    for (const auto& i : scenario.agents) {
      for (const auto& j : scenario.agents) {
        if (i == j) continue;
        for (const auto& beta : explananda) {
          const std::string where =
              name + ": " + i.name() + " for " + j.name() + " beta=" + render(beta);
          if (!is_adequate(vector, i, j, beta, pool).adequate) {
            ++report.premise_excluded;
            continue;
          }
          const auto subjective = synthesize(vector, i, j, beta, pool, order, Perspective::subjective);
          const auto objective = synthesize(vector, i, j, beta, pool, order, Perspective::objective);
          bool keys_equal = subjective.size() == objective.size();
          for (const auto& s : subjective) {
            if (!keys_equal) break;
            auto match = std::find_if(objective.begin(), objective.end(),
                                      [&](const auto& o) { return o.candidate == s.candidate; });
            keys_equal = match != objective.end() && same_keys(s.scores, match->scores, order);
          }
          if (!keys_equal) {
            ++report.premise_excluded;
            continue;
          }
          ++report.instances_checked;
          if (rendered(optimal_candidates(subjective)) != rendered(optimal_candidates(objective))) {
            violation(report, where);
          }
        }
      }
    }
  }
  return report;
}

std::vector<TheoremReport> verify_all(const std::vector<NamedScenario>& scenarios,
                                      const TheoremBounds& bounds) {
  return {verify_theorem1(bounds), verify_theorem2(bounds), verify_theorem3(bounds),
          verify_theorem4(scenarios, bounds), verify_theorem5(scenarios, bounds)};
}

std::string render_reports(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "id" << std::setw(8) << "result" << std::setw(10) << "checked"
     << std::setw(10) << "excluded" << std::setw(8) << "extra" << std::setw(12) << "violations"
     << "claim\n";
  for (const auto& r : reports) {
    os << std::setw(6) << r.id << std::setw(8) << (r.passed() ? "pass" : "FAIL") << std::setw(10)
       << r.instances_checked << std::setw(10) << r.premise_excluded << std::setw(8) << r.extra
       << std::setw(12) << r.violations.size() << r.claim << "\n";
  }
  for (const auto& r : reports) {
    for (const auto& v : r.violations) os << r.id << " violation: " << v << "\n";
  }
  return os.str();
}

}  // namespace tomex::oracle
