#include "tomex/pool.hpp"

#include <algorithm>
#include <tuple>

#include "tomex/error.hpp"

namespace tomex {

namespace {

// (symbol index into the sorted symbol list, negated)
using Literal = std::pair<std::size_t, bool>;
using Term = std::vector<Literal>;

void extend_terms(std::size_t next, std::size_t symbol_count, unsigned remaining, Term& current,
                  std::vector<Term>& out) {
  out.push_back(current);
  if (remaining == 0) return;
  for (std::size_t s = next; s < symbol_count; ++s) {
    for (bool negated : {false, true}) {
      current.emplace_back(s, negated);
      extend_terms(s + 1, symbol_count, remaining - 1, current, out);
      current.pop_back();
    }
  }
}

Formula term_formula(const Term& term, const std::vector<std::string>& sorted,
                     const Vocabulary& vocabulary) {
  std::vector<Formula> literals;
  for (auto [index, negated] : term) {
    Formula atom = Formula::atom(sorted[index]);
    literals.push_back(negated ? Formula::negation(std::move(atom)) : std::move(atom));
  }
  return conjoin(literals, vocabulary);
}

}  // namespace

std::vector<Formula> FormulaPool::members(const Vocabulary& vocabulary) const {
  if (modal_depth > 1) {
    throw Error(ErrorCode::InvalidArgument, "pool modal depth above 1 is not supported");
  }
  std::vector<std::string> sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const auto& s : sorted) {
    if (!vocabulary.contains(s)) {
      throw Error(ErrorCode::UnknownSymbol, "pool symbol '" + s + "' is not in the vocabulary");
    }
  }

  std::vector<Term> terms;
  Term scratch;
  extend_terms(0, sorted.size(), max_literals, scratch, terms);
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return std::make_tuple(a.size(), std::cref(a)) < std::make_tuple(b.size(), std::cref(b));
  });

  std::vector<AgentId> agent_order = agents;
  std::sort(agent_order.begin(), agent_order.end());

  // Key: (letters, modal?, agent index, negated, term index)
  struct Entry {
    std::tuple<std::size_t, int, std::size_t, int, std::size_t> key;
    Formula formula;
  };
  std::vector<Entry> entries;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    entries.push_back({{terms[t].size(), 0, 0, 0, t}, term_formula(terms[t], sorted, vocabulary)});
  }
  if (modal_depth == 1) {
    for (std::size_t a = 0; a < agent_order.size(); ++a) {
      for (std::size_t t = 0; t < terms.size(); ++t) {
        if (terms[t].empty()) continue;
        Formula inner = term_formula(terms[t], sorted, vocabulary);
        Formula belief = Formula::believes(agent_order[a], inner);
        entries.push_back({{terms[t].size(), 1, a, 0, t}, belief});
        entries.push_back({{terms[t].size(), 1, a, 1, t}, Formula::negation(belief)});
      }
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });

  std::vector<Formula> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.formula));
  return out;
}

FormulaPool full_pool(const Vocabulary& vocabulary, std::vector<AgentId> agents,
                      unsigned max_literals, unsigned modal_depth) {
  return FormulaPool{vocabulary.symbols(), std::move(agents), max_literals, modal_depth};
}

}  // namespace tomex
