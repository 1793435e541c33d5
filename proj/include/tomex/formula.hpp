// Formula AST for the belief/revision language:
//
//   phi ::= p | ~phi | (phi & phi) | B[i] phi | [phi]_i phi
//
// Derived connectives (|, ->, true, false) are expanded while parsing, so the
// AST only ever holds the five primitive node kinds. `false` becomes
// (p & ~p) for the lexicographically smallest symbol p of the vocabulary and
// `true` becomes its negation.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tomex {

/// Lowercase alphanumeric + underscore, non-empty, starting with a letter or
/// underscore.
bool is_valid_agent_name(std::string_view name) noexcept;

/// Identifier syntax, excluding the reserved words `B`, `true` and `false`.
bool is_valid_symbol(std::string_view symbol) noexcept;

class AgentId {
 public:
  explicit AgentId(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const AgentId&, const AgentId&) = default;
  friend std::strong_ordering operator<=>(const AgentId& a, const AgentId& b) {
    return a.name_ <=> b.name_;
  }

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const AgentId& agent);

enum class FormulaKind : std::uint8_t { Atom, Not, And, Believes, AfterRevision };

/// Immutable formula value. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string symbol);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula believes(AgentId agent, Formula operand);
  static Formula after_revision(AgentId agent, Formula input, Formula body);

  // Sugar, expanded into the primitive kinds.
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  FormulaKind kind() const noexcept;

  const std::string& symbol() const;   // Atom
  const Formula& operand() const;      // Not, Believes
  const Formula& lhs() const;          // And
  const Formula& rhs() const;          // And
  const AgentId& agent() const;        // Believes, AfterRevision
  const Formula& input() const;        // AfterRevision: the revision argument
  const Formula& body() const;         // AfterRevision

  bool is_atom() const noexcept { return kind() == FormulaKind::Atom; }
  bool is_modal_free() const noexcept;
  std::size_t size() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);

  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& formula);

/// Ordered proposition symbols. Declaration order fixes valuation bit
/// positions; the lexicographically smallest symbol anchors `false`.
class Vocabulary {
 public:
  static constexpr std::size_t kMaxSymbols = 16;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> index_of(std::string_view symbol) const noexcept;
  bool contains(std::string_view symbol) const noexcept { return index_of(symbol).has_value(); }

  const std::string& first_symbol() const;
  Formula bottom() const;
  Formula top() const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

 private:
  std::vector<std::string> symbols_;
};

Formula parse(std::string_view text, const Vocabulary& vocabulary,
              std::span<const AgentId> agents);

/// Canonical rendering. Negations and conjunctions carry their own
/// parentheses; modal operands that are not atoms are parenthesized.
std::string render(const Formula& formula);

bool is_agent_formula(const Formula& formula) noexcept;

/// Atom occurrences. A contradiction pattern (p & ~p), i.e. the expansion of
/// `false` and the core of `true`, counts as zero letters.
std::size_t letter_count(const Formula& formula) noexcept;

std::set<std::string> atoms_of(const Formula& formula);

/// Left-associated conjunction; empty input yields `vocabulary.top()`.
Formula conjoin(std::span<const Formula> conjuncts, const Vocabulary& vocabulary);

}  // namespace tomex
