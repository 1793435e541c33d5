#include "tomex/formula.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "tomex/error.hpp"

namespace tomex {

namespace {

bool is_ident_start(char c) noexcept {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_ident_char(char c) noexcept {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

bool is_valid_agent_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  if (!(std::islower(static_cast<unsigned char>(name.front())) != 0 || name.front() == '_')) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::islower(static_cast<unsigned char>(c)) != 0 ||
           std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

bool is_valid_symbol(std::string_view symbol) noexcept {
  if (symbol.empty() || !is_ident_start(symbol.front())) return false;
  if (!std::all_of(symbol.begin(), symbol.end(), is_ident_char)) return false;
  return symbol != "B" && symbol != "true" && symbol != "false";
}

AgentId::AgentId(std::string name) : name_(std::move(name)) {
  if (!is_valid_agent_name(name_)) {
    throw Error(ErrorCode::InvalidArgument, "invalid agent name '" + name_ + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const AgentId& agent) { return os << agent.name(); }

// ---------------------------------------------------------------------------

struct Formula::Node {
  FormulaKind kind;
  std::string symbol;
  std::optional<AgentId> agent;
  std::vector<Formula> children;
  bool modal_free = true;
  std::size_t size = 1;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string symbol) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Atom;
  node->symbol = std::move(symbol);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Not;
  node->modal_free = operand.is_modal_free();
  node->size = 1 + operand.size();
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::And;
  node->modal_free = lhs.is_modal_free() && rhs.is_modal_free();
  node->size = 1 + lhs.size() + rhs.size();
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return Formula(std::move(node));
}

Formula Formula::believes(AgentId agent, Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::Believes;
  node->agent = std::move(agent);
  node->modal_free = false;
  node->size = 1 + operand.size();
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

Formula Formula::after_revision(AgentId agent, Formula input, Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = FormulaKind::AfterRevision;
  node->agent = std::move(agent);
  node->modal_free = false;
  node->size = 1 + input.size() + body.size();
  node->children.push_back(std::move(input));
  node->children.push_back(std::move(body));
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::symbol() const { return node_->symbol; }
const Formula& Formula::operand() const { return node_->children.at(0); }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }
const AgentId& Formula::agent() const { return node_->agent.value(); }
const Formula& Formula::input() const { return node_->children.at(0); }
const Formula& Formula::body() const { return node_->children.at(1); }

bool Formula::is_modal_free() const noexcept { return node_->modal_free; }
std::size_t Formula::size() const noexcept { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size) return false;
  if (x.symbol != y.symbol || x.agent != y.agent) return false;
  return x.children == y.children;
}

std::ostream& operator<<(std::ostream& os, const Formula& formula) {
  return os << render(formula);
}

// ---------------------------------------------------------------------------

Vocabulary::Vocabulary(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() > kMaxSymbols) {
    throw Error(ErrorCode::InvalidArgument,
                "vocabulary has " + std::to_string(symbols_.size()) + " symbols; at most " +
                    std::to_string(kMaxSymbols) + " are supported");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!is_valid_symbol(symbols_[i])) {
      throw Error(ErrorCode::InvalidArgument, "invalid proposition symbol '" + symbols_[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols_[j] == symbols_[i]) {
        throw Error(ErrorCode::InvalidArgument, "duplicate proposition symbol '" + symbols_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view symbol) const noexcept {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return i;
  }
  return std::nullopt;
}

const std::string& Vocabulary::first_symbol() const {
  if (symbols_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "empty vocabulary has no contradiction constant");
  }
  return *std::min_element(symbols_.begin(), symbols_.end());
}

Formula Vocabulary::bottom() const {
  const auto& p = first_symbol();
  return Formula::conjunction(Formula::atom(p), Formula::negation(Formula::atom(p)));
}

Formula Vocabulary::top() const { return Formula::negation(bottom()); }

// ---------------------------------------------------------------------------
// Parser: hand-written recursive descent over characters.

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Vocabulary& vocabulary, std::span<const AgentId> agents)
      : text_(text), vocabulary_(vocabulary), agents_(agents) {}

  Formula parse_all() {
    Formula result = parse_implies();
    skip_ws();
    if (pos_ != text_.size()) fail({"'&'", "'|'", "'->'", "end of input"});
    return result;
  }

 private:
  Formula parse_implies() {
    Formula lhs = parse_or();
    skip_ws();
    if (lookahead("->")) {
      pos_ += 2;
      Formula rhs = parse_implies();
      return Formula::implication(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    for (;;) {
      skip_ws();
      if (!lookahead("|")) return lhs;
      ++pos_;
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (!lookahead("&")) return lhs;
      ++pos_;
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail(unary_starts());
    const char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    if (lookahead("B[")) {
      pos_ += 2;
      AgentId agent = parse_agent();
      skip_ws();
      expect("]");
      return Formula::believes(std::move(agent), parse_unary());
    }
    if (c == '[') {
      ++pos_;
      Formula input = parse_implies();
      skip_ws();
      expect("]_");
      AgentId agent = parse_agent();
      return Formula::after_revision(std::move(agent), std::move(input), parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Formula inner = parse_implies();
      skip_ws();
      expect(")");
      return inner;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      std::string ident = read_ident();
      if (ident == "true") return vocabulary_.top();
      if (ident == "false") return vocabulary_.bottom();
      if (!vocabulary_.contains(ident)) {
        throw Error(ErrorCode::UnknownSymbol, "unknown proposition symbol '" + ident +
                                                  "' at position " + std::to_string(start));
      }
      return Formula::atom(std::move(ident));
    }
    fail(unary_starts());
  }

  AgentId parse_agent() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail({"agent name"});
    std::string name = read_ident();
    const bool known = std::any_of(agents_.begin(), agents_.end(),
                                   [&](const AgentId& a) { return a.name() == name; });
    if (!known) {
      throw Error(ErrorCode::UnknownAgent,
                  "unknown agent '" + name + "' at position " + std::to_string(start));
    }
    return AgentId(std::move(name));
  }

  std::string read_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool lookahead(std::string_view token) const {
    return text_.substr(pos_, token.size()) == token;
  }

  void expect(std::string_view token) {
    if (!lookahead(token)) fail({"'" + std::string(token) + "'"});
    pos_ += token.size();
  }

  static std::vector<std::string> unary_starts() {
    return {"'~'", "'B['", "'['", "'('", "atom", "'true'", "'false'"};
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = pos_ >= text_.size() ? "end of input"
                                             : "'" + std::string(1, text_[pos_]) + "'";
    throw SyntaxError(pos_, std::move(expected), found);
  }

  std::string_view text_;
  const Vocabulary& vocabulary_;
  std::span<const AgentId> agents_;
  std::size_t pos_ = 0;
};

void render_into(const Formula& f, std::string& out);

void render_operand(const Formula& f, std::string& out) {
  if (f.kind() == FormulaKind::Believes || f.kind() == FormulaKind::AfterRevision) {
    out += '(';
    render_into(f, out);
    out += ')';
  } else {
    render_into(f, out);
  }
}

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.symbol();
      return;
    case FormulaKind::Not:
      out += "(~";
      render_operand(f.operand(), out);
      out += ')';
      return;
    case FormulaKind::And:
      out += '(';
      render_operand(f.lhs(), out);
      out += " & ";
      render_operand(f.rhs(), out);
      out += ')';
      return;
    case FormulaKind::Believes:
      out += "B[";
      out += f.agent().name();
      out += "] ";
      render_operand(f.operand(), out);
      return;
    case FormulaKind::AfterRevision:
      out += '[';
      render_into(f.input(), out);
      out += "]_";
      out += f.agent().name();
      out += ' ';
      render_operand(f.body(), out);
      return;
  }
}

bool is_contradiction_pattern(const Formula& f) {
  return f.kind() == FormulaKind::And && f.lhs().is_atom() &&
         f.rhs().kind() == FormulaKind::Not && f.rhs().operand().is_atom() &&
         f.lhs().symbol() == f.rhs().operand().symbol();
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom: out.insert(f.symbol()); return;
    case FormulaKind::Not:
    case FormulaKind::Believes: collect_atoms(f.operand(), out); return;
    case FormulaKind::And:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
    case FormulaKind::AfterRevision:
      collect_atoms(f.input(), out);
      collect_atoms(f.body(), out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text, const Vocabulary& vocabulary,
              std::span<const AgentId> agents) {
  return Parser(text, vocabulary, agents).parse_all();
}

std::string render(const Formula& formula) {
  std::string out;
  render_into(formula, out);
  return out;
}

bool is_agent_formula(const Formula& formula) noexcept {
  switch (formula.kind()) {
    case FormulaKind::Atom: return false;
    case FormulaKind::Believes: return true;
    case FormulaKind::Not: return is_agent_formula(formula.operand());
    case FormulaKind::And: return is_agent_formula(formula.lhs()) && is_agent_formula(formula.rhs());
    case FormulaKind::AfterRevision: return is_agent_formula(formula.body());
  }
  return false;
}

std::size_t letter_count(const Formula& formula) noexcept {
  switch (formula.kind()) {
    case FormulaKind::Atom: return 1;
    case FormulaKind::Not:
    case FormulaKind::Believes: return letter_count(formula.operand());
    case FormulaKind::And:
      if (is_contradiction_pattern(formula)) return 0;
      return letter_count(formula.lhs()) + letter_count(formula.rhs());
    case FormulaKind::AfterRevision:
      return letter_count(formula.input()) + letter_count(formula.body());
  }
  return 0;
}

std::set<std::string> atoms_of(const Formula& formula) {
  std::set<std::string> out;
  collect_atoms(formula, out);
  return out;
}

Formula conjoin(std::span<const Formula> conjuncts, const Vocabulary& vocabulary) {
  if (conjuncts.empty()) return vocabulary.top();
  Formula result = conjuncts.front();
  for (std::size_t i = 1; i < conjuncts.size(); ++i) {
    result = Formula::conjunction(std::move(result), conjuncts[i]);
  }
  return result;
}

}  // namespace tomex
