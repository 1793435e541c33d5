#include "tomex/worlds.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "tomex/error.hpp"

namespace tomex {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t atoms) {
  return ((std::size_t{1} << atoms) + kWordBits - 1) / kWordBits;
}

// Bit patterns of the first six atoms inside one 64-valuation word.
constexpr std::uint64_t kLowAtomPatterns[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

WorldSet WorldSet::none(std::size_t atom_count) {
  if (atom_count > Vocabulary::kMaxSymbols) {
    throw Error(ErrorCode::InvalidArgument, "too many atoms for a world set");
  }
  WorldSet s;
  s.atoms_ = atom_count;
  s.words_.assign(word_count(atom_count), 0);
  return s;
}

WorldSet WorldSet::all(std::size_t atom_count) {
  WorldSet s = none(atom_count);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

WorldSet WorldSet::atom_mask(std::size_t atom_count, std::size_t atom) {
  WorldSet s = none(atom_count);
  for (std::size_t w = 0; w < s.words_.size(); ++w) {
    if (atom < 6) {
      s.words_[w] = kLowAtomPatterns[atom];
    } else {
      s.words_[w] = ((w >> (atom - 6)) & 1u) != 0 ? ~std::uint64_t{0} : 0;
    }
  }
  s.trim();
  return s;
}

void WorldSet::trim() noexcept {
  const std::size_t universe = universe_size();
  if (universe < kWordBits && !words_.empty()) {
    words_[0] &= (std::uint64_t{1} << universe) - 1;
  }
}

bool WorldSet::contains(Valuation v) const noexcept {
  if (v >= universe_size()) return false;
  return ((words_[v / kWordBits] >> (v % kWordBits)) & 1u) != 0;
}

void WorldSet::insert(Valuation v) {
  if (v >= universe_size()) throw Error(ErrorCode::InvalidArgument, "valuation out of range");
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void WorldSet::erase(Valuation v) {
  if (v >= universe_size()) return;
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

bool WorldSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t WorldSet::size() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool WorldSet::subset_of(const WorldSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool WorldSet::intersects(const WorldSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

WorldSet WorldSet::operator&(const WorldSet& other) const {
  WorldSet r = *this;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

WorldSet WorldSet::operator|(const WorldSet& other) const {
  WorldSet r = *this;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] |= other.words_[i];
  return r;
}

WorldSet WorldSet::complement() const {
  WorldSet r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

std::vector<Valuation> WorldSet::valuations() const {
  std::vector<Valuation> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Valuation>(i * kWordBits + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

WorldSet models_of(const Formula& formula, const Vocabulary& vocabulary) {
  switch (formula.kind()) {
    case FormulaKind::Atom: {
      auto index = vocabulary.index_of(formula.symbol());
      if (!index) {
        throw Error(ErrorCode::UnknownSymbol, "unknown proposition symbol '" + formula.symbol() + "'");
      }
      return WorldSet::atom_mask(vocabulary.size(), *index);
    }
    case FormulaKind::Not:
      return models_of(formula.operand(), vocabulary).complement();
    case FormulaKind::And:
      return models_of(formula.lhs(), vocabulary) & models_of(formula.rhs(), vocabulary);
    case FormulaKind::Believes:
    case FormulaKind::AfterRevision:
      break;
  }
  throw Error(ErrorCode::ModalFormulaNotAllowed,
              "modal formula where a propositional one is required: " + render(formula));
}

unsigned hamming_distance(Valuation a, Valuation b) noexcept {
  return static_cast<unsigned>(std::popcount(a ^ b));
}

unsigned min_distance(const WorldSet& from, const WorldSet& to) {
  unsigned best = std::numeric_limits<unsigned>::max();
  const auto targets = to.valuations();
  for (Valuation a : from.valuations()) {
    for (Valuation b : targets) best = std::min(best, hamming_distance(a, b));
  }
  if (best == std::numeric_limits<unsigned>::max()) {
    throw Error(ErrorCode::InvalidArgument, "distance between empty world sets");
  }
  return best;
}

WorldSet closest(const WorldSet& anchor, const WorldSet& candidates) {
  WorldSet out = WorldSet::none(candidates.atom_count());
  const auto anchors = anchor.valuations();
  if (anchors.empty()) return out;
  unsigned best = std::numeric_limits<unsigned>::max();
  std::vector<std::pair<Valuation, unsigned>> scored;
  for (Valuation c : candidates.valuations()) {
    unsigned d = std::numeric_limits<unsigned>::max();
    for (Valuation a : anchors) d = std::min(d, hamming_distance(a, c));
    scored.emplace_back(c, d);
    best = std::min(best, d);
  }
  for (auto [c, d] : scored) {
    if (d == best) out.insert(c);
  }
  return out;
}

std::vector<Formula> excluding_clauses(const WorldSet& keep, const WorldSet& within,
                                       const Vocabulary& vocabulary) {
  std::vector<Formula> clauses;
  for (Valuation v : within.valuations()) {
    if (keep.contains(v)) continue;
    std::vector<Formula> literals;
    for (std::size_t i = 0; i < vocabulary.size(); ++i) {
      Formula atom = Formula::atom(vocabulary.symbols()[i]);
      literals.push_back(((v >> i) & 1u) != 0 ? std::move(atom) : Formula::negation(std::move(atom)));
    }
    clauses.push_back(Formula::negation(conjoin(literals, vocabulary)));
  }
  return clauses;
}

std::string render_valuation(Valuation v, const Vocabulary& vocabulary) {
  std::string out;
  for (std::size_t i = 0; i < vocabulary.size(); ++i) {
    if (i > 0) out += ' ';
    if (((v >> i) & 1u) == 0) out += '~';
    out += vocabulary.symbols()[i];
  }
  return out;
}

std::string render_worlds(const WorldSet& worlds, const Vocabulary& vocabulary) {
  std::string out = "{";
  bool first = true;
  for (Valuation v : worlds.valuations()) {
    if (!first) out += "; ";
    first = false;
    out += render_valuation(v, vocabulary);
  }
  out += '}';
  return out;
}

}  // namespace tomex
