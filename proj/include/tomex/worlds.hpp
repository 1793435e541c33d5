#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tomex/formula.hpp"

namespace tomex {

/// Bit i holds the truth value of vocabulary symbol i.
using Valuation = std::uint32_t;

/// A set of valuations over a fixed number of atoms, stored as a bitset of
/// size 2^atoms.
class WorldSet {
 public:
  WorldSet() = default;

  static WorldSet none(std::size_t atom_count);
  static WorldSet all(std::size_t atom_count);

  std::size_t atom_count() const noexcept { return atoms_; }
  std::size_t universe_size() const noexcept { return std::size_t{1} << atoms_; }

  bool contains(Valuation v) const noexcept;
  void insert(Valuation v);
  void erase(Valuation v);

  bool empty() const noexcept;
  std::size_t size() const noexcept;
  bool subset_of(const WorldSet& other) const noexcept;
  bool intersects(const WorldSet& other) const noexcept;

  WorldSet operator&(const WorldSet& other) const;
  WorldSet operator|(const WorldSet& other) const;
  WorldSet complement() const;

  std::vector<Valuation> valuations() const;

  friend bool operator==(const WorldSet&, const WorldSet&) = default;

  static WorldSet atom_mask(std::size_t atom_count, std::size_t atom);

 private:
  void trim() noexcept;

  std::size_t atoms_ = 0;
  std::vector<std::uint64_t> words_{0};
};

/// Models of a modal-free formula. Throws ModalFormulaNotAllowed otherwise.
WorldSet models_of(const Formula& formula, const Vocabulary& vocabulary);

unsigned hamming_distance(Valuation a, Valuation b) noexcept;

/// Smallest Hamming distance between any member of `from` and any member of
/// `to`. Both sets must be non-empty.
unsigned min_distance(const WorldSet& from, const WorldSet& to);

/// Members of `candidates` at minimal distance from `anchor`.
WorldSet closest(const WorldSet& anchor, const WorldSet& candidates);

/// One clause per valuation of `within` that is missing from `keep`; the
/// conjunction of the clauses restricted to `within` has exactly `keep` as
/// models.
std::vector<Formula> excluding_clauses(const WorldSet& keep, const WorldSet& within,
                                       const Vocabulary& vocabulary);

/// "rain ~holeInRoof wetFloor" style listing of one valuation.
std::string render_valuation(Valuation v, const Vocabulary& vocabulary);

/// "{...; ...}" listing of a world set.
std::string render_worlds(const WorldSet& worlds, const Vocabulary& vocabulary);

}  // namespace tomex
