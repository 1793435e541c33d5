// Truth at a state and objective satisfaction over a state vector.

#pragma once

#include <span>

#include "tomex/formula.hpp"
#include "tomex/pool.hpp"
#include "tomex/state.hpp"
#include "tomex/worlds.hpp"

namespace tomex {

/// Every world of `state` satisfies the modal-free `phi` (vacuous when the
/// state is inconsistent). Throws ModalFormulaNotAllowed.
bool entails(const EpistemicState& state, const Formula& phi);

/// The worlds at which `phi` holds, read from `state`: atoms from the world,
/// B[j] psi from the owner's model of j (world-independent), [alpha]_j psi
/// from the state with j's model revised by alpha.
WorldSet truth_set(const EpistemicState& state, const Formula& phi);

/// `phi` holds at every world of `state`.
bool truth_at(const EpistemicState& state, const Formula& phi);

/// Objective satisfaction. Throws NotAgentFormula for formulas with atoms
/// outside every belief operator.
bool holds(const StateVector& vector, const Formula& phi);

/// Bounded belief equivalence: agreement on every pool member and on `false`,
/// recursively after every revision sequence of pool members up to
/// `max_seq_len`. A revision that throws in both states counts as agreement.
bool states_equivalent(const EpistemicState& a, const EpistemicState& b,
                       std::span<const Formula> pool, unsigned max_seq_len = 0);
bool states_equivalent(const EpistemicState& a, const EpistemicState& b, const FormulaPool& pool,
                       unsigned max_seq_len = 0);

}  // namespace tomex
