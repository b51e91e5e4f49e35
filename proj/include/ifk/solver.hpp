#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "ifk/theories.hpp"

namespace ifk {

/// Backtracking search with unit propagation. Each sequent <G, D> is read as
/// the clause (some G-type fails OR some D-type holds). Returns a state
/// satisfying every clause of both spans (unforced types default to not
/// holding), or nullopt when none exists. All scratch state is per call.
std::optional<State> find_satisfying_state(std::size_t num_types, std::span<const Sequent> clauses,
                                           std::span<const Sequent> more = {});

}  // namespace ifk
