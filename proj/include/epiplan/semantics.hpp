#pragma once

#include "epiplan/formula.hpp"
#include "epiplan/model.hpp"

namespace epiplan
{

// Kripke semantics. Atoms outside the model's vocabulary are false; agents
// without a relation have no successors, so their beliefs hold vacuously.
bool holds( const EpistemicModel& model, WorldId world, const Formula& phi );

inline bool satisfies( const EpistemicState& state, const Formula& phi )
{
    return holds( state.model(), state.designated(), phi );
}

} // namespace epiplan
