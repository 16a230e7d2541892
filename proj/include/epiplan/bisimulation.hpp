#pragma once

#include "epiplan/model.hpp"
#include "epiplan/partition.hpp"

namespace epiplan
{

// Designated worlds are b-bisimilar. Vocabularies are merged by name.
bool b_bisimilar( const EpistemicState& s, const EpistemicState& t, unsigned b );

bool bisimilar( const EpistemicState& s, const EpistemicState& t );

// Quotient of the state by a partition of its worlds: one world per block
// (in block order), label of the block's first world, edges lifted
// blockwise.
EpistemicState quotient( const EpistemicState& state, const Partition& partition );

// Quotient by full bisimilarity.
EpistemicState standard_contraction( const EpistemicState& state );

// Quotient by b-bisimilarity.
EpistemicState standard_b_contraction( const EpistemicState& state, unsigned b );

} // namespace epiplan
