#pragma once

#include "epiplan/model.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace epiplan
{

using BlockId = std::uint32_t;

// Partition of a model's worlds. Block ids follow the smallest world of each
// block, so equal partitions have identical representations.
class Partition
{
    std::vector< std::vector< WorldId > > _blocks;
    std::vector< BlockId > _block_of;

public:
    Partition() = default;

    // Builds a partition from arbitrary per-world keys: worlds with equal keys
    // share a block. Keys are renumbered by first occurrence.
    static Partition from_keys( std::span< const std::uint32_t > keys );

    [[nodiscard]] std::size_t size() const { return _blocks.size(); }
    [[nodiscard]] std::size_t world_count() const { return _block_of.size(); }
    [[nodiscard]] const std::vector< std::vector< WorldId > >& blocks() const { return _blocks; }
    [[nodiscard]] const std::vector< WorldId >& block( BlockId id ) const { return _blocks[ id ]; }
    [[nodiscard]] BlockId block_of( WorldId w ) const { return _block_of[ w ]; }
    [[nodiscard]] const std::vector< BlockId >& block_ids() const { return _block_of; }

    friend bool operator==( const Partition& a, const Partition& b ) { return a._block_of == b._block_of; }
};

// Worlds grouped by label.
Partition label_partition( const EpistemicModel& model );

// Splits every block B against the i-predecessors of S, agent by agent:
// B becomes B ∩ R_i⁻¹(S) and B \ R_i⁻¹(S) when both are non-empty.
Partition refine( const Partition& partition, std::span< const WorldId > splitter, const EpistemicModel& model );

// One refinement round: refines against every block of the (frozen) input
// partition. Computed by grouping worlds on their old block plus, per agent,
// the set of blocks their successors fall into.
Partition refinement_round( const Partition& partition, const EpistemicModel& model );

// [P_0, ..., P_b] where the block of x in P_h is the set of worlds
// h-bisimilar to x. Stops refining once stable and repeats the last
// partition up to index b.
std::vector< Partition > bounded_partition_refinement( const EpistemicModel& model, unsigned b );

// Coarsest bisimulation: refinement run to stability.
Partition bisimulation_partition( const EpistemicModel& model );

} // namespace epiplan
