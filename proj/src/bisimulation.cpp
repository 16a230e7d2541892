#include "epiplan/bisimulation.hpp"

namespace epiplan
{

bool b_bisimilar( const EpistemicState& s, const EpistemicState& t, unsigned b )
{
    const auto joined = disjoint_union( s.model(), t.model() );
    const auto partitions = bounded_partition_refinement( joined.model, b );
    const auto& last = partitions.back();
    return last.block_of( s.designated() ) == last.block_of( joined.offset + t.designated() );
}

bool bisimilar( const EpistemicState& s, const EpistemicState& t )
{
    const auto joined = disjoint_union( s.model(), t.model() );
    const auto partition = bisimulation_partition( joined.model );
    return partition.block_of( s.designated() ) == partition.block_of( joined.offset + t.designated() );
}

EpistemicState quotient( const EpistemicState& state, const Partition& partition )
{
    const auto& model = state.model();
    std::vector< AtomSet > labels;
    labels.reserve( partition.size() );
    for ( const auto& block : partition.blocks() )
        labels.push_back( model.label( block.front() ) );

    std::vector< EpistemicModel::Adjacency > relations( model.agent_count(),
                                                        EpistemicModel::Adjacency( partition.size() ) );
    for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
        for ( WorldId w = 0; w < model.world_count(); ++w )
            for ( auto v : model.relations()[ agent ][ w ] )
                relations[ agent ][ partition.block_of( w ) ].push_back( partition.block_of( v ) );

    return EpistemicState{ EpistemicModel{ model.vocabulary_ptr(), std::move( labels ), std::move( relations ) },
                           partition.block_of( state.designated() ) };
}

EpistemicState standard_contraction( const EpistemicState& state )
{
    return quotient( state, bisimulation_partition( state.model() ) );
}

EpistemicState standard_b_contraction( const EpistemicState& state, unsigned b )
{
    return quotient( state, bounded_partition_refinement( state.model(), b ).back() );
}

} // namespace epiplan
