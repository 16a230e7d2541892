#include "epiplan/partition.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace epiplan
{

Partition Partition::from_keys( std::span< const std::uint32_t > keys )
{
    Partition result;
    result._block_of.resize( keys.size() );
    std::unordered_map< std::uint32_t, BlockId > renumber;
    for ( WorldId w = 0; w < keys.size(); ++w )
    {
        const auto [ it, inserted ] = renumber.try_emplace( keys[ w ], static_cast< BlockId >( renumber.size() ) );
        if ( inserted )
            result._blocks.emplace_back();
        result._block_of[ w ] = it->second;
        result._blocks[ it->second ].push_back( w );
    }
    return result;
}

namespace
{

// Groups worlds on an arbitrary vector key, numbering groups by first
// occurrence.
class KeyInterner
{
    std::map< std::vector< std::uint32_t >, std::uint32_t > _ids;

public:
    std::uint32_t operator()( std::vector< std::uint32_t > key )
    {
        return _ids.try_emplace( std::move( key ), static_cast< std::uint32_t >( _ids.size() ) ).first->second;
    }
};

} // namespace

Partition label_partition( const EpistemicModel& model )
{
    KeyInterner intern;
    std::vector< std::uint32_t > keys( model.world_count() );
    for ( WorldId w = 0; w < model.world_count(); ++w )
    {
        std::vector< std::uint32_t > key;
        for ( auto atom : model.label( w ).members() )
            key.push_back( index_of( atom ) );
        keys[ w ] = intern( std::move( key ) );
    }
    return Partition::from_keys( keys );
}

Partition refine( const Partition& partition, std::span< const WorldId > splitter, const EpistemicModel& model )
{
    const auto n = model.world_count();
    std::vector< bool > in_splitter( n, false );
    for ( auto w : splitter )
        in_splitter[ w ] = true;

    // Each split doubles the key space: bit k of the key records whether the
    // world has an agent-k successor inside the splitter.
    std::vector< std::uint32_t > keys( partition.block_ids().begin(), partition.block_ids().end() );
    for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
    {
        KeyInterner intern;
        for ( WorldId w = 0; w < n; ++w )
        {
            bool hit = false;
            for ( auto v : model.relations()[ agent ][ w ] )
                hit = hit || in_splitter[ v ];
            keys[ w ] = intern( { keys[ w ], hit ? 1U : 0U } );
        }
    }
    return Partition::from_keys( keys );
}

Partition refinement_round( const Partition& partition, const EpistemicModel& model )
{
    KeyInterner intern;
    std::vector< std::uint32_t > keys( model.world_count() );
    std::vector< std::uint32_t > successor_blocks;
    for ( WorldId w = 0; w < model.world_count(); ++w )
    {
        std::vector< std::uint32_t > key{ partition.block_of( w ) };
        for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
        {
            successor_blocks.clear();
            for ( auto v : model.relations()[ agent ][ w ] )
                successor_blocks.push_back( partition.block_of( v ) );
            std::sort( successor_blocks.begin(), successor_blocks.end() );
            successor_blocks.erase( std::unique( successor_blocks.begin(), successor_blocks.end() ),
                                    successor_blocks.end() );
            key.push_back( static_cast< std::uint32_t >( successor_blocks.size() ) );
            key.insert( key.end(), successor_blocks.begin(), successor_blocks.end() );
        }
        keys[ w ] = intern( std::move( key ) );
    }
    return Partition::from_keys( keys );
}

std::vector< Partition > bounded_partition_refinement( const EpistemicModel& model, unsigned b )
{
    std::vector< Partition > result;
    result.reserve( b + 1 );
    result.push_back( label_partition( model ) );
    bool stable = false;
    for ( unsigned h = 1; h <= b; ++h )
    {
        if ( stable )
        {
            result.push_back( result.back() );
            continue;
        }
        auto next = refinement_round( result.back(), model );
        stable = next == result.back();
        result.push_back( std::move( next ) );
    }
    return result;
}

Partition bisimulation_partition( const EpistemicModel& model )
{
    auto current = label_partition( model );
    while ( true )
    {
        auto next = refinement_round( current, model );
        if ( next == current )
            return current;
        current = std::move( next );
    }
}

} // namespace epiplan
