#include "epiplan/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace epiplan
{

std::vector< std::vector< Signature > > block_signatures( const EpistemicModel& model,
                                                         const std::vector< Partition >& partitions )
{
    std::vector< std::vector< Signature > > sigs( partitions.size() );
    for ( std::size_t h = 0; h < partitions.size(); ++h )
    {
        sigs[ h ].reserve( partitions[ h ].size() );
        for ( const auto& block : partitions[ h ].blocks() )
        {
            // All members of an h-block agree, so any member will do.
            const auto w = block.front();
            std::vector< SignatureEntry > entries;
            if ( h > 0 )
                for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
                {
                    SignatureEntry entry{ AgentId{ static_cast< std::uint32_t >( agent ) }, {} };
                    for ( auto v : model.relations()[ agent ][ w ] )
                        entry.children.push_back( sigs[ h - 1 ][ partitions[ h - 1 ].block_of( v ) ] );
                    entries.push_back( std::move( entry ) );
                }
            sigs[ h ].push_back( Signature::make( model.label( w ), std::move( entries ) ) );
        }
    }
    return sigs;
}

std::vector< std::vector< Signature > > h_signatures( const EpistemicModel& model, unsigned b )
{
    const auto partitions = bounded_partition_refinement( model, b );
    const auto by_block = block_signatures( model, partitions );
    std::vector< std::vector< Signature > > result( b + 1 );
    for ( unsigned h = 0; h <= b; ++h )
        for ( WorldId w = 0; w < model.world_count(); ++w )
            result[ h ].push_back( by_block[ h ][ partitions[ h ].block_of( w ) ] );
    return result;
}

SignatureTable::SignatureTable( const EpistemicState& state, unsigned b )
    : _bound{ b }, _restriction{ restrict( state, b ) }
{
    const auto& model = _restriction.state.model();
    const auto n = model.world_count();
    _partitions = bounded_partition_refinement( model, b );

    const auto depth = depth_map( _restriction.state );
    _world_bound.resize( n );
    for ( WorldId w = 0; w < n; ++w )
        _world_bound[ w ] = b - *depth[ w ];

    _block_sigs = block_signatures( model, _partitions );

    // w is maximal iff no world with a larger bound shares its
    // b(w)-signature.
    std::vector< std::unordered_map< Signature, unsigned > > best_bound( b + 1 );
    for ( WorldId y = 0; y < n; ++y )
        for ( unsigned h = 0; h <= b; ++h )
        {
            auto& best = best_bound[ h ][ signature( y, h ) ];
            best = std::max( best, _world_bound[ y ] );
        }
    _is_max_repr.assign( n, false );
    for ( WorldId w = 0; w < n; ++w )
    {
        const auto h = _world_bound[ w ];
        if ( best_bound[ h ].at( signature( w, h ) ) == h )
        {
            _is_max_repr[ w ] = true;
            _max_repr.push_back( w );
        }
    }

    _canonical.resize( b + 1 );
    for ( auto v : _max_repr )
    {
        const auto sigma = representative_signature( v );
        for ( unsigned h = 0; h <= b; ++h )
        {
            const auto [ it, inserted ] = _canonical[ h ].try_emplace( signature( v, h ), sigma );
            if ( !inserted && sigma < it->second )
                it->second = sigma;
        }
    }
}

Signature SignatureTable::signature( WorldId w, unsigned h ) const
{
    return _block_sigs[ h ][ _partitions[ h ].block_of( w ) ];
}

Signature SignatureTable::canonical_signature( WorldId w, unsigned h ) const
{
    if ( h > _bound )
        throw std::logic_error( "canonical signature requested above the table bound" );
    const auto it = _canonical[ h ].find( signature( w, h ) );
    if ( it == _canonical[ h ].end() )
        throw std::logic_error( "no maximal representative shares the " + std::to_string( h ) +
                                "-signature of world " + std::to_string( w ) );
    return it->second;
}

CanonicalState canonical_contraction( const EpistemicState& state, unsigned b )
{
    const SignatureTable table{ state, b };
    const auto& model = table.state().model();

    std::vector< Signature > worlds;
    for ( auto x : table.max_representatives() )
        worlds.push_back( table.representative_signature( x ) );
    std::sort( worlds.begin(), worlds.end() );
    worlds.erase( std::unique( worlds.begin(), worlds.end() ), worlds.end() );

    std::unordered_map< Signature, WorldId > index;
    for ( WorldId k = 0; k < worlds.size(); ++k )
        index.emplace( worlds[ k ], k );

    std::vector< AtomSet > labels;
    labels.reserve( worlds.size() );
    for ( auto sig : worlds )
        labels.push_back( sig.label() );

    std::vector< EpistemicModel::Adjacency > relations( model.agent_count(),
                                                        EpistemicModel::Adjacency( worlds.size() ) );
    for ( auto x : table.max_representatives() )
    {
        const auto bx = table.world_bound( x );
        if ( bx == 0 )
            continue;
        const auto source = index.at( table.representative_signature( x ) );
        for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
            for ( auto y : model.relations()[ agent ][ x ] )
                relations[ agent ][ source ].push_back( index.at( table.canonical_signature( y, bx - 1 ) ) );
    }

    const auto designated = index.at( table.representative_signature( table.state().designated() ) );
    return CanonicalState{
        EpistemicState{ EpistemicModel{ model.vocabulary_ptr(), std::move( labels ), std::move( relations ) },
                        designated },
        std::move( worlds ) };
}

RootedState rooted_contraction( const EpistemicState& state, unsigned b, std::span< const std::size_t > order )
{
    if ( !order.empty() && order.size() != state.world_count() )
        throw std::invalid_argument( "world order does not cover the state" );

    const SignatureTable table{ state, b };
    const auto& restriction = table.restriction();
    const auto& model = table.state().model();
    const auto& partitions = table.partitions();

    const auto rank = [ & ]( WorldId w ) -> std::size_t
    {
        const auto original = restriction.new_to_old[ w ];
        return order.empty() ? original : order[ original ];
    };
    const auto earlier = [ & ]( WorldId a, WorldId b ) { return rank( a ) < rank( b ); };

    // Representative classes keyed by (b(x), block of x in P_b(x)).
    std::map< std::pair< unsigned, BlockId >, WorldId > least_member;
    const auto class_key = [ & ]( WorldId x )
    {
        const auto h = table.world_bound( x );
        return std::pair{ h, partitions[ h ].block_of( x ) };
    };
    for ( auto x : table.max_representatives() )
    {
        const auto [ it, inserted ] = least_member.try_emplace( class_key( x ), x );
        if ( !inserted && earlier( x, it->second ) )
            it->second = x;
    }

    std::vector< WorldId > members;
    for ( const auto& [ key, x ] : least_member )
        members.push_back( x );
    std::sort( members.begin(), members.end(), earlier );
    std::map< std::pair< unsigned, BlockId >, WorldId > class_index;
    for ( WorldId k = 0; k < members.size(); ++k )
        class_index.emplace( class_key( members[ k ] ), k );

    // least_repr[h][block]: least maximal representative in that h-block.
    std::vector< std::unordered_map< BlockId, WorldId > > least_repr( b + 1 );
    for ( auto v : table.max_representatives() )
        for ( unsigned h = 0; h <= b; ++h )
        {
            const auto [ it, inserted ] = least_repr[ h ].try_emplace( partitions[ h ].block_of( v ), v );
            if ( !inserted && earlier( v, it->second ) )
                it->second = v;
        }

    std::vector< AtomSet > labels;
    std::vector< std::string > names;
    std::vector< WorldId > representatives;
    for ( auto x : members )
    {
        labels.push_back( model.label( x ) );
        representatives.push_back( restriction.new_to_old[ x ] );
        if ( model.has_names() )
            names.push_back( model.names()[ x ] );
    }

    std::vector< EpistemicModel::Adjacency > relations( model.agent_count(),
                                                        EpistemicModel::Adjacency( members.size() ) );
    for ( auto x : table.max_representatives() )
    {
        const auto bx = table.world_bound( x );
        if ( bx == 0 )
            continue;
        const auto source = class_index.at( class_key( x ) );
        for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
            for ( auto y : model.relations()[ agent ][ x ] )
            {
                const auto target = least_repr[ bx - 1 ].at( partitions[ bx - 1 ].block_of( y ) );
                relations[ agent ][ source ].push_back( class_index.at( class_key( target ) ) );
            }
    }

    const auto designated = class_index.at( class_key( table.state().designated() ) );
    return RootedState{ EpistemicState{ EpistemicModel{ model.vocabulary_ptr(), std::move( labels ),
                                                        std::move( relations ), std::move( names ) },
                                        designated },
                        std::move( representatives ) };
}

namespace
{

void put_u32( std::string& out, std::uint32_t value )
{
    out.push_back( static_cast< char >( value >> 24 ) );
    out.push_back( static_cast< char >( value >> 16 ) );
    out.push_back( static_cast< char >( value >> 8 ) );
    out.push_back( static_cast< char >( value ) );
}

void collect( Signature sig, std::unordered_map< Signature, std::uint32_t >& seen, std::vector< Signature >& nodes )
{
    if ( !seen.try_emplace( sig, 0 ).second )
        return;
    nodes.push_back( sig );
    for ( const auto& entry : sig.entries() )
        for ( auto child : entry.children )
            collect( child, seen, nodes );
}

} // namespace

std::string encode_state( const EpistemicState& state, std::span< const Signature > world_signatures )
{
    const auto& model = state.model();
    if ( world_signatures.size() != model.world_count() )
        throw std::invalid_argument( "state worlds are not named by signatures" );

    std::unordered_map< Signature, std::uint32_t > rank;
    std::vector< Signature > nodes;
    for ( WorldId w = 0; w < model.world_count(); ++w )
    {
        if ( world_signatures[ w ].label() != model.label( w ) )
            throw std::invalid_argument( "world " + std::to_string( w ) + " label differs from its signature" );
        collect( world_signatures[ w ], rank, nodes );
    }
    std::sort( nodes.begin(), nodes.end() );
    for ( std::uint32_t k = 0; k < nodes.size(); ++k )
        rank[ nodes[ k ] ] = k;

    std::string out;
    put_u32( out, static_cast< std::uint32_t >( nodes.size() ) );
    for ( auto node : nodes )
    {
        put_u32( out, static_cast< std::uint32_t >( node.atoms().size() ) );
        for ( auto atom : node.atoms() )
            put_u32( out, atom );
        put_u32( out, static_cast< std::uint32_t >( node.entries().size() ) );
        for ( const auto& entry : node.entries() )
        {
            put_u32( out, index_of( entry.agent ) );
            put_u32( out, static_cast< std::uint32_t >( entry.children.size() ) );
            for ( auto child : entry.children )
                put_u32( out, rank.at( child ) );
        }
    }

    std::vector< std::uint32_t > world_rank( model.world_count() );
    for ( WorldId w = 0; w < model.world_count(); ++w )
        world_rank[ w ] = rank.at( world_signatures[ w ] );
    std::vector< std::uint32_t > sorted_worlds = world_rank;
    std::sort( sorted_worlds.begin(), sorted_worlds.end() );
    if ( std::adjacent_find( sorted_worlds.begin(), sorted_worlds.end() ) != sorted_worlds.end() )
        throw std::invalid_argument( "two worlds carry the same signature" );

    put_u32( out, static_cast< std::uint32_t >( sorted_worlds.size() ) );
    for ( auto r : sorted_worlds )
        put_u32( out, r );

    put_u32( out, static_cast< std::uint32_t >( model.agent_count() ) );
    std::vector< std::pair< std::uint32_t, std::uint32_t > > edges;
    for ( const auto& adjacency : model.relations() )
    {
        edges.clear();
        for ( WorldId w = 0; w < model.world_count(); ++w )
            for ( auto v : adjacency[ w ] )
                edges.emplace_back( world_rank[ w ], world_rank[ v ] );
        std::sort( edges.begin(), edges.end() );
        put_u32( out, static_cast< std::uint32_t >( edges.size() ) );
        for ( auto [ from, to ] : edges )
        {
            put_u32( out, from );
            put_u32( out, to );
        }
    }

    put_u32( out, world_rank[ state.designated() ] );
    return out;
}

std::string encode_state( const CanonicalState& state )
{
    return encode_state( state.state, state.world_signatures );
}

} // namespace epiplan
