#include "epiplan/action.hpp"

#include "epiplan/semantics.hpp"

#include <algorithm>

namespace epiplan
{

Action::Action( std::string name, std::vector< Event > events, std::vector< Adjacency > relations, EventId designated )
    : _name{ std::move( name ) }, _events{ std::move( events ) }, _relations{ std::move( relations ) },
      _designated{ designated }
{
    if ( _events.empty() )
        throw std::invalid_argument( "action '" + _name + "' has no events" );
    if ( _designated >= _events.size() )
        throw std::invalid_argument( "action '" + _name + "' designates a missing event" );

    for ( auto& event : _events )
    {
        auto& post = event.postconditions;
        std::erase_if( post, []( const auto& entry )
                       { return entry.second.kind() == Formula::Kind::atom && entry.second.atom_id() == entry.first; } );
        std::stable_sort( post.begin(), post.end(),
                          []( const auto& a, const auto& b ) { return index_of( a.first ) < index_of( b.first ); } );
        for ( std::size_t i = 1; i < post.size(); ++i )
            if ( post[ i ].first == post[ i - 1 ].first )
                throw std::invalid_argument( "event '" + event.name + "' assigns an atom twice" );

        _depth = std::max( _depth, event.precondition.modal_depth() );
        for ( const auto& [ atom, formula ] : post )
            _depth = std::max( _depth, formula.modal_depth() );
    }

    for ( auto& adjacency : _relations )
    {
        adjacency.resize( _events.size() );
        for ( auto& successors : adjacency )
        {
            std::sort( successors.begin(), successors.end() );
            successors.erase( std::unique( successors.begin(), successors.end() ), successors.end() );
            if ( !successors.empty() && successors.back() >= _events.size() )
                throw std::invalid_argument( "action '" + _name + "' has an edge to a missing event" );
        }
    }
}

std::span< const EventId > Action::successors( AgentId agent, EventId e ) const
{
    const auto i = index_of( agent );
    if ( i >= _relations.size() )
        return {};
    return _relations[ i ][ e ];
}

bool operator==( const Action& a, const Action& b )
{
    if ( a._name != b._name || a._designated != b._designated || a._events.size() != b._events.size() )
        return false;
    for ( std::size_t e = 0; e < a._events.size(); ++e )
    {
        const auto& x = a._events[ e ];
        const auto& y = b._events[ e ];
        if ( x.name != y.name || !( x.precondition == y.precondition ) || x.postconditions != y.postconditions )
            return false;
    }
    // Missing agent relations are empty.
    const auto agents = std::max( a._relations.size(), b._relations.size() );
    for ( std::size_t i = 0; i < agents; ++i )
        for ( EventId e = 0; e < a._events.size(); ++e )
        {
            const auto sa = a.successors( AgentId{ static_cast< std::uint32_t >( i ) }, e );
            const auto sb = b.successors( AgentId{ static_cast< std::uint32_t >( i ) }, e );
            if ( !std::equal( sa.begin(), sa.end(), sb.begin(), sb.end() ) )
                return false;
        }
    return true;
}

Action public_announcement( std::string name, Formula precondition, std::size_t agent_count )
{
    std::vector< Event > events{ Event{ "e", std::move( precondition ), {} } };
    std::vector< Action::Adjacency > relations( agent_count, Action::Adjacency{ { 0 } } );
    return Action{ std::move( name ), std::move( events ), std::move( relations ), 0 };
}

bool applicable( const EpistemicState& state, const Action& action )
{
    return satisfies( state, action.event( action.designated() ).precondition );
}

EpistemicState product_update( const EpistemicState& state, const Action& action )
{
    if ( !applicable( state, action ) )
        throw NotApplicable( "action '" + action.name() + "' is not applicable" );

    const auto& model = state.model();
    const auto events = static_cast< EventId >( action.event_count() );

    // pair_index[w * events + e] = new world id, if (w, e) survives.
    std::vector< std::optional< WorldId > > pair_index( model.world_count() * events );
    std::vector< std::pair< WorldId, EventId > > pairs;
    std::vector< AtomSet > labels;
    for ( WorldId w = 0; w < model.world_count(); ++w )
        for ( EventId e = 0; e < events; ++e )
        {
            const auto& event = action.event( e );
            if ( !holds( model, w, event.precondition ) )
                continue;
            pair_index[ w * events + e ] = static_cast< WorldId >( pairs.size() );
            pairs.emplace_back( w, e );
            auto label = model.label( w );
            for ( const auto& [ atom, formula ] : event.postconditions )
                label.assign( atom, holds( model, w, formula ) );
            labels.push_back( std::move( label ) );
        }

    std::vector< EpistemicModel::Adjacency > relations( model.agent_count(),
                                                        EpistemicModel::Adjacency( pairs.size() ) );
    for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
    {
        const AgentId id{ static_cast< std::uint32_t >( agent ) };
        for ( WorldId k = 0; k < pairs.size(); ++k )
        {
            const auto [ w, e ] = pairs[ k ];
            for ( auto v : model.successors( id, w ) )
                for ( auto f : action.successors( id, e ) )
                    if ( const auto target = pair_index[ v * events + f ] )
                        relations[ agent ][ k ].push_back( *target );
        }
    }

    const auto designated = *pair_index[ state.designated() * events + action.designated() ];
    return EpistemicState{ EpistemicModel{ model.vocabulary_ptr(), std::move( labels ), std::move( relations ) },
                           designated };
}

} // namespace epiplan
