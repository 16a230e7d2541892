#include "epiplan/model.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace epiplan
{

// ---------------------------------------------------------------- AtomSet

AtomSet::AtomSet( std::initializer_list< AtomId > atoms )
{
    for ( auto atom : atoms )
        insert( atom );
}

bool AtomSet::contains( AtomId atom ) const
{
    const auto i = index_of( atom );
    const auto word = i / 64;
    return word < _words.size() && ( _words[ word ] >> ( i % 64 ) & 1U ) != 0;
}

void AtomSet::insert( AtomId atom )
{
    const auto i = index_of( atom );
    if ( i / 64 >= _words.size() )
        _words.resize( i / 64 + 1, 0 );
    _words[ i / 64 ] |= std::uint64_t{ 1 } << ( i % 64 );
}

void AtomSet::erase( AtomId atom )
{
    const auto i = index_of( atom );
    if ( i / 64 < _words.size() )
        _words[ i / 64 ] &= ~( std::uint64_t{ 1 } << ( i % 64 ) );
}

std::vector< AtomId > AtomSet::members() const
{
    std::vector< AtomId > result;
    for ( std::size_t word = 0; word < _words.size(); ++word )
    {
        auto bits = _words[ word ];
        while ( bits != 0 )
        {
            const auto bit = static_cast< std::uint32_t >( std::countr_zero( bits ) );
            result.push_back( AtomId{ static_cast< std::uint32_t >( word * 64 ) + bit } );
            bits &= bits - 1;
        }
    }
    return result;
}

std::size_t AtomSet::size() const
{
    std::size_t count = 0;
    for ( auto word : _words )
        count += static_cast< std::size_t >( std::popcount( word ) );
    return count;
}

namespace
{

std::size_t significant_words( const std::vector< std::uint64_t >& words )
{
    auto n = words.size();
    while ( n > 0 && words[ n - 1 ] == 0 )
        --n;
    return n;
}

} // namespace

std::size_t AtomSet::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const auto n = significant_words( _words );
    for ( std::size_t i = 0; i < n; ++i )
        h ^= std::hash< std::uint64_t >{}( _words[ i ] ) + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 );
    return h;
}

bool operator==( const AtomSet& a, const AtomSet& b )
{
    const auto n = significant_words( a._words );
    if ( n != significant_words( b._words ) )
        return false;
    return std::equal( a._words.begin(), a._words.begin() + static_cast< std::ptrdiff_t >( n ), b._words.begin() );
}

std::strong_ordering operator<=>( const AtomSet& a, const AtomSet& b )
{
    // Orders by the ascending member list, matching the signature encoding.
    const auto ma = a.members();
    const auto mb = b.members();
    if ( ma.size() != mb.size() )
        return ma.size() <=> mb.size();
    for ( std::size_t i = 0; i < ma.size(); ++i )
        if ( ma[ i ] != mb[ i ] )
            return index_of( ma[ i ] ) <=> index_of( mb[ i ] );
    return std::strong_ordering::equal;
}

// --------------------------------------------------------- EpistemicModel

EpistemicModel::EpistemicModel( VocabularyPtr vocabulary, std::vector< AtomSet > labels,
                                std::vector< Adjacency > relations, std::vector< std::string > names )
    : _vocabulary{ std::move( vocabulary ) }, _labels{ std::move( labels ) }, _relations{ std::move( relations ) },
      _names{ std::move( names ) }
{
    if ( !_vocabulary )
        throw std::invalid_argument( "epistemic model without vocabulary" );
    if ( _labels.empty() )
        throw std::invalid_argument( "epistemic model must have at least one world" );
    if ( _relations.size() > _vocabulary->agent_count() )
        throw std::invalid_argument( "more relations than agents in the vocabulary" );
    if ( !_names.empty() && _names.size() != _labels.size() )
        throw std::invalid_argument( "world name count does not match world count" );

    const auto n = _labels.size();
    for ( const auto& label : _labels )
        for ( auto atom : label.members() )
            if ( index_of( atom ) >= _vocabulary->atom_count() )
                throw std::invalid_argument( "world label mentions an atom outside the vocabulary" );

    _relations.resize( _vocabulary->agent_count() );
    for ( auto& adjacency : _relations )
    {
        adjacency.resize( n );
        for ( auto& successors : adjacency )
        {
            std::sort( successors.begin(), successors.end() );
            successors.erase( std::unique( successors.begin(), successors.end() ), successors.end() );
            if ( !successors.empty() && successors.back() >= n )
                throw std::invalid_argument( "relation edge points to world " + std::to_string( successors.back() ) +
                                             " outside the model" );
        }
    }
}

std::span< const WorldId > EpistemicModel::successors( AgentId agent, WorldId w ) const
{
    const auto i = index_of( agent );
    if ( i >= _relations.size() )
        return {};
    return _relations[ i ][ w ];
}

std::size_t EpistemicModel::edge_count() const
{
    std::size_t count = 0;
    for ( const auto& adjacency : _relations )
        for ( const auto& successors : adjacency )
            count += successors.size();
    return count;
}

std::string EpistemicModel::world_name( WorldId w ) const
{
    if ( has_names() )
        return _names[ w ];
    return "w" + std::to_string( w );
}

bool operator==( const EpistemicModel& a, const EpistemicModel& b )
{
    return ( a._vocabulary == b._vocabulary || *a._vocabulary == *b._vocabulary ) && a._labels == b._labels &&
           a._relations == b._relations;
}

EpistemicState::EpistemicState( EpistemicModel model, WorldId designated )
    : _model{ std::move( model ) }, _designated{ designated }
{
    if ( _designated >= _model.world_count() )
        throw std::invalid_argument( "designated world " + std::to_string( designated ) + " outside the model" );
}

// --------------------------------------------------------- depth / restrict

std::vector< std::optional< unsigned > > depth_map( const EpistemicState& state )
{
    const auto& model = state.model();
    std::vector< std::optional< unsigned > > depth( model.world_count() );
    std::deque< WorldId > queue{ state.designated() };
    depth[ state.designated() ] = 0;
    while ( !queue.empty() )
    {
        const auto w = queue.front();
        queue.pop_front();
        for ( const auto& adjacency : model.relations() )
            for ( auto v : adjacency[ w ] )
                if ( !depth[ v ] )
                {
                    depth[ v ] = *depth[ w ] + 1;
                    queue.push_back( v );
                }
    }
    return depth;
}

Restriction restrict( const EpistemicState& state, unsigned max_depth )
{
    const auto& model = state.model();
    const auto depth = depth_map( state );

    std::vector< std::optional< WorldId > > old_to_new( model.world_count() );
    std::vector< WorldId > new_to_old;
    for ( WorldId w = 0; w < model.world_count(); ++w )
        if ( depth[ w ] && *depth[ w ] <= max_depth )
        {
            old_to_new[ w ] = static_cast< WorldId >( new_to_old.size() );
            new_to_old.push_back( w );
        }

    std::vector< AtomSet > labels;
    std::vector< std::string > names;
    for ( auto w : new_to_old )
    {
        labels.push_back( model.label( w ) );
        if ( model.has_names() )
            names.push_back( model.names()[ w ] );
    }

    std::vector< EpistemicModel::Adjacency > relations( model.agent_count(),
                                                        EpistemicModel::Adjacency( new_to_old.size() ) );
    for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
        for ( WorldId nw = 0; nw < new_to_old.size(); ++nw )
            for ( auto v : model.relations()[ agent ][ new_to_old[ nw ] ] )
                if ( old_to_new[ v ] )
                    relations[ agent ][ nw ].push_back( *old_to_new[ v ] );

    EpistemicModel restricted{ model.vocabulary_ptr(), std::move( labels ), std::move( relations ),
                               std::move( names ) };
    return Restriction{ EpistemicState{ std::move( restricted ), *old_to_new[ state.designated() ] },
                        std::move( old_to_new ), std::move( new_to_old ) };
}

Restriction reachable_part( const EpistemicState& state )
{
    return restrict( state, static_cast< unsigned >( state.world_count() ) );
}

// ------------------------------------------------------------ union etc.

namespace
{

VocabularyPtr merge_vocabularies( const VocabularyPtr& first, const VocabularyPtr& second )
{
    if ( first == second || *first == *second )
        return first;
    auto merged = std::make_shared< Vocabulary >( *first );
    for ( const auto& atom : second->atoms() )
        if ( !merged->find_atom( atom ) )
            merged->add_atom( atom );
    for ( const auto& agent : second->agents() )
        if ( !merged->find_agent( agent ) )
            merged->add_agent( agent );
    return merged;
}

} // namespace

EpistemicModel rebase( const EpistemicModel& model, const VocabularyPtr& target )
{
    if ( model.vocabulary_ptr() == target || model.vocabulary() == *target )
        return EpistemicModel{ target, model.labels(), model.relations(), model.names() };

    const auto& source = model.vocabulary();
    std::vector< AtomId > atom_map;
    for ( const auto& name : source.atoms() )
    {
        const auto id = target->find_atom( name );
        if ( !id )
            throw std::invalid_argument( "atom '" + name + "' missing from target vocabulary" );
        atom_map.push_back( *id );
    }

    std::vector< AtomSet > labels;
    for ( const auto& label : model.labels() )
    {
        AtomSet mapped;
        for ( auto atom : label.members() )
            mapped.insert( atom_map[ index_of( atom ) ] );
        labels.push_back( std::move( mapped ) );
    }

    std::vector< EpistemicModel::Adjacency > relations( target->agent_count(),
                                                        EpistemicModel::Adjacency( model.world_count() ) );
    for ( std::size_t agent = 0; agent < source.agent_count(); ++agent )
    {
        const auto id = target->find_agent( source.agents()[ agent ] );
        if ( !id )
            throw std::invalid_argument( "agent '" + source.agents()[ agent ] + "' missing from target vocabulary" );
        relations[ index_of( *id ) ] = model.relations()[ agent ];
    }
    return EpistemicModel{ target, std::move( labels ), std::move( relations ), model.names() };
}

DisjointUnion disjoint_union( const EpistemicModel& first, const EpistemicModel& second )
{
    const auto vocabulary = merge_vocabularies( first.vocabulary_ptr(), second.vocabulary_ptr() );
    const auto a = rebase( first, vocabulary );
    const auto b = rebase( second, vocabulary );
    const auto offset = static_cast< WorldId >( a.world_count() );

    auto labels = a.labels();
    labels.insert( labels.end(), b.labels().begin(), b.labels().end() );

    auto relations = a.relations();
    for ( std::size_t agent = 0; agent < relations.size(); ++agent )
        for ( const auto& successors : b.relations()[ agent ] )
        {
            auto& shifted = relations[ agent ].emplace_back();
            for ( auto v : successors )
                shifted.push_back( v + offset );
        }

    return DisjointUnion{ EpistemicModel{ vocabulary, std::move( labels ), std::move( relations ) }, offset };
}

EpistemicState permute_worlds( const EpistemicState& state, std::span< const WorldId > permutation )
{
    const auto& model = state.model();
    const auto n = model.world_count();
    if ( permutation.size() != n )
        throw std::invalid_argument( "permutation size does not match world count" );

    std::vector< AtomSet > labels( n );
    std::vector< std::string > names( model.has_names() ? n : 0 );
    for ( WorldId w = 0; w < n; ++w )
    {
        labels[ permutation[ w ] ] = model.label( w );
        if ( model.has_names() )
            names[ permutation[ w ] ] = model.names()[ w ];
    }

    std::vector< EpistemicModel::Adjacency > relations( model.agent_count(), EpistemicModel::Adjacency( n ) );
    for ( std::size_t agent = 0; agent < model.agent_count(); ++agent )
        for ( WorldId w = 0; w < n; ++w )
            for ( auto v : model.relations()[ agent ][ w ] )
                relations[ agent ][ permutation[ w ] ].push_back( permutation[ v ] );

    return EpistemicState{
        EpistemicModel{ model.vocabulary_ptr(), std::move( labels ), std::move( relations ), std::move( names ) },
        permutation[ state.designated() ] };
}

} // namespace epiplan
