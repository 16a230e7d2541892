#include "random.hpp"

#include <algorithm>
#include <numeric>

namespace epiplan::test
{

VocabularyPtr numbered_vocabulary( unsigned atoms, unsigned agents )
{
    std::vector< std::string > atom_names;
    std::vector< std::string > agent_names;
    for ( unsigned i = 0; i < atoms; ++i )
        atom_names.push_back( "p" + std::to_string( i ) );
    for ( unsigned i = 0; i < agents; ++i )
        agent_names.push_back( "a" + std::to_string( i ) );
    return make_vocabulary( std::move( atom_names ), std::move( agent_names ) );
}

EpistemicState random_state( Rng& rng, const VocabularyPtr& vocabulary, const ModelShape& shape )
{
    std::uniform_int_distribution< unsigned > world_count( 1, shape.max_worlds );
    std::bernoulli_distribution coin( 0.5 );
    std::bernoulli_distribution edge( shape.edge_probability );

    const auto n = world_count( rng );
    std::vector< AtomSet > labels( n );
    for ( auto& label : labels )
        for ( std::uint32_t a = 0; a < vocabulary->atom_count(); ++a )
            if ( coin( rng ) )
                label.insert( AtomId{ a } );
    std::vector< EpistemicModel::Adjacency > relations( vocabulary->agent_count(), EpistemicModel::Adjacency( n ) );
    for ( auto& adjacency : relations )
        for ( WorldId w = 0; w < n; ++w )
            for ( WorldId v = 0; v < n; ++v )
                if ( edge( rng ) )
                    adjacency[ w ].push_back( v );
    const auto designated = std::uniform_int_distribution< WorldId >( 0, n - 1 )( rng );
    return EpistemicState{ EpistemicModel{ vocabulary, std::move( labels ), std::move( relations ) }, designated };
}

std::vector< EpistemicState > random_corpus( std::uint32_t seed, std::size_t count, const ModelShape& shape )
{
    Rng rng{ seed };
    const auto vocabulary = numbered_vocabulary( shape.atoms, shape.agents );
    std::vector< EpistemicState > corpus;
    corpus.reserve( count );
    for ( std::size_t i = 0; i < count; ++i )
        corpus.push_back( random_state( rng, vocabulary, shape ) );
    return corpus;
}

Formula random_formula( Rng& rng, const Vocabulary& vocabulary, unsigned max_depth, unsigned size )
{
    const auto pick = [ & ]( std::size_t n ) { return std::uniform_int_distribution< std::size_t >( 0, n - 1 )( rng ); };
    if ( size <= 1 )
    {
        if ( pick( 6 ) == 0 )
            return Formula::top();
        return Formula::atom( AtomId{ static_cast< std::uint32_t >( pick( vocabulary.atom_count() ) ) } );
    }
    const auto agent = [ & ] { return AgentId{ static_cast< std::uint32_t >( pick( vocabulary.agent_count() ) ) }; };
    switch ( pick( max_depth > 0 ? 7 : 5 ) )
    {
    case 0:
        return Formula::negation( random_formula( rng, vocabulary, max_depth, size - 1 ) );
    case 1:
        return Formula::conjunction( { random_formula( rng, vocabulary, max_depth, size / 2 ),
                                       random_formula( rng, vocabulary, max_depth, size - size / 2 ) } );
    case 2:
        return Formula::disjunction( { random_formula( rng, vocabulary, max_depth, size / 2 ),
                                       random_formula( rng, vocabulary, max_depth, size - size / 2 ) } );
    case 3:
        return Formula::implication( random_formula( rng, vocabulary, max_depth, size / 2 ),
                                     random_formula( rng, vocabulary, max_depth, size - size / 2 ) );
    case 4:
        return random_formula( rng, vocabulary, max_depth, 1 );
    case 5:
        return Formula::believes( agent(), random_formula( rng, vocabulary, max_depth - 1, size - 1 ) );
    default:
        return Formula::possible( agent(), random_formula( rng, vocabulary, max_depth - 1, size - 1 ) );
    }
}

Action random_action( Rng& rng, const Vocabulary& vocabulary, unsigned max_depth )
{
    const auto events = std::uniform_int_distribution< unsigned >( 1, 3 )( rng );
    std::bernoulli_distribution coin( 0.5 );
    std::bernoulli_distribution rare( 0.25 );
    std::vector< Event > list;
    for ( unsigned e = 0; e < events; ++e )
    {
        Event event{ "e" + std::to_string( e ), Formula::top(), {} };
        if ( coin( rng ) )
            event.precondition = random_formula( rng, vocabulary, max_depth, 3 );
        for ( std::uint32_t a = 0; a < vocabulary.atom_count(); ++a )
            if ( rare( rng ) )
                event.postconditions.emplace_back( AtomId{ a }, random_formula( rng, vocabulary, max_depth, 2 ) );
        list.push_back( std::move( event ) );
    }
    std::vector< Action::Adjacency > relations( vocabulary.agent_count(), Action::Adjacency( events ) );
    for ( auto& adjacency : relations )
        for ( EventId e = 0; e < events; ++e )
            for ( EventId f = 0; f < events; ++f )
                if ( e == f ? coin( rng ) || coin( rng ) : coin( rng ) )
                    adjacency[ e ].push_back( f );
    const auto designated = std::uniform_int_distribution< EventId >( 0, events - 1 )( rng );
    return Action{ "random", std::move( list ), std::move( relations ), designated };
}

std::vector< WorldId > random_permutation( Rng& rng, std::size_t n )
{
    std::vector< WorldId > permutation( n );
    std::iota( permutation.begin(), permutation.end(), 0 );
    std::shuffle( permutation.begin(), permutation.end(), rng );
    return permutation;
}

} // namespace epiplan::test
