#include "epiplan/domains.hpp"

#include "epiplan/task_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace epiplan
{

namespace
{

// Name-based construction helpers over one vocabulary.
class Builder
{
public:
    explicit Builder( VocabularyPtr vocabulary ) : _vocabulary{ std::move( vocabulary ) } {}

    [[nodiscard]] const VocabularyPtr& vocabulary() const { return _vocabulary; }
    [[nodiscard]] std::size_t agent_count() const { return _vocabulary->agent_count(); }

    [[nodiscard]] AtomId atom( const std::string& name ) const { return *_vocabulary->find_atom( name ); }
    [[nodiscard]] AgentId agent( const std::string& name ) const { return *_vocabulary->find_agent( name ); }
    [[nodiscard]] Formula p( const std::string& name ) const { return Formula::atom( atom( name ) ); }
    [[nodiscard]] Formula B( const std::string& agent_name, Formula phi ) const
    {
        return Formula::believes( agent( agent_name ), std::move( phi ) );
    }

    [[nodiscard]] AtomSet label( const std::vector< std::string >& atoms ) const
    {
        AtomSet result;
        for ( const auto& name : atoms )
            result.insert( atom( name ) );
        return result;
    }

    // Every agent considers every world possible.
    [[nodiscard]] EpistemicModel::Adjacency total( std::size_t worlds ) const
    {
        EpistemicModel::Adjacency adjacency( worlds );
        for ( auto& successors : adjacency )
            for ( WorldId v = 0; v < worlds; ++v )
                successors.push_back( v );
        return adjacency;
    }

    [[nodiscard]] Action announcement( const std::string& name, Formula pre ) const
    {
        return public_announcement( name, std::move( pre ), agent_count() );
    }

    // Single public event with postconditions.
    [[nodiscard]] Action ontic( const std::string& name, Formula pre,
                                std::vector< std::pair< std::string, Formula > > post ) const
    {
        Event event{ "e", std::move( pre ), {} };
        for ( auto& [ atom_name, value ] : post )
            event.postconditions.emplace_back( atom( atom_name ), std::move( value ) );
        std::vector< Action::Adjacency > relations( agent_count(), Action::Adjacency{ { 0 } } );
        return Action{ name, { std::move( event ) }, std::move( relations ), 0 };
    }

private:
    VocabularyPtr _vocabulary;
};

Formula conjunction( std::vector< Formula > operands ) { return Formula::conjunction( std::move( operands ) ); }
Formula negation( Formula phi ) { return Formula::negation( std::move( phi ) ); }

// Moves between adjacent rooms of a corridor 1 - 2 - 3.
void add_moves( const Builder& build, const std::vector< std::string >& agents, std::vector< Action >& actions )
{
    static const std::vector< std::pair< int, int > > steps{ { 1, 2 }, { 2, 1 }, { 2, 3 }, { 3, 2 } };
    for ( const auto& i : agents )
        for ( const auto& [ from, to ] : steps )
        {
            const auto here = "at_" + i + "_" + std::to_string( from );
            const auto there = "at_" + i + "_" + std::to_string( to );
            actions.push_back( build.ontic( "move_" + i + "_" + std::to_string( from ) + "_" + std::to_string( to ),
                                            build.p( here ),
                                            { { here, Formula::bottom() }, { there, Formula::top() } } ) );
        }
}

std::vector< std::string > room_atoms( const std::string& prefix )
{
    return { prefix + "_1", prefix + "_2", prefix + "_3" };
}

} // namespace

PlanningTask gen_switches( unsigned n, bool with_comm )
{
    if ( n == 0 )
        throw std::invalid_argument( "switches needs at least one switch" );
    std::vector< std::string > atoms;
    std::vector< std::string > agents;
    for ( unsigned k = 1; k <= n; ++k )
        atoms.push_back( "on_" + std::to_string( k ) );
    for ( unsigned k = 0; k <= n; ++k )
        agents.push_back( "a" + std::to_string( k ) );
    const Builder build{ make_vocabulary( atoms, agents ) };

    std::vector< EpistemicModel::Adjacency > loops( agents.size(), EpistemicModel::Adjacency{ { 0 } } );
    EpistemicState initial{ EpistemicModel{ build.vocabulary(), { AtomSet{} }, std::move( loops ), { "w0" } }, 0 };

    std::vector< Action > actions;
    for ( unsigned k = 1; k <= n; ++k )
    {
        const auto on = "on_" + std::to_string( k );
        std::vector< Event > events{ Event{ "e", negation( build.p( on ) ), { { build.atom( on ), Formula::top() } } },
                                     Event{ "skip", Formula::top(), {} } };
        std::vector< Action::Adjacency > relations;
        for ( unsigned i = 0; i <= n; ++i )
        {
            if ( i == 0 || i == k )
                relations.push_back( { { 0 }, { 1 } } );
            else
                relations.push_back( { { 1 }, { 1 } } );
        }
        actions.emplace_back( "switch_" + std::to_string( k ), std::move( events ), std::move( relations ), 0 );
    }
    if ( with_comm )
        for ( unsigned k = 1; k <= n; ++k )
            actions.push_back(
                build.announcement( "tell_" + std::to_string( k ), build.B( "a0", build.p( atoms[ k - 1 ] ) ) ) );

    std::vector< Formula > goal;
    for ( const auto& atom : atoms )
        goal.push_back( build.p( atom ) );
    return PlanningTask{ std::move( initial ), std::move( actions ), conjunction( std::move( goal ) ) };
}

ConsecutiveNumbers gen_consecutive_numbers( unsigned max, unsigned na, unsigned nb )
{
    if ( na > max || nb > max || ( na + 1 != nb && nb + 1 != na ) )
        throw std::invalid_argument( "consecutive numbers need |na - nb| = 1 within [0, max]" );

    std::vector< std::string > atoms;
    for ( const char* i : { "a", "b" } )
        for ( unsigned k = 0; k <= max; ++k )
            atoms.push_back( std::string( "has_" ) + i + "_" + std::to_string( k ) );
    const Builder build{ make_vocabulary( atoms, { "a", "b" } ) };

    // Connected component of (na, nb): a cannot tell apart pairs with the
    // same first number, b those with the same second.
    std::set< std::pair< unsigned, unsigned > > seen{ { na, nb } };
    std::vector< std::pair< unsigned, unsigned > > todo{ { na, nb } };
    while ( !todo.empty() )
    {
        const auto [ x, y ] = todo.back();
        todo.pop_back();
        // a keeps x and b keeps y; the other number is one off.
        const std::pair< unsigned, unsigned > candidates[] = { { x, x + 1 }, { x, x - 1 }, { y + 1, y }, { y - 1, y } };
        for ( auto [ cx, cy ] : candidates )
            if ( cx <= max && cy <= max && ( cx + 1 == cy || cy + 1 == cx ) && seen.insert( { cx, cy } ).second )
                todo.push_back( { cx, cy } );
    }
    std::vector< std::pair< unsigned, unsigned > > pairs( seen.begin(), seen.end() );
    std::sort( pairs.begin(), pairs.end(), []( auto l, auto r ) { return l.first + l.second > r.first + r.second; } );

    std::vector< AtomSet > labels;
    std::vector< std::string > names;
    EpistemicModel::Adjacency rel_a( pairs.size() );
    EpistemicModel::Adjacency rel_b( pairs.size() );
    WorldId designated = 0;
    for ( WorldId w = 0; w < pairs.size(); ++w )
    {
        const auto [ x, y ] = pairs[ w ];
        labels.push_back( build.label( { "has_a_" + std::to_string( x ), "has_b_" + std::to_string( y ) } ) );
        names.push_back( "w" + std::to_string( w ) );
        if ( x == na && y == nb )
            designated = w;
        for ( WorldId v = 0; v < pairs.size(); ++v )
        {
            if ( pairs[ v ].first == x )
                rel_a[ w ].push_back( v );
            if ( pairs[ v ].second == y )
                rel_b[ w ].push_back( v );
        }
    }

    std::vector< Formula > b_knows_a;
    for ( unsigned k = 0; k <= max; ++k )
        b_knows_a.push_back( build.B( "b", build.p( "has_a_" + std::to_string( k ) ) ) );

    return ConsecutiveNumbers{
        EpistemicState{ EpistemicModel{ build.vocabulary(), std::move( labels ), { std::move( rel_a ), std::move( rel_b ) },
                                        std::move( names ) },
                        designated },
        build.announcement( "announce_b_ignorant", negation( Formula::disjunction( std::move( b_knows_a ) ) ) ) };
}

PlanningTask gen_coin_in_box( unsigned instance )
{
    const std::vector< std::string > agents{ "a", "b", "c" };
    const Builder build{ make_vocabulary( { "tail", "opened", "looking_a", "looking_b", "looking_c" }, agents ) };
    const auto looking = [ & ]( const std::string& i ) { return build.p( "looking_" + i ); };

    // The coin lies tails up; nobody knows it yet. Everybody is watching the
    // closed box.
    EpistemicState initial{
        EpistemicModel{ build.vocabulary(),
                        { build.label( { "tail", "looking_a", "looking_b", "looking_c" } ),
                          build.label( { "looking_a", "looking_b", "looking_c" } ) },
                        { build.total( 2 ), build.total( 2 ), build.total( 2 ) },
                        { "tails_up", "heads_up" } },
        0 };

    std::vector< Action > actions;
    actions.push_back( build.ontic( "open", negation( build.p( "opened" ) ), { { "opened", Formula::top() } } ) );
    for ( const auto& i : agents )
        for ( const auto& j : agents )
            if ( i != j )
                actions.push_back( build.ontic( "distract_" + i + "_" + j, conjunction( { looking( i ), looking( j ) } ),
                                                { { "looking_" + j, Formula::bottom() } } ) );
    for ( const auto& i : agents )
        for ( const auto& j : agents )
            if ( i != j )
                actions.push_back( build.ontic( "signal_" + i + "_" + j,
                                                conjunction( { looking( i ), negation( looking( j ) ) } ),
                                                { { "looking_" + j, Formula::top() } } ) );

    // i peeks; watching agents learn that i saw the coin but not how it
    // lies, the others believe nothing happened.
    for ( std::size_t ii = 0; ii < agents.size(); ++ii )
    {
        const auto& i = agents[ ii ];
        std::vector< std::string > others;
        for ( const auto& j : agents )
            if ( j != i )
                others.push_back( j );
        for ( unsigned mask = 0; mask < 4; ++mask )
        {
            std::vector< Formula > condition{ build.p( "opened" ), looking( i ) };
            std::string suffix;
            std::vector< bool > watching( agents.size(), false );
            for ( std::size_t k = 0; k < others.size(); ++k )
            {
                const bool watches = ( mask >> k & 1U ) != 0;
                condition.push_back( watches ? looking( others[ k ] ) : negation( looking( others[ k ] ) ) );
                if ( watches )
                {
                    suffix += others[ k ];
                    watching[ index_of( build.agent( others[ k ] ) ) ] = true;
                }
            }
            if ( suffix.empty() )
                suffix = "alone";

            auto saw_tail = condition;
            saw_tail.push_back( build.p( "tail" ) );
            auto saw_head = condition;
            saw_head.push_back( negation( build.p( "tail" ) ) );
            std::vector< Event > events{ Event{ "saw_tail", conjunction( std::move( saw_tail ) ), {} },
                                         Event{ "saw_head", conjunction( std::move( saw_head ) ), {} },
                                         Event{ "skip", Formula::top(), {} } };
            std::vector< Action::Adjacency > relations;
            for ( std::size_t j = 0; j < agents.size(); ++j )
            {
                if ( j == ii )
                    relations.push_back( { { 0 }, { 1 }, { 2 } } );
                else if ( watching[ j ] )
                    relations.push_back( { { 0, 1 }, { 0, 1 }, { 2 } } );
                else
                    relations.push_back( { { 2 }, { 2 }, { 2 } } );
            }
            actions.emplace_back( "peek_" + i + "_" + suffix, std::move( events ), std::move( relations ), 0 );
        }
    }
    for ( const auto& i : agents )
        actions.push_back( build.announcement( "announce_" + i + "_tail", build.B( i, build.p( "tail" ) ) ) );
    for ( const auto& i : agents )
        actions.push_back( build.announcement( "announce_" + i + "_head", build.B( i, negation( build.p( "tail" ) ) ) ) );

    const auto tail = build.p( "tail" );
    Formula goal = Formula::top();
    switch ( instance )
    {
    case 1:
        goal = build.B( "a", tail );
        break;
    case 2:
        goal = conjunction( { build.B( "a", tail ), build.B( "b", tail ) } );
        break;
    case 3:
        goal = conjunction(
            { build.B( "a", tail ), build.B( "b", tail ), negation( looking( "b" ) ), negation( looking( "c" ) ) } );
        break;
    case 4:
        goal = conjunction( { build.B( "a", tail ), build.B( "c", tail ), negation( build.B( "b", build.B( "a", tail ) ) ),
                              negation( looking( "c" ) ) } );
        break;
    case 5:
        goal = conjunction( { build.B( "a", tail ), build.B( "c", tail ), negation( build.B( "b", build.B( "a", tail ) ) ),
                              negation( looking( "c" ) ), negation( looking( "a" ) ) } );
        break;
    default:
        throw std::invalid_argument( "coin-in-box has instances 1 to 5" );
    }
    return PlanningTask{ std::move( initial ), std::move( actions ), std::move( goal ) };
}

PlanningTask gen_selective_communication( unsigned instance )
{
    std::vector< std::string > atoms = room_atoms( "at_a" );
    for ( const auto& atom : room_atoms( "at_b" ) )
        atoms.push_back( atom );
    atoms.push_back( "q" );
    const Builder build{ make_vocabulary( atoms, { "a", "b" } ) };

    // a starts in room 1 and knows q; b starts in room 3 and does not.
    EpistemicState initial{ EpistemicModel{ build.vocabulary(),
                                            { build.label( { "at_a_1", "at_b_3", "q" } ),
                                              build.label( { "at_a_1", "at_b_3" } ) },
                                            { { { 0 }, { 1 } }, build.total( 2 ) },
                                            { "q_true", "q_false" } },
                            0 };

    std::vector< Action > actions;
    add_moves( build, { "a", "b" }, actions );
    // Publicly announces q; only possible while both agents share a room.
    for ( const auto& [ i, j ] : { std::pair< std::string, std::string >{ "a", "b" }, { "b", "a" } } )
        for ( int r = 1; r <= 3; ++r )
        {
            const auto room = std::to_string( r );
            actions.push_back( build.announcement(
                "tell_" + i + "_" + room,
                conjunction( { build.p( "at_" + i + "_" + room ), build.p( "at_" + j + "_" + room ),
                               build.p( "q" ) } ) ) );
        }

    const auto q = build.p( "q" );
    Formula goal = Formula::top();
    switch ( instance )
    {
    case 1:
        goal = build.B( "b", q );
        break;
    case 2:
        goal = conjunction( { build.B( "a", build.B( "b", q ) ), build.p( "at_a_2" ), build.p( "at_b_3" ) } );
        break;
    case 3:
        goal = conjunction( { build.B( "a", build.B( "b", q ) ), build.p( "at_b_1" ), build.p( "at_a_3" ) } );
        break;
    case 4:
        goal = conjunction( { build.B( "b", q ), build.p( "at_b_1" ), build.p( "at_a_3" ) } );
        break;
    default:
        throw std::invalid_argument( "selective-communication has instances 1 to 4" );
    }
    return PlanningTask{ std::move( initial ), std::move( actions ), std::move( goal ) };
}

PlanningTask gen_collaboration( unsigned instance )
{
    std::vector< std::string > atoms = room_atoms( "at_a" );
    for ( const auto& prefix : { "at_b", "box1", "box2", "box3", "box4" } )
        for ( const auto& atom : room_atoms( prefix ) )
            atoms.push_back( atom );
    const Builder build{ make_vocabulary( atoms, { "a", "b" } ) };

    // Boxes 1 and 2 are each in room 2 or 3; box 3 is in room 1, box 4 in
    // room 3. Actually box 1 is in room 2 and box 2 in room 3.
    std::vector< AtomSet > labels;
    std::vector< std::string > names;
    WorldId designated = 0;
    for ( int r1 = 2; r1 <= 3; ++r1 )
        for ( int r2 = 2; r2 <= 3; ++r2 )
        {
            if ( r1 == 2 && r2 == 3 )
                designated = static_cast< WorldId >( labels.size() );
            labels.push_back( build.label( { "at_a_1", "at_b_1", "box1_" + std::to_string( r1 ),
                                             "box2_" + std::to_string( r2 ), "box3_1", "box4_3" } ) );
            names.push_back( "box1_in_" + std::to_string( r1 ) + "_box2_in_" + std::to_string( r2 ) );
        }
    EpistemicState initial{
        EpistemicModel{ build.vocabulary(), std::move( labels ), { build.total( 4 ), build.total( 4 ) }, std::move( names ) },
        designated };
    const auto actual = initial.model().label( designated );

    std::vector< Action > actions;
    add_moves( build, { "a", "b" }, actions );

    // i looks into room r for box k; the other agent learns that i looked
    // but not what i saw.
    for ( const auto& [ i, j ] : { std::pair< std::string, std::string >{ "a", "b" }, { "b", "a" } } )
        for ( int k = 1; k <= 2; ++k )
            for ( int r = 2; r <= 3; ++r )
            {
                const auto box = "box" + std::to_string( k ) + "_" + std::to_string( r );
                const auto here = build.p( "at_" + i + "_" + std::to_string( r ) );
                std::vector< Event > events{ Event{ "present", conjunction( { here, build.p( box ) } ), {} },
                                             Event{ "absent", conjunction( { here, negation( build.p( box ) ) } ), {} } };
                std::vector< Action::Adjacency > relations( 2 );
                relations[ index_of( build.agent( i ) ) ] = { { 0 }, { 1 } };
                relations[ index_of( build.agent( j ) ) ] = { { 0, 1 }, { 0, 1 } };
                const EventId designated_event = actual.contains( build.atom( box ) ) ? 0 : 1;
                actions.emplace_back( "sense_" + i + "_" + std::to_string( k ) + "_" + std::to_string( r ),
                                      std::move( events ), std::move( relations ), designated_event );
            }
    // i, standing in room r, announces that box k is there.
    for ( const auto& i : { std::string( "a" ), std::string( "b" ) } )
        for ( int k = 1; k <= 2; ++k )
            for ( int r = 2; r <= 3; ++r )
            {
                const auto box = "box" + std::to_string( k ) + "_" + std::to_string( r );
                actions.push_back( build.announcement(
                    "tell_" + i + "_" + std::to_string( k ) + "_" + std::to_string( r ),
                    conjunction( { build.p( "at_" + i + "_" + std::to_string( r ) ), build.p( box ) } ) ) );
            }
    for ( const auto& i : { std::string( "a" ), std::string( "b" ) } )
        for ( const auto& [ k, r ] : { std::pair{ 3, 1 }, { 4, 3 } } )
            actions.push_back( build.announcement(
                "sense_" + i + "_" + std::to_string( k ),
                conjunction( { build.p( "at_" + i + "_" + std::to_string( r ) ),
                               build.p( "box" + std::to_string( k ) + "_" + std::to_string( r ) ) } ) ) );

    const auto box1 = build.p( "box1_2" );
    const auto box2 = build.p( "box2_3" );
    Formula goal = Formula::top();
    switch ( instance )
    {
    case 1:
        goal = conjunction( { build.B( "b", build.B( "a", box1 ) ), build.p( "at_b_2" ) } );
        break;
    case 2:
        goal = conjunction( { build.B( "a", box1 ), build.B( "a", box2 ) } );
        break;
    case 3:
        goal = build.B( "a", box1 );
        break;
    case 4:
        goal = conjunction( { build.B( "a", box1 ), build.B( "a", box2 ), build.B( "b", box2 ) } );
        break;
    default:
        throw std::invalid_argument( "collaboration has instances 1 to 4" );
    }
    return PlanningTask{ std::move( initial ), std::move( actions ), std::move( goal ) };
}

std::vector< BundledInstance > bundled_instances()
{
    std::vector< BundledInstance > result;
    for ( unsigned n = 2; n <= 6; ++n )
        result.push_back( { "switches", "switches-" + std::to_string( n ), [ n ] { return gen_switches( n ); } } );
    for ( unsigned k = 1; k <= 5; ++k )
        result.push_back( { "coin-in-box", "cb" + std::to_string( k ), [ k ] { return gen_coin_in_box( k ); } } );
    for ( unsigned k = 1; k <= 4; ++k )
        result.push_back( { "selective-communication", "sc" + std::to_string( k ),
                            [ k ] { return gen_selective_communication( k ); } } );
    for ( unsigned k = 1; k <= 4; ++k )
        result.push_back( { "collaboration", "cc" + std::to_string( k ), [ k ] { return gen_collaboration( k ); } } );
    return result;
}

std::vector< std::filesystem::path > write_bundled_domains( const std::filesystem::path& root )
{
    std::vector< std::filesystem::path > written;
    for ( const auto& bundled : bundled_instances() )
    {
        const auto directory = root / bundled.domain;
        std::filesystem::create_directories( directory );
        const auto path = directory / ( bundled.instance + ".task" );
        std::ofstream out{ path, std::ios::binary };
        if ( !out )
            throw std::runtime_error( "cannot write '" + path.string() + "'" );
        out << print_task( bundled.make() );
        written.push_back( path );
    }
    return written;
}

} // namespace epiplan
