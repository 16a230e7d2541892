#include "epiplan/task_io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace epiplan
{

using Json = nlohmann::ordered_json;

namespace
{

[[noreturn]] void fail( const std::string& message ) { throw TaskFormatError( message ); }

Json parse_json( std::string_view text )
{
    try
    {
        return Json::parse( text.begin(), text.end() );
    }
    catch ( const Json::parse_error& error )
    {
        // error.byte is 1-based and points just past the offending character.
        std::size_t line = 1;
        std::size_t column = 1;
        const auto end = std::min< std::size_t >( error.byte > 0 ? error.byte - 1 : 0, text.size() );
        for ( std::size_t i = 0; i < end; ++i )
        {
            if ( text[ i ] == '\n' )
            {
                ++line;
                column = 1;
            }
            else
                ++column;
        }
        fail( "syntax error at line " + std::to_string( line ) + ", column " + std::to_string( column ) );
    }
}

std::string read_file( const std::filesystem::path& path )
{
    std::ifstream in{ path, std::ios::binary };
    if ( !in )
        fail( "cannot open '" + path.string() + "'" );
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

const Json& member( const Json& object, const char* key, const std::string& context )
{
    if ( !object.is_object() )
        fail( context + " must be an object" );
    const auto it = object.find( key );
    if ( it == object.end() )
        fail( context + " lacks \"" + key + "\"" );
    return *it;
}

std::string as_string( const Json& value, const std::string& context )
{
    if ( !value.is_string() )
        fail( context + " must be a string" );
    return value.get< std::string >();
}

std::vector< std::string > string_list( const Json& value, const std::string& context )
{
    if ( !value.is_array() )
        fail( context + " must be an array of names" );
    std::vector< std::string > names;
    for ( const auto& item : value )
        names.push_back( as_string( item, context + " entry" ) );
    return names;
}

AgentId agent_named( const Vocabulary& vocabulary, const std::string& name )
{
    const auto id = vocabulary.find_agent( name );
    if ( !id )
        fail( "unknown agent '" + name + "'" );
    return *id;
}

AtomId atom_named( const Vocabulary& vocabulary, const std::string& name )
{
    const auto id = vocabulary.find_atom( name );
    if ( !id )
        fail( "unknown atom '" + name + "'" );
    return *id;
}

Formula formula_from_json( const Json& value, const Vocabulary& vocabulary )
{
    if ( value.is_string() )
    {
        const auto name = value.get< std::string >();
        if ( name == "top" )
            return Formula::top();
        if ( name == "bottom" )
            return Formula::bottom();
        return Formula::atom( atom_named( vocabulary, name ) );
    }
    if ( !value.is_array() || value.empty() || !value[ 0 ].is_string() )
        fail( "formula must be an atom name or an array headed by an operator: " + value.dump() );

    const auto op = value[ 0 ].get< std::string >();
    const auto arity = value.size() - 1;
    const auto operand = [ & ]( std::size_t i ) { return formula_from_json( value[ i ], vocabulary ); };
    const auto expect = [ & ]( std::size_t n )
    {
        if ( arity != n )
            fail( "operator '" + op + "' expects " + std::to_string( n ) + " operands" );
    };

    if ( op == "not" )
    {
        expect( 1 );
        return Formula::negation( operand( 1 ) );
    }
    if ( op == "and" || op == "or" )
    {
        std::vector< Formula > operands;
        for ( std::size_t i = 1; i < value.size(); ++i )
            operands.push_back( operand( i ) );
        return op == "and" ? Formula::conjunction( std::move( operands ) )
                           : Formula::disjunction( std::move( operands ) );
    }
    if ( op == "implies" )
    {
        expect( 2 );
        return Formula::implication( operand( 1 ), operand( 2 ) );
    }
    if ( op == "believes" || op == "possible" )
    {
        expect( 2 );
        const auto agent = agent_named( vocabulary, as_string( value[ 1 ], "modal agent" ) );
        return op == "believes" ? Formula::believes( agent, operand( 2 ) ) : Formula::possible( agent, operand( 2 ) );
    }
    fail( "unknown formula operator '" + op + "'" );
}

Json formula_to_json( const Formula& phi, const Vocabulary& vocabulary )
{
    using Kind = Formula::Kind;
    const auto nary = [ & ]( const char* op )
    {
        Json out = Json::array( { op } );
        for ( const auto& f : phi.operands() )
            out.push_back( formula_to_json( f, vocabulary ) );
        return out;
    };
    switch ( phi.kind() )
    {
    case Kind::atom:
        return vocabulary.atom_name( phi.atom_id() );
    case Kind::top:
        return "top";
    case Kind::bottom:
        return "bottom";
    case Kind::negation:
        return nary( "not" );
    case Kind::conjunction:
        return nary( "and" );
    case Kind::disjunction:
        return nary( "or" );
    case Kind::implication:
        return nary( "implies" );
    case Kind::belief:
    case Kind::possibility:
        return Json::array( { phi.kind() == Kind::belief ? "believes" : "possible",
                              vocabulary.agent_name( phi.agent() ),
                              formula_to_json( phi.operand(), vocabulary ) } );
    }
    return nullptr;
}

VocabularyPtr vocabulary_from_json( const Json& document )
{
    try
    {
        return make_vocabulary( string_list( member( document, "atoms", "document" ), "\"atoms\"" ),
                                string_list( member( document, "agents", "document" ), "\"agents\"" ) );
    }
    catch ( const std::invalid_argument& error )
    {
        fail( error.what() );
    }
}

// Resolves names of `items` (objects with "name") to indices.
std::map< std::string, std::uint32_t > name_index( const Json& items, const std::string& kind )
{
    std::map< std::string, std::uint32_t > index;
    for ( const auto& item : items )
    {
        const auto name = as_string( member( item, "name", kind ), kind + " name" );
        if ( !index.emplace( name, static_cast< std::uint32_t >( index.size() ) ).second )
            fail( "duplicate " + kind + " '" + name + "'" );
    }
    return index;
}

std::uint32_t lookup( const std::map< std::string, std::uint32_t >& index, const Json& name, const std::string& kind )
{
    const auto key = as_string( name, kind + " reference" );
    const auto it = index.find( key );
    if ( it == index.end() )
        fail( "unknown " + kind + " '" + key + "'" );
    return it->second;
}

// {"agent": [[from, to], ...]} -> per-agent adjacency over `index`.
std::vector< std::vector< std::vector< std::uint32_t > > > relations_from_json(
    const Json& relations, const Vocabulary& vocabulary, const std::map< std::string, std::uint32_t >& index,
    const std::string& kind )
{
    std::vector< std::vector< std::vector< std::uint32_t > > > result(
        vocabulary.agent_count(), std::vector< std::vector< std::uint32_t > >( index.size() ) );
    if ( !relations.is_object() )
        fail( "\"relations\" must map agent names to edge lists" );
    for ( const auto& [ agent_name, edges ] : relations.items() )
    {
        const auto agent = index_of( agent_named( vocabulary, agent_name ) );
        if ( !edges.is_array() )
            fail( "relation of agent '" + agent_name + "' must be an array of pairs" );
        for ( const auto& edge : edges )
        {
            if ( !edge.is_array() || edge.size() != 2 )
                fail( "relation of agent '" + agent_name + "' contains a malformed edge " + edge.dump() );
            result[ agent ][ lookup( index, edge[ 0 ], kind ) ].push_back( lookup( index, edge[ 1 ], kind ) );
        }
    }
    return result;
}

EpistemicState state_from_json( const Json& state, const VocabularyPtr& vocabulary )
{
    const auto& worlds = member( state, "worlds", "\"state\"" );
    if ( !worlds.is_array() || worlds.empty() )
        fail( "\"worlds\" must be a non-empty array" );
    const auto index = name_index( worlds, "world" );

    std::vector< AtomSet > labels;
    std::vector< std::string > names;
    for ( const auto& world : worlds )
    {
        names.push_back( world[ "name" ].get< std::string >() );
        AtomSet label;
        if ( world.contains( "label" ) )
            for ( const auto& atom : string_list( world[ "label" ], "label of world '" + names.back() + "'" ) )
                label.insert( atom_named( *vocabulary, atom ) );
        labels.push_back( std::move( label ) );
    }

    auto relations = relations_from_json( state.value( "relations", Json::object() ), *vocabulary, index, "world" );
    const auto designated = lookup( index, member( state, "designated", "\"state\"" ), "world" );
    return EpistemicState{ EpistemicModel{ vocabulary, std::move( labels ), std::move( relations ), std::move( names ) },
                           designated };
}

Json relations_to_json( const std::vector< std::vector< std::vector< std::uint32_t > > >& relations,
                        const Vocabulary& vocabulary, const std::vector< std::string >& names )
{
    Json out = Json::object();
    for ( std::size_t agent = 0; agent < relations.size(); ++agent )
    {
        Json edges = Json::array();
        for ( std::size_t from = 0; from < relations[ agent ].size(); ++from )
            for ( auto to : relations[ agent ][ from ] )
                edges.push_back( Json::array( { names[ from ], names[ to ] } ) );
        out[ vocabulary.agent_name( AgentId{ static_cast< std::uint32_t >( agent ) } ) ] = std::move( edges );
    }
    return out;
}

std::vector< std::string > world_names( const EpistemicModel& model )
{
    std::vector< std::string > names;
    for ( WorldId w = 0; w < model.world_count(); ++w )
        names.push_back( model.world_name( w ) );
    return names;
}

Json state_to_json( const EpistemicState& state )
{
    const auto& model = state.model();
    const auto& vocabulary = model.vocabulary();
    const auto names = world_names( model );
    Json worlds = Json::array();
    for ( WorldId w = 0; w < model.world_count(); ++w )
    {
        Json label = Json::array();
        for ( auto atom : model.label( w ).members() )
            label.push_back( vocabulary.atom_name( atom ) );
        worlds.push_back( Json{ { "name", names[ w ] }, { "label", std::move( label ) } } );
    }
    return Json{ { "worlds", std::move( worlds ) },
                 { "relations", relations_to_json( model.relations(), vocabulary, names ) },
                 { "designated", names[ state.designated() ] } };
}

Action action_from_json( const Json& action, const Vocabulary& vocabulary )
{
    const auto name = as_string( member( action, "name", "action" ), "action name" );
    const std::string context = "action '" + name + "'";
    const auto& events = member( action, "events", context );
    if ( !events.is_array() || events.empty() )
        fail( context + " needs a non-empty \"events\" array" );
    const auto index = name_index( events, "event of " + context );

    std::vector< Event > parsed;
    for ( const auto& event : events )
    {
        Event e;
        e.name = event[ "name" ].get< std::string >();
        if ( event.contains( "pre" ) )
            e.precondition = formula_from_json( event[ "pre" ], vocabulary );
        if ( event.contains( "post" ) )
        {
            if ( !event[ "post" ].is_object() )
                fail( "postconditions of event '" + e.name + "' must map atoms to formulas" );
            for ( const auto& [ atom, formula ] : event[ "post" ].items() )
                e.postconditions.emplace_back( atom_named( vocabulary, atom ),
                                               formula_from_json( formula, vocabulary ) );
        }
        parsed.push_back( std::move( e ) );
    }
    auto relations = relations_from_json( action.value( "relations", Json::object() ), vocabulary, index,
                                          "event of " + context );
    const auto designated = lookup( index, member( action, "designated", context ), "event of " + context );
    try
    {
        return Action{ name, std::move( parsed ), std::move( relations ), designated };
    }
    catch ( const std::invalid_argument& error )
    {
        fail( error.what() );
    }
}

Json action_to_json( const Action& action, const Vocabulary& vocabulary )
{
    std::vector< std::string > names;
    Json events = Json::array();
    for ( const auto& event : action.events() )
    {
        names.push_back( event.name );
        Json e{ { "name", event.name }, { "pre", formula_to_json( event.precondition, vocabulary ) } };
        if ( !event.postconditions.empty() )
        {
            Json post = Json::object();
            for ( const auto& [ atom, formula ] : event.postconditions )
                post[ vocabulary.atom_name( atom ) ] = formula_to_json( formula, vocabulary );
            e[ "post" ] = std::move( post );
        }
        events.push_back( std::move( e ) );
    }
    return Json{ { "name", action.name() },
                 { "events", std::move( events ) },
                 { "relations", relations_to_json( action.relations(), vocabulary, names ) },
                 { "designated", names[ action.designated() ] } };
}

Json vocabulary_header( const Vocabulary& vocabulary )
{
    return Json{ { "atoms", vocabulary.atoms() }, { "agents", vocabulary.agents() } };
}

// Objects one member per line; arrays inline when short.
void pretty( const Json& value, std::string& out, int indent )
{
    const auto pad = [ & ]( int n ) { out.append( static_cast< std::size_t >( n ), ' ' ); };
    if ( value.is_object() && !value.empty() )
    {
        out += "{\n";
        std::size_t i = 0;
        for ( const auto& [ key, item ] : value.items() )
        {
            pad( indent + 2 );
            out += Json( key ).dump() + ": ";
            pretty( item, out, indent + 2 );
            out += ++i < value.size() ? ",\n" : "\n";
        }
        pad( indent );
        out += "}";
        return;
    }
    if ( value.is_array() && !value.empty() )
    {
        auto flat = value.dump();
        if ( flat.size() <= 96 )
        {
            out += flat;
            return;
        }
        out += "[\n";
        for ( std::size_t i = 0; i < value.size(); ++i )
        {
            pad( indent + 2 );
            pretty( value[ i ], out, indent + 2 );
            out += i + 1 < value.size() ? ",\n" : "\n";
        }
        pad( indent );
        out += "]";
        return;
    }
    out += value.dump();
}

std::string render( const Json& document )
{
    std::string out;
    pretty( document, out, 0 );
    return out + "\n";
}

template < typename F >
auto semantic( F&& body )
{
    try
    {
        return body();
    }
    catch ( const Json::exception& error )
    {
        fail( std::string( "malformed document: " ) + error.what() );
    }
    catch ( const std::invalid_argument& error )
    {
        fail( error.what() );
    }
}

} // namespace

PlanningTask parse_task( std::string_view text )
{
    const auto document = parse_json( text );
    return semantic(
        [ & ]
        {
            const auto vocabulary = vocabulary_from_json( document );
            auto initial = state_from_json( member( document, "state", "document" ), vocabulary );
            std::vector< Action > actions;
            const auto& list = member( document, "actions", "document" );
            if ( !list.is_array() )
                fail( "\"actions\" must be an array" );
            for ( const auto& action : list )
                actions.push_back( action_from_json( action, *vocabulary ) );
            auto goal = formula_from_json( member( document, "goal", "document" ), *vocabulary );
            return PlanningTask{ std::move( initial ), std::move( actions ), std::move( goal ) };
        } );
}

PlanningTask load_task( const std::filesystem::path& path ) { return parse_task( read_file( path ) ); }

std::string print_task( const PlanningTask& task )
{
    const auto& vocabulary = task.vocabulary();
    auto document = vocabulary_header( vocabulary );
    document[ "state" ] = state_to_json( task.initial() );
    Json actions = Json::array();
    for ( const auto& action : task.actions() )
        actions.push_back( action_to_json( action, vocabulary ) );
    document[ "actions" ] = std::move( actions );
    document[ "goal" ] = formula_to_json( task.goal(), vocabulary );
    return render( document );
}

EpistemicState parse_state( std::string_view text )
{
    const auto document = parse_json( text );
    return semantic( [ & ]
                     { return state_from_json( member( document, "state", "document" ), vocabulary_from_json( document ) ); } );
}

EpistemicState load_state( const std::filesystem::path& path ) { return parse_state( read_file( path ) ); }

std::string print_state( const EpistemicState& state )
{
    auto document = vocabulary_header( state.vocabulary() );
    document[ "state" ] = state_to_json( state );
    return render( document );
}

std::string format_document( std::string_view json ) { return render( parse_json( json ) ); }

Formula parse_formula( std::string_view text, const Vocabulary& vocabulary )
{
    const auto document = parse_json( text );
    return semantic( [ & ] { return formula_from_json( document, vocabulary ); } );
}

std::string print_formula( const Formula& phi, const Vocabulary& vocabulary )
{
    return formula_to_json( phi, vocabulary ).dump();
}

bool operator==( const PlanningTask& a, const PlanningTask& b )
{
    return a.initial() == b.initial() && a.actions() == b.actions() && a.goal() == b.goal();
}

} // namespace epiplan
