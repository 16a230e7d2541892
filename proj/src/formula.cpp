#include "epiplan/formula.hpp"

#include <algorithm>
#include <cassert>

namespace epiplan
{

struct Formula::Node
{
    Kind kind;
    std::uint32_t id = 0; // atom or agent index
    std::vector< Formula > operands;
    unsigned depth = 0;
};

namespace
{

unsigned max_depth( const std::vector< Formula >& operands )
{
    unsigned depth = 0;
    for ( const auto& f : operands )
        depth = std::max( depth, f.modal_depth() );
    return depth;
}

} // namespace

Formula Formula::atom( AtomId id )
{
    return Formula{ std::make_shared< const Node >( Node{ Kind::atom, index_of( id ), {}, 0 } ) };
}

Formula Formula::top()
{
    static const Formula instance{ std::make_shared< const Node >( Node{ Kind::top, 0, {}, 0 } ) };
    return instance;
}

Formula Formula::bottom()
{
    static const Formula instance{ std::make_shared< const Node >( Node{ Kind::bottom, 0, {}, 0 } ) };
    return instance;
}

Formula Formula::negation( Formula operand )
{
    const auto depth = operand.modal_depth();
    return Formula{ std::make_shared< const Node >( Node{ Kind::negation, 0, { std::move( operand ) }, depth } ) };
}

Formula Formula::conjunction( std::vector< Formula > operands )
{
    const auto depth = max_depth( operands );
    return Formula{ std::make_shared< const Node >( Node{ Kind::conjunction, 0, std::move( operands ), depth } ) };
}

Formula Formula::disjunction( std::vector< Formula > operands )
{
    const auto depth = max_depth( operands );
    return Formula{ std::make_shared< const Node >( Node{ Kind::disjunction, 0, std::move( operands ), depth } ) };
}

Formula Formula::implication( Formula antecedent, Formula consequent )
{
    std::vector< Formula > operands{ std::move( antecedent ), std::move( consequent ) };
    const auto depth = max_depth( operands );
    return Formula{ std::make_shared< const Node >( Node{ Kind::implication, 0, std::move( operands ), depth } ) };
}

Formula Formula::believes( AgentId agent, Formula operand )
{
    const auto depth = operand.modal_depth() + 1;
    return Formula{
        std::make_shared< const Node >( Node{ Kind::belief, index_of( agent ), { std::move( operand ) }, depth } ) };
}

Formula Formula::possible( AgentId agent, Formula operand )
{
    const auto depth = operand.modal_depth() + 1;
    return Formula{
        std::make_shared< const Node >( Node{ Kind::possibility, index_of( agent ), { std::move( operand ) }, depth } ) };
}

Formula::Kind Formula::kind() const { return _node->kind; }

AtomId Formula::atom_id() const
{
    assert( kind() == Kind::atom );
    return AtomId{ _node->id };
}

AgentId Formula::agent() const
{
    assert( kind() == Kind::belief || kind() == Kind::possibility );
    return AgentId{ _node->id };
}

std::span< const Formula > Formula::operands() const { return _node->operands; }

unsigned Formula::modal_depth() const { return _node->depth; }

bool operator==( const Formula& a, const Formula& b )
{
    if ( a._node == b._node )
        return true;
    if ( a.kind() != b.kind() || a._node->id != b._node->id || a._node->operands.size() != b._node->operands.size() )
        return false;
    return std::equal( a._node->operands.begin(), a._node->operands.end(), b._node->operands.begin() );
}

Formula normalize( const Formula& phi )
{
    using Kind = Formula::Kind;

    const auto normalize_all = [ & ]( std::span< const Formula > operands )
    {
        std::vector< Formula > result;
        result.reserve( operands.size() );
        for ( const auto& f : operands )
            result.push_back( normalize( f ) );
        return result;
    };

    switch ( phi.kind() )
    {
    case Kind::atom:
        return phi;
    case Kind::top:
        return Formula::conjunction( {} );
    case Kind::bottom:
        return Formula::negation( Formula::conjunction( {} ) );
    case Kind::negation:
        return Formula::negation( normalize( phi.operand() ) );
    case Kind::conjunction:
        return Formula::conjunction( normalize_all( phi.operands() ) );
    case Kind::disjunction:
    {
        std::vector< Formula > negated;
        for ( const auto& f : phi.operands() )
            negated.push_back( Formula::negation( normalize( f ) ) );
        return Formula::negation( Formula::conjunction( std::move( negated ) ) );
    }
    case Kind::implication:
        return Formula::negation( Formula::conjunction(
            { normalize( phi.operand( 0 ) ), Formula::negation( normalize( phi.operand( 1 ) ) ) } ) );
    case Kind::belief:
        return Formula::believes( phi.agent(), normalize( phi.operand() ) );
    case Kind::possibility:
        return Formula::negation(
            Formula::believes( phi.agent(), Formula::negation( normalize( phi.operand() ) ) ) );
    }
    return phi;
}

namespace
{

std::string name_or_index( const std::vector< std::string >& names, std::uint32_t index, char prefix )
{
    if ( index < names.size() )
        return names[ index ];
    return std::string( 1, prefix ) + "#" + std::to_string( index );
}

} // namespace

std::string to_string( const Formula& phi, const Vocabulary& vocabulary )
{
    using Kind = Formula::Kind;

    const auto nary = [ & ]( const char* op )
    {
        std::string out = std::string( "(" ) + op;
        for ( const auto& f : phi.operands() )
            out += " " + to_string( f, vocabulary );
        return out + ")";
    };

    switch ( phi.kind() )
    {
    case Kind::atom:
        return name_or_index( vocabulary.atoms(), index_of( phi.atom_id() ), 'p' );
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
        return "(believes " + name_or_index( vocabulary.agents(), index_of( phi.agent() ), 'i' ) + " " +
               to_string( phi.operand(), vocabulary ) + ")";
    case Kind::possibility:
        return "(possible " + name_or_index( vocabulary.agents(), index_of( phi.agent() ), 'i' ) + " " +
               to_string( phi.operand(), vocabulary ) + ")";
    }
    return {};
}

} // namespace epiplan
