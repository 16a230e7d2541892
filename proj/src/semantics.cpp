#include "epiplan/semantics.hpp"

#include <algorithm>

namespace epiplan
{

bool holds( const EpistemicModel& model, WorldId world, const Formula& phi )
{
    using Kind = Formula::Kind;

    switch ( phi.kind() )
    {
    case Kind::atom:
        return model.label( world ).contains( phi.atom_id() );
    case Kind::top:
        return true;
    case Kind::bottom:
        return false;
    case Kind::negation:
        return !holds( model, world, phi.operand() );
    case Kind::conjunction:
        return std::all_of( phi.operands().begin(), phi.operands().end(),
                            [ & ]( const Formula& f ) { return holds( model, world, f ); } );
    case Kind::disjunction:
        return std::any_of( phi.operands().begin(), phi.operands().end(),
                            [ & ]( const Formula& f ) { return holds( model, world, f ); } );
    case Kind::implication:
        return !holds( model, world, phi.operand( 0 ) ) || holds( model, world, phi.operand( 1 ) );
    case Kind::belief:
    {
        const auto successors = model.successors( phi.agent(), world );
        return std::all_of( successors.begin(), successors.end(),
                            [ & ]( WorldId v ) { return holds( model, v, phi.operand() ); } );
    }
    case Kind::possibility:
    {
        const auto successors = model.successors( phi.agent(), world );
        return std::any_of( successors.begin(), successors.end(),
                            [ & ]( WorldId v ) { return holds( model, v, phi.operand() ); } );
    }
    }
    return false;
}

} // namespace epiplan
