#include "epiplan/vocabulary.hpp"

#include <stdexcept>

namespace epiplan
{

Vocabulary::Vocabulary( std::vector< std::string > atoms, std::vector< std::string > agents )
{
    for ( auto& name : atoms )
        add_atom( std::move( name ) );
    for ( auto& name : agents )
        add_agent( std::move( name ) );
}

AtomId Vocabulary::add_atom( std::string name )
{
    if ( _atom_index.contains( name ) )
        throw std::invalid_argument( "duplicate atom '" + name + "'" );
    const auto id = AtomId{ static_cast< std::uint32_t >( _atoms.size() ) };
    _atom_index.emplace( name, id );
    _atoms.push_back( std::move( name ) );
    return id;
}

AgentId Vocabulary::add_agent( std::string name )
{
    if ( _agent_index.contains( name ) )
        throw std::invalid_argument( "duplicate agent '" + name + "'" );
    const auto id = AgentId{ static_cast< std::uint32_t >( _agents.size() ) };
    _agent_index.emplace( name, id );
    _agents.push_back( std::move( name ) );
    return id;
}

std::optional< AtomId > Vocabulary::find_atom( std::string_view name ) const
{
    if ( auto it = _atom_index.find( std::string{ name } ); it != _atom_index.end() )
        return it->second;
    return std::nullopt;
}

std::optional< AgentId > Vocabulary::find_agent( std::string_view name ) const
{
    if ( auto it = _agent_index.find( std::string{ name } ); it != _agent_index.end() )
        return it->second;
    return std::nullopt;
}

} // namespace epiplan
