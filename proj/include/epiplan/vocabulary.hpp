#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace epiplan
{

enum class AtomId : std::uint32_t {};
enum class AgentId : std::uint32_t {};

constexpr std::uint32_t index_of( AtomId id ) { return static_cast< std::uint32_t >( id ); }
constexpr std::uint32_t index_of( AgentId id ) { return static_cast< std::uint32_t >( id ); }

// Interned atom and agent names. Declaration order is the fixed total order
// used everywhere a deterministic ordering over atoms or agents is needed.
class Vocabulary
{
    std::vector< std::string > _atoms;
    std::vector< std::string > _agents;
    std::unordered_map< std::string, AtomId > _atom_index;
    std::unordered_map< std::string, AgentId > _agent_index;

public:
    Vocabulary() = default;
    Vocabulary( std::vector< std::string > atoms, std::vector< std::string > agents );

    AtomId add_atom( std::string name );
    AgentId add_agent( std::string name );

    [[nodiscard]] std::size_t atom_count() const { return _atoms.size(); }
    [[nodiscard]] std::size_t agent_count() const { return _agents.size(); }

    [[nodiscard]] const std::string& atom_name( AtomId id ) const { return _atoms.at( index_of( id ) ); }
    [[nodiscard]] const std::string& agent_name( AgentId id ) const { return _agents.at( index_of( id ) ); }

    [[nodiscard]] std::optional< AtomId > find_atom( std::string_view name ) const;
    [[nodiscard]] std::optional< AgentId > find_agent( std::string_view name ) const;

    [[nodiscard]] const std::vector< std::string >& atoms() const { return _atoms; }
    [[nodiscard]] const std::vector< std::string >& agents() const { return _agents; }

    friend bool operator==( const Vocabulary& a, const Vocabulary& b )
    {
        return a._atoms == b._atoms && a._agents == b._agents;
    }
};

using VocabularyPtr = std::shared_ptr< const Vocabulary >;

inline VocabularyPtr make_vocabulary( std::vector< std::string > atoms, std::vector< std::string > agents )
{
    return std::make_shared< const Vocabulary >( std::move( atoms ), std::move( agents ) );
}

} // namespace epiplan
