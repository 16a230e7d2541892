#include "epiplan/signature.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

namespace epiplan
{

struct Signature::Node
{
    std::vector< std::uint32_t > atoms;
    std::vector< SignatureEntry > entries;
    std::uint32_t id;
};

namespace
{

class SignatureStore
{
    std::mutex _mutex;
    std::map< std::vector< std::uint32_t >, const Signature::Node* > _index;
    std::deque< Signature::Node > _nodes;

public:
    // `key` must determine (atoms, entries) uniquely.
    const Signature::Node* intern( std::vector< std::uint32_t > key, std::vector< std::uint32_t > atoms,
                                   std::vector< SignatureEntry >&& entries )
    {
        std::lock_guard lock{ _mutex };
        auto it = _index.find( key );
        if ( it != _index.end() )
            return it->second;
        auto& node = _nodes.emplace_back(
            Signature::Node{ std::move( atoms ), std::move( entries ), static_cast< std::uint32_t >( _nodes.size() ) } );
        _index.emplace( std::move( key ), &node );
        return &node;
    }

    std::size_t size()
    {
        std::lock_guard lock{ _mutex };
        return _nodes.size();
    }
};

// Never destroyed: handles stay valid during static destruction.
SignatureStore& store()
{
    static auto* instance = new SignatureStore;
    return *instance;
}

void put_u32( std::vector< std::uint8_t >& out, std::uint32_t value )
{
    out.push_back( static_cast< std::uint8_t >( value >> 24 ) );
    out.push_back( static_cast< std::uint8_t >( value >> 16 ) );
    out.push_back( static_cast< std::uint8_t >( value >> 8 ) );
    out.push_back( static_cast< std::uint8_t >( value ) );
}

void encode_into( const Signature::Node* node, std::vector< std::uint8_t >& out )
{
    put_u32( out, static_cast< std::uint32_t >( node->atoms.size() ) );
    for ( auto atom : node->atoms )
        put_u32( out, atom );
    put_u32( out, static_cast< std::uint32_t >( node->entries.size() ) );
    for ( const auto& entry : node->entries )
    {
        put_u32( out, index_of( entry.agent ) );
        put_u32( out, static_cast< std::uint32_t >( entry.children.size() ) );
        for ( auto child : entry.children )
            encode_into( child.node(), out );
    }
}

} // namespace

Signature Signature::make( const AtomSet& label, std::vector< SignatureEntry > entries )
{
    std::erase_if( entries, []( const SignatureEntry& e ) { return e.children.empty(); } );
    std::sort( entries.begin(), entries.end(),
               []( const SignatureEntry& a, const SignatureEntry& b ) { return index_of( a.agent ) < index_of( b.agent ); } );
    for ( std::size_t i = 1; i < entries.size(); ++i )
        if ( entries[ i ].agent == entries[ i - 1 ].agent )
            throw std::invalid_argument( "signature has two entries for one agent" );

    std::vector< std::uint32_t > atoms;
    for ( auto atom : label.members() )
        atoms.push_back( index_of( atom ) );

    std::vector< std::uint32_t > key{ static_cast< std::uint32_t >( atoms.size() ) };
    key.insert( key.end(), atoms.begin(), atoms.end() );
    key.push_back( static_cast< std::uint32_t >( entries.size() ) );
    for ( auto& entry : entries )
    {
        std::sort( entry.children.begin(), entry.children.end() );
        entry.children.erase( std::unique( entry.children.begin(), entry.children.end() ), entry.children.end() );
        key.push_back( index_of( entry.agent ) );
        key.push_back( static_cast< std::uint32_t >( entry.children.size() ) );
        for ( auto child : entry.children )
            key.push_back( child.id() );
    }
    return Signature{ store().intern( std::move( key ), std::move( atoms ), std::move( entries ) ) };
}

std::span< const std::uint32_t > Signature::atoms() const { return _node->atoms; }

AtomSet Signature::label() const
{
    AtomSet result;
    for ( auto atom : _node->atoms )
        result.insert( AtomId{ atom } );
    return result;
}

std::span< const SignatureEntry > Signature::entries() const { return _node->entries; }

std::uint32_t Signature::id() const { return _node->id; }

std::vector< std::uint8_t > Signature::encoding() const
{
    std::vector< std::uint8_t > out;
    encode_into( _node, out );
    return out;
}

// The encoding is prefix-free, so the first differing token of two
// encodings lies inside the first pair of differing components; comparing
// token by token and recursing only into that pair gives the byte order.
// Unsigned comparison of whole 4-byte big-endian tokens agrees with
// comparing their bytes.
std::strong_ordering operator<=>( Signature a, Signature b )
{
    if ( a._node == b._node )
        return std::strong_ordering::equal;

    const auto& x = *a._node;
    const auto& y = *b._node;
    if ( x.atoms.size() != y.atoms.size() )
        return x.atoms.size() <=> y.atoms.size();
    for ( std::size_t i = 0; i < x.atoms.size(); ++i )
        if ( x.atoms[ i ] != y.atoms[ i ] )
            return x.atoms[ i ] <=> y.atoms[ i ];
    if ( x.entries.size() != y.entries.size() )
        return x.entries.size() <=> y.entries.size();
    for ( std::size_t i = 0; i < x.entries.size(); ++i )
    {
        const auto& ex = x.entries[ i ];
        const auto& ey = y.entries[ i ];
        if ( ex.agent != ey.agent )
            return index_of( ex.agent ) <=> index_of( ey.agent );
        if ( ex.children.size() != ey.children.size() )
            return ex.children.size() <=> ey.children.size();
        for ( std::size_t j = 0; j < ex.children.size(); ++j )
            if ( ex.children[ j ] != ey.children[ j ] )
                return ex.children[ j ] <=> ey.children[ j ];
    }
    // Structurally equal nodes are interned once.
    return std::strong_ordering::equal;
}

std::size_t interned_signature_count() { return store().size(); }

} // namespace epiplan
