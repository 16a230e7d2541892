#pragma once

#include "epiplan/model.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace epiplan
{

class Signature;

struct SignatureEntry
{
    AgentId agent;
    std::vector< Signature > children; // sorted by signature order, no duplicates
};

// Handle to an interned h-signature: a label plus, per agent with at least
// one successor, the set of child signatures. Interning makes structural
// equality and handle identity coincide, for the lifetime of the process.
class Signature
{
public:
    struct Node;

    // Interns (label, entries). Entries are sorted by agent and children by
    // signature order; empty entries are dropped.
    static Signature make( const AtomSet& label, std::vector< SignatureEntry > entries );

    [[nodiscard]] std::span< const std::uint32_t > atoms() const; // ascending atom indices
    [[nodiscard]] AtomSet label() const;
    [[nodiscard]] std::span< const SignatureEntry > entries() const;

    // Dense id assigned at interning time; stable only within one process.
    [[nodiscard]] std::uint32_t id() const;

    // Canonical byte encoding, built on demand. Its length can grow
    // exponentially with the signature height, so comparisons never use it.
    //   sig     := u32(#atoms) u32(atom)* u32(#entries) entry*
    //   entry   := u32(agent) u32(#children) sig*
    // All integers are 4-byte big-endian; atoms, agents and children ascend.
    [[nodiscard]] std::vector< std::uint8_t > encoding() const;

    friend bool operator==( Signature a, Signature b ) { return a._node == b._node; }

    // Signature order: byte-lexicographic order of the encodings, computed on
    // the shared structure without materialising them.
    friend std::strong_ordering operator<=>( Signature a, Signature b );

    [[nodiscard]] const Node* node() const { return _node; }

private:
    explicit Signature( const Node* node ) : _node{ node } {}
    const Node* _node = nullptr;
};

inline std::strong_ordering signature_order( Signature a, Signature b ) { return a <=> b; }

// Number of signatures interned so far (process-wide).
std::size_t interned_signature_count();

} // namespace epiplan

template <>
struct std::hash< epiplan::Signature >
{
    std::size_t operator()( epiplan::Signature s ) const noexcept { return std::hash< const void* >{}( s.node() ); }
};
