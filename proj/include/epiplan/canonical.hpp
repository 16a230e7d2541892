#pragma once

#include "epiplan/model.hpp"
#include "epiplan/partition.hpp"
#include "epiplan/signature.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace epiplan
{

// sig[h][block] for every block of partitions[h]; partitions must come from
// bounded_partition_refinement on `model`.
std::vector< std::vector< Signature > > block_signatures( const EpistemicModel& model,
                                                         const std::vector< Partition >& partitions );

// sig[h][w] for every world of the model and h = 0..b.
std::vector< std::vector< Signature > > h_signatures( const EpistemicModel& model, unsigned b );

// h-signatures, bounds and maximal representatives of restrict(s, b). World
// indices refer to `restriction.state`.
class SignatureTable
{
public:
    SignatureTable( const EpistemicState& state, unsigned b );

    [[nodiscard]] unsigned bound() const { return _bound; }
    [[nodiscard]] const Restriction& restriction() const { return _restriction; }
    [[nodiscard]] const EpistemicState& state() const { return _restriction.state; }
    [[nodiscard]] const std::vector< Partition >& partitions() const { return _partitions; }

    // b(w) = b - depth(w); always >= 0 inside the restriction.
    [[nodiscard]] unsigned world_bound( WorldId w ) const { return _world_bound[ w ]; }

    [[nodiscard]] Signature signature( WorldId w, unsigned h ) const;
    [[nodiscard]] Signature block_signature( BlockId block, unsigned h ) const { return _block_sigs[ h ][ block ]; }

    [[nodiscard]] const std::vector< WorldId >& max_representatives() const { return _max_repr; }
    [[nodiscard]] bool is_max_representative( WorldId w ) const { return _is_max_repr[ w ]; }

    // sigma(w) = sig_{b(w)}(w).
    [[nodiscard]] Signature representative_signature( WorldId w ) const { return signature( w, _world_bound[ w ] ); }

    // Least (signature order) representative signature among maximal
    // representatives sharing w's h-signature. Throws std::logic_error if
    // there is none.
    [[nodiscard]] Signature canonical_signature( WorldId w, unsigned h ) const;

private:
    unsigned _bound;
    Restriction _restriction;
    std::vector< Partition > _partitions;
    std::vector< unsigned > _world_bound;
    std::vector< std::vector< Signature > > _block_sigs; // [h][block]
    std::vector< WorldId > _max_repr;
    std::vector< bool > _is_max_repr;
    std::vector< std::unordered_map< Signature, Signature > > _canonical; // [h] sig_h -> least sigma
};

inline SignatureTable compute_signatures( const EpistemicState& state, unsigned b ) { return { state, b }; }

// Contracted state whose world k is identified by world_signatures[k].
// Worlds are sorted by signature order.
struct CanonicalState
{
    EpistemicState state;
    std::vector< Signature > world_signatures;
};

CanonicalState canonical_contraction( const EpistemicState& state, unsigned b );

struct RootedState
{
    EpistemicState state;
    std::vector< WorldId > representatives; // per new world, the least member in the input state
};

// `order` ranks worlds of the input state (lower first); empty means index
// order.
RootedState rooted_contraction( const EpistemicState& state, unsigned b, std::span< const std::size_t > order = {} );

// Deterministic byte string identifying a canonical contraction; equal
// strings iff equal contractions. Layout is documented in
// docs/state-encoding.md.
std::string encode_state( const CanonicalState& state );

// Same, for a state whose worlds are named by `world_signatures`. Throws
// std::invalid_argument when the names are missing or do not fit the state.
std::string encode_state( const EpistemicState& state, std::span< const Signature > world_signatures );

} // namespace epiplan
