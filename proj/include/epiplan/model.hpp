#pragma once

#include "epiplan/formula.hpp"
#include "epiplan/vocabulary.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace epiplan
{

using WorldId = std::uint32_t;

// A set of atoms stored as a bitset over the vocabulary's atom list.
class AtomSet
{
    std::vector< std::uint64_t > _words;

public:
    AtomSet() = default;
    AtomSet( std::initializer_list< AtomId > atoms );

    [[nodiscard]] bool contains( AtomId atom ) const;
    void insert( AtomId atom );
    void erase( AtomId atom );
    void assign( AtomId atom, bool value ) { value ? insert( atom ) : erase( atom ); }

    [[nodiscard]] std::vector< AtomId > members() const;
    [[nodiscard]] std::size_t size() const;
    [[nodiscard]] bool empty() const { return size() == 0; }
    [[nodiscard]] std::size_t hash() const;

    // Trailing zero words are ignored, so sets built over different
    // vocabulary sizes compare by content.
    friend bool operator==( const AtomSet& a, const AtomSet& b );
    friend std::strong_ordering operator<=>( const AtomSet& a, const AtomSet& b );
};

// Finite Kripke model: labelled worlds plus one accessibility relation per
// agent of the vocabulary. Successor lists are sorted and duplicate-free.
class EpistemicModel
{
public:
    using Adjacency = std::vector< std::vector< WorldId > >; // world -> successors

    EpistemicModel( VocabularyPtr vocabulary, std::vector< AtomSet > labels, std::vector< Adjacency > relations,
                    std::vector< std::string > names = {} );

    [[nodiscard]] const VocabularyPtr& vocabulary_ptr() const { return _vocabulary; }
    [[nodiscard]] const Vocabulary& vocabulary() const { return *_vocabulary; }
    [[nodiscard]] std::size_t world_count() const { return _labels.size(); }
    [[nodiscard]] std::size_t agent_count() const { return _relations.size(); }
    [[nodiscard]] const AtomSet& label( WorldId w ) const { return _labels[ w ]; }
    [[nodiscard]] const std::vector< AtomSet >& labels() const { return _labels; }
    [[nodiscard]] std::span< const WorldId > successors( AgentId agent, WorldId w ) const;
    [[nodiscard]] const std::vector< Adjacency >& relations() const { return _relations; }
    [[nodiscard]] std::size_t edge_count() const;

    // World names are optional; they exist for documents loaded from files.
    [[nodiscard]] bool has_names() const { return !_names.empty(); }
    [[nodiscard]] const std::vector< std::string >& names() const { return _names; }
    [[nodiscard]] std::string world_name( WorldId w ) const;

    friend bool operator==( const EpistemicModel& a, const EpistemicModel& b );

private:
    VocabularyPtr _vocabulary;
    std::vector< AtomSet > _labels;
    std::vector< Adjacency > _relations;
    std::vector< std::string > _names;
};

class EpistemicState
{
    EpistemicModel _model;
    WorldId _designated;

public:
    EpistemicState( EpistemicModel model, WorldId designated );

    [[nodiscard]] const EpistemicModel& model() const { return _model; }
    [[nodiscard]] WorldId designated() const { return _designated; }
    [[nodiscard]] std::size_t world_count() const { return _model.world_count(); }
    [[nodiscard]] const Vocabulary& vocabulary() const { return _model.vocabulary(); }

    friend bool operator==( const EpistemicState& a, const EpistemicState& b ) = default;
};

// Breadth-first distance from the designated world over the union of all
// agents' relations; nullopt for unreachable worlds.
std::vector< std::optional< unsigned > > depth_map( const EpistemicState& state );

struct Restriction
{
    EpistemicState state;
    std::vector< std::optional< WorldId > > old_to_new;
    std::vector< WorldId > new_to_old;
};

// Sub-model of worlds at depth <= max_depth (unreachable worlds dropped),
// keeping all edges among the survivors. Surviving worlds keep their
// relative order.
Restriction restrict( const EpistemicState& state, unsigned max_depth );

// Sub-model generated by the designated world.
Restriction reachable_part( const EpistemicState& state );

struct DisjointUnion
{
    EpistemicModel model;
    WorldId offset; // index of the second model's world 0
};

// Worlds of `second` follow those of `first`. Vocabularies are merged by
// name; `first`'s order comes first.
DisjointUnion disjoint_union( const EpistemicModel& first, const EpistemicModel& second );

// Renames worlds: world w of the input becomes world permutation[w].
EpistemicState permute_worlds( const EpistemicState& state, std::span< const WorldId > permutation );

// Re-expresses the model over `target`, which must contain every atom and
// agent name of the model's vocabulary.
EpistemicModel rebase( const EpistemicModel& model, const VocabularyPtr& target );

} // namespace epiplan
