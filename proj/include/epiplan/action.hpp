#pragma once

#include "epiplan/formula.hpp"
#include "epiplan/model.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epiplan
{

using EventId = std::uint32_t;

struct Event
{
    std::string name;
    Formula precondition = Formula::top();
    // Sparse postconditions; atoms not listed keep their value.
    std::vector< std::pair< AtomId, Formula > > postconditions;
};

// Pointed event model. Identity postconditions (p := p) are dropped and the
// rest sorted by atom.
class Action
{
public:
    using Adjacency = std::vector< std::vector< EventId > >; // event -> successors

    Action( std::string name, std::vector< Event > events, std::vector< Adjacency > relations, EventId designated );

    [[nodiscard]] const std::string& name() const { return _name; }
    [[nodiscard]] const std::vector< Event >& events() const { return _events; }
    [[nodiscard]] const Event& event( EventId e ) const { return _events[ e ]; }
    [[nodiscard]] std::size_t event_count() const { return _events.size(); }
    [[nodiscard]] const std::vector< Adjacency >& relations() const { return _relations; }
    [[nodiscard]] std::span< const EventId > successors( AgentId agent, EventId e ) const;
    [[nodiscard]] EventId designated() const { return _designated; }
    [[nodiscard]] unsigned modal_depth() const { return _depth; }

    friend bool operator==( const Action& a, const Action& b );

private:
    std::string _name;
    std::vector< Event > _events;
    std::vector< Adjacency > _relations; // indexed by agent; may be shorter than the vocabulary
    EventId _designated;
    unsigned _depth = 0;
};

inline unsigned modal_depth( const Action& action ) { return action.modal_depth(); }

// Single-event action with the given precondition, observed by all agents.
Action public_announcement( std::string name, Formula precondition, std::size_t agent_count );

struct NotApplicable : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

bool applicable( const EpistemicState& state, const Action& action );

// Worlds (w, e) with w ⊨ pre(e), ordered w-major then e. Postconditions are
// evaluated in the input state. Throws NotApplicable.
EpistemicState product_update( const EpistemicState& state, const Action& action );

} // namespace epiplan
