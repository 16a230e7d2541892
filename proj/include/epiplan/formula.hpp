#pragma once

#include "epiplan/vocabulary.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace epiplan
{

// Immutable formula of multi-agent epistemic logic. Nodes are shared, so
// copying a Formula is cheap. The modal depth is computed once at
// construction.
class Formula
{
public:
    enum class Kind : std::uint8_t
    {
        atom,
        top,
        bottom,
        negation,
        conjunction,
        disjunction,
        implication,
        belief,
        possibility,
    };

    static Formula atom( AtomId id );
    static Formula top();
    static Formula bottom();
    static Formula negation( Formula operand );
    static Formula conjunction( std::vector< Formula > operands );
    static Formula disjunction( std::vector< Formula > operands );
    static Formula implication( Formula antecedent, Formula consequent );
    static Formula believes( AgentId agent, Formula operand );
    static Formula possible( AgentId agent, Formula operand );

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] AtomId atom_id() const;   // only for Kind::atom
    [[nodiscard]] AgentId agent() const;    // only for Kind::belief / Kind::possibility
    [[nodiscard]] std::span< const Formula > operands() const;
    [[nodiscard]] const Formula& operand( std::size_t i = 0 ) const { return operands()[ i ]; }
    [[nodiscard]] unsigned modal_depth() const;

    friend bool operator==( const Formula& a, const Formula& b );

private:
    struct Node;
    explicit Formula( std::shared_ptr< const Node > node ) : _node{ std::move( node ) } {}
    std::shared_ptr< const Node > _node;
};

inline unsigned modal_depth( const Formula& phi ) { return phi.modal_depth(); }

// Rewrites Top, Bottom, Or, Implies and Possible in terms of Atom, Not, And and
// Believes. Top becomes the empty conjunction.
Formula normalize( const Formula& phi );

// Prefix rendering, e.g. (and p (believes a (not q))).
std::string to_string( const Formula& phi, const Vocabulary& vocabulary );

} // namespace epiplan
