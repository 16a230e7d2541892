#pragma once

#include "epiplan/action.hpp"
#include "epiplan/formula.hpp"
#include "epiplan/model.hpp"

#include <random>
#include <vector>

namespace epiplan::test
{

using Rng = std::mt19937;

struct ModelShape
{
    unsigned max_worlds = 8;
    unsigned atoms = 2;
    unsigned agents = 2;
    double edge_probability = 0.3;
};

// Atoms p0, p1, ..., agents a0, a1, ...
VocabularyPtr numbered_vocabulary( unsigned atoms, unsigned agents );

EpistemicState random_state( Rng& rng, const VocabularyPtr& vocabulary, const ModelShape& shape );

// Fixed-seed corpus of random pointed models.
std::vector< EpistemicState > random_corpus( std::uint32_t seed, std::size_t count, const ModelShape& shape = {} );

Formula random_formula( Rng& rng, const Vocabulary& vocabulary, unsigned max_depth, unsigned size = 4 );

// Up to three events with random pre/postconditions of modal depth at most
// max_depth; event relations drawn per agent.
Action random_action( Rng& rng, const Vocabulary& vocabulary, unsigned max_depth );

std::vector< WorldId > random_permutation( Rng& rng, std::size_t n );

} // namespace epiplan::test
