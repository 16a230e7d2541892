#pragma once

#include "epiplan/model.hpp"

#include <vector>

namespace epiplan::test
{

// w0 -> w1 -> ... -> w_length for one agent "a", every world labelled {p}.
EpistemicState chain( unsigned length );

// One world labelled {p} with an "a"-loop.
EpistemicState loop();

// Five worlds over atoms p, q and one agent: w_d {} sees w1 {p} and w2 {p};
// w1 sees w3 {q}; w2 sees w4 {p, q}; w3 sees w1 and w2. No two worlds are
// 1-bisimilar.
EpistemicState five_world_example();

// Same model with w1 and w2 swapped.
EpistemicState five_world_example_swapped();

} // namespace epiplan::test
