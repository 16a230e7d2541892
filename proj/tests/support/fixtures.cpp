#include "fixtures.hpp"

#include <numeric>

namespace epiplan::test
{

EpistemicState chain( unsigned length )
{
    const auto vocabulary = make_vocabulary( { "p" }, { "a" } );
    const auto p = *vocabulary->find_atom( "p" );
    std::vector< AtomSet > labels( length + 1, AtomSet{ p } );
    EpistemicModel::Adjacency edges( length + 1 );
    for ( WorldId w = 0; w < length; ++w )
        edges[ w ].push_back( w + 1 );
    return EpistemicState{ EpistemicModel{ vocabulary, std::move( labels ), { std::move( edges ) } }, 0 };
}

EpistemicState loop()
{
    const auto vocabulary = make_vocabulary( { "p" }, { "a" } );
    return EpistemicState{
        EpistemicModel{ vocabulary, { AtomSet{ *vocabulary->find_atom( "p" ) } }, { EpistemicModel::Adjacency{ { 0 } } } },
        0 };
}

EpistemicState five_world_example()
{
    const auto vocabulary = make_vocabulary( { "p", "q" }, { "a" } );
    const AtomId p{ 0 };
    const AtomId q{ 1 };
    std::vector< AtomSet > labels{ AtomSet{}, AtomSet{ p }, AtomSet{ p }, AtomSet{ q }, AtomSet{ p, q } };
    EpistemicModel::Adjacency edges{ { 1, 2 }, { 3 }, { 4 }, { 1, 2 }, {} };
    return EpistemicState{
        EpistemicModel{ vocabulary, std::move( labels ), { std::move( edges ) }, { "wd", "w1", "w2", "w3", "w4" } }, 0 };
}

EpistemicState five_world_example_swapped()
{
    const std::vector< WorldId > swap{ 0, 2, 1, 3, 4 };
    return permute_worlds( five_world_example(), swap );
}

} // namespace epiplan::test
