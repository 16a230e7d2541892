#include "doctest.h"

#include "epiplan/bisimulation.hpp"
#include "epiplan/partition.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <algorithm>

using namespace epiplan;

namespace
{

std::vector< std::size_t > block_counts( const std::vector< Partition >& partitions )
{
    std::vector< std::size_t > counts;
    for ( const auto& p : partitions )
        counts.push_back( p.size() );
    return counts;
}

bool refines( const Partition& finer, const Partition& coarser )
{
    for ( const auto& block : finer.blocks() )
        for ( auto w : block )
            if ( coarser.block_of( w ) != coarser.block_of( block.front() ) )
                return false;
    return true;
}

EpistemicModel single_agent( std::size_t worlds, EpistemicModel::Adjacency edges )
{
    const auto v = make_vocabulary( { "p" }, { "a" } );
    return EpistemicModel{ v, std::vector< AtomSet >( worlds, AtomSet{ AtomId{ 0 } } ), { std::move( edges ) } };
}

} // namespace

TEST_CASE( "partition blocks are numbered by smallest world" )
{
    const std::vector< std::uint32_t > keys{ 7, 3, 7, 9, 3 };
    const auto p = Partition::from_keys( keys );
    CHECK( p.size() == 3 );
    CHECK( p.block_ids() == std::vector< BlockId >{ 0, 1, 0, 2, 1 } );
    CHECK( p.block( 0 ) == std::vector< WorldId >{ 0, 2 } );
    CHECK( p.block( 1 ) == std::vector< WorldId >{ 1, 4 } );
    CHECK( p.block( 2 ) == std::vector< WorldId >{ 3 } );
    CHECK( p == Partition::from_keys( std::vector< std::uint32_t >{ 1, 2, 1, 0, 2 } ) );
}

TEST_CASE( "refine splits against predecessors of the splitter" )
{
    const auto model = single_agent( 2, { { 1 }, {} } );
    const auto whole = Partition::from_keys( std::vector< std::uint32_t >{ 0, 0 } );

    // Only w0 has a successor in {w1}.
    const std::vector< WorldId > s1{ 1 };
    CHECK( refine( whole, s1, model ).block_ids() == std::vector< BlockId >{ 0, 1 } );

    // Nothing points into {w0}: not a splitter.
    const std::vector< WorldId > s0{ 0 };
    CHECK( refine( whole, s0, model ) == whole );

    // Already stable partition is unchanged.
    const auto split = Partition::from_keys( std::vector< std::uint32_t >{ 0, 1 } );
    CHECK( refine( split, s1, model ) == split );

    // Uniform chain w0 -> w1 -> w2 -> w3 against the whole world set splits
    // off the dead end.
    const auto chain = single_agent( 4, { { 1 }, { 2 }, { 3 }, {} } );
    const std::vector< WorldId > all{ 0, 1, 2, 3 };
    const auto result = refine( Partition::from_keys( std::vector< std::uint32_t >( 4, 0 ) ), all, chain );
    CHECK( result.blocks() == std::vector< std::vector< WorldId > >{ { 0, 1, 2 }, { 3 } } );
}

TEST_CASE( "a refinement round equals refining against every frozen block" )
{
    for ( const auto& s : test::random_corpus( 17, 200 ) )
    {
        const auto& model = s.model();
        auto current = label_partition( model );
        for ( int round = 0; round < 3; ++round )
        {
            auto folded = current;
            for ( const auto& block : current.blocks() )
                folded = refine( folded, block, model );
            const auto next = refinement_round( current, model );
            CHECK( next == folded );
            current = next;
        }
    }
}

TEST_CASE( "bounded partition refinement" )
{
    SUBCASE( "uniform chain of four worlds" )
    {
        const auto chain = test::chain( 3 );
        const auto partitions = bounded_partition_refinement( chain.model(), 3 );
        CHECK( block_counts( partitions ) == std::vector< std::size_t >{ 1, 2, 3, 4 } );
    }
    SUBCASE( "distinct labels are stable from the start" )
    {
        const auto v = make_vocabulary( { "p", "q" }, { "a" } );
        const EpistemicModel model{ v,
                                    { AtomSet{}, AtomSet{ AtomId{ 0 } }, AtomSet{ AtomId{ 1 } } },
                                    { EpistemicModel::Adjacency{ { 1 }, { 2 }, { 0 } } } };
        const auto partitions = bounded_partition_refinement( model, 4 );
        REQUIRE( partitions.size() == 5 );
        for ( const auto& p : partitions )
            CHECK( p == partitions.front() );
        CHECK( partitions.front().size() == 3 );
    }
    SUBCASE( "five-world example has singleton blocks from height 1" )
    {
        const auto partitions = bounded_partition_refinement( test::five_world_example().model(), 3 );
        CHECK( partitions[ 0 ].size() == 4 );
        for ( unsigned h = 1; h <= 3; ++h )
            CHECK( partitions[ h ].size() == 5 );
    }
}

TEST_CASE( "partition blocks match naive bisimilarity" )
{
    const auto corpus = test::random_corpus( 101, 500, { .max_worlds = 7 } );
    std::size_t failures = 0;
    for ( const auto& s : corpus )
    {
        const auto& model = s.model();
        const auto partitions = bounded_partition_refinement( model, 3 );
        test::NaiveBisimulation naive{ model };
        for ( unsigned h = 0; h <= 3; ++h )
        {
            if ( h > 0 && !refines( partitions[ h ], partitions[ h - 1 ] ) )
                ++failures;
            for ( WorldId w = 0; w < model.world_count(); ++w )
                for ( WorldId v = 0; v < model.world_count(); ++v )
                    if ( ( partitions[ h ].block_of( w ) == partitions[ h ].block_of( v ) ) != naive( w, v, h ) )
                        ++failures;
        }
    }
    CHECK( failures == 0 );
}

TEST_CASE( "early stabilization gives the bisimulation partition" )
{
    for ( const auto& s : test::random_corpus( 8, 200 ) )
    {
        const auto& model = s.model();
        const auto partitions = bounded_partition_refinement( model, static_cast< unsigned >( model.world_count() ) );
        const auto full = bisimulation_partition( model );
        for ( std::size_t h = 0; h + 1 < partitions.size(); ++h )
            if ( partitions[ h ] == partitions[ h + 1 ] )
            {
                CHECK( partitions[ h ] == full );
                break;
            }
        CHECK( partitions.back() == full );
    }
}

TEST_CASE( "b-bisimilarity" )
{
    const auto chain = test::chain( 5 );
    const auto loop = test::loop();
    CHECK( b_bisimilar( chain, loop, 5 ) );
    CHECK_FALSE( b_bisimilar( chain, loop, 6 ) );
    CHECK( test::naive_h_bisimilar( chain, loop, 5 ) );
    CHECK_FALSE( test::naive_h_bisimilar( chain, loop, 6 ) );
    CHECK_FALSE( bisimilar( chain, loop ) );
    CHECK( bisimilar( loop, loop ) );

    test::Rng rng{ 77 };
    const auto v = test::numbered_vocabulary( 1, 2 );
    for ( int i = 0; i < 300; ++i )
    {
        const test::ModelShape shape{ .max_worlds = 5, .atoms = 1, .agents = 2, .edge_probability = 0.4 };
        const auto s = test::random_state( rng, v, shape );
        const auto t = test::random_state( rng, v, shape );
        CHECK( bisimilar( s, s ) );
        bool previous = true;
        for ( unsigned h = 0; h <= 4; ++h )
        {
            CHECK( b_bisimilar( s, s, h ) );
            const bool now = b_bisimilar( s, t, h );
            CHECK( now == test::naive_h_bisimilar( s, t, h ) );
            CHECK( ( !now || previous ) );
            previous = now;
        }
    }
}

TEST_CASE( "b-bisimilarity merges vocabularies by name" )
{
    const auto v1 = make_vocabulary( { "p", "q" }, { "a" } );
    const auto v2 = make_vocabulary( { "q", "p" }, { "a" } );
    const EpistemicState s{ EpistemicModel{ v1, { AtomSet{ AtomId{ 0 } } }, {} }, 0 };
    const EpistemicState t{ EpistemicModel{ v2, { AtomSet{ AtomId{ 1 } } }, {} }, 0 };
    const EpistemicState u{ EpistemicModel{ v2, { AtomSet{ AtomId{ 0 } } }, {} }, 0 };
    CHECK( bisimilar( s, t ) );
    CHECK_FALSE( bisimilar( s, u ) );
}

TEST_CASE( "standard contractions" )
{
    SUBCASE( "two disconnected copies collapse" )
    {
        const auto v = make_vocabulary( { "p" }, { "a" } );
        const EpistemicModel model{ v,
                                    { AtomSet{ AtomId{ 0 } }, AtomSet{}, AtomSet{ AtomId{ 0 } }, AtomSet{} },
                                    { EpistemicModel::Adjacency{ { 1 }, {}, { 3 }, {} } } };
        const auto contracted = standard_contraction( EpistemicState{ model, 0 } );
        CHECK( contracted.world_count() == 2 );
        CHECK( contracted.model().edge_count() == 1 );
    }
    SUBCASE( "uniform chain does not shrink" )
    {
        const auto chain = test::chain( 5 );
        CHECK( standard_contraction( chain ).world_count() == 6 );
        CHECK( standard_b_contraction( chain, 5 ).world_count() == 6 );
    }
    SUBCASE( "bound zero with equal labels gives one world" )
    {
        const auto chain = test::chain( 4 );
        CHECK( standard_b_contraction( chain, 0 ).world_count() == 1 );
    }
    SUBCASE( "random models" )
    {
        for ( const auto& s : test::random_corpus( 29, 500 ) )
        {
            const auto contracted = standard_contraction( s );
            CHECK( bisimilar( s, contracted ) );
            CHECK( contracted.world_count() <= s.world_count() );
            for ( unsigned b = 0; b <= 3; ++b )
                CHECK( b_bisimilar( s, standard_b_contraction( s, b ), b ) );
        }
    }
}

TEST_CASE( "the two bisimilarity oracles agree" )
{
    for ( const auto& s : test::random_corpus( 55, 150, { .max_worlds = 6 } ) )
    {
        const auto& model = s.model();
        test::NaiveBisimulation naive{ model };
        for ( unsigned h = 0; h <= 3; ++h )
            for ( WorldId w = 0; w < model.world_count(); ++w )
                for ( WorldId v = 0; v < model.world_count(); ++v )
                    CHECK( ( test::unfolding_key( model, w, h ) == test::unfolding_key( model, v, h ) ) == naive( w, v, h ) );
    }
}
