// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "epiplan/bisimulation.hpp"
#include "epiplan/canonical.hpp"
#include "epiplan/domains.hpp"
#include "epiplan/partition.hpp"
#include "epiplan/planner.hpp"
#include "epiplan/task_io.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

using namespace epiplan;

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point start )
{
    return std::chrono::duration< double >( Clock::now() - start ).count();
}

struct Verdict
{
    bool pass = true;
    std::string detail;
};

// Shared random corpus: 500 pointed models, at most 8 worlds, 2 agents, 2
// atoms.
const std::vector< EpistemicState >& corpus()
{
    static const auto models = test::random_corpus( 20240601, 500, { .max_worlds = 8, .atoms = 2, .agents = 2 } );
    return models;
}

Verdict chain_contraction()
{
    const auto start = Clock::now();
    const auto chain = test::chain( 5 );
    const auto c = canonical_contraction( chain, 5 ).state;
    Verdict v;
    v.pass = c.world_count() == 1 && c.model().edge_count() == 1 && b_bisimilar( chain, c, 5 ) &&
             !b_bisimilar( chain, c, 6 );
    const auto elapsed = seconds_since( start );
    v.pass = v.pass && elapsed < 1.0;
    std::ostringstream out;
    out << c.world_count() << " world, " << c.model().edge_count() << " edge";
    v.detail = out.str();
    return v;
}

Verdict renaming_invariance()
{
    const auto start = Clock::now();
    test::Rng rng{ 7 };
    std::size_t failures = 0;
    std::size_t checks = 0;
    for ( const auto& s : corpus() )
        for ( unsigned b = 0; b <= 4; ++b )
        {
            const auto c = canonical_contraction( s, b );
            const auto encoded = encode_state( c );
            const auto renamed = permute_worlds( s, test::random_permutation( rng, s.world_count() ) );
            failures += encoded != encode_state( canonical_contraction( renamed, b ) );
            failures += encoded != encode_state( canonical_contraction( c.state, b ) );
            checks += 2;
        }
    const auto elapsed = seconds_since( start );
    std::ostringstream out;
    out << failures << " failures in " << checks << " comparisons";
    return { failures == 0 && elapsed < 30.0, out.str() };
}

Verdict signature_partition_oracle()
{
    const auto& models = corpus();
    std::size_t failures = 0;
    std::size_t pairs = 0;
    for ( std::size_t i = 0; i < models.size(); ++i )
    {
        // Each model joined with its successor: pairs inside one model and
        // across two models.
        const auto& other = models[ ( i + 1 ) % models.size() ];
        const auto joined = disjoint_union( models[ i ].model(), other.model() );
        const auto& model = joined.model;
        const auto partitions = bounded_partition_refinement( model, 3 );
        const auto sigs = h_signatures( model, 3 );
        test::NaiveBisimulation naive{ model };
        for ( unsigned h = 0; h <= 3; ++h )
            for ( WorldId w = 0; w < model.world_count(); ++w )
                for ( WorldId v = w; v < model.world_count(); ++v )
                {
                    const bool oracle = naive( w, v, h );
                    const bool same_sig = sigs[ h ][ w ] == sigs[ h ][ v ];
                    const bool same_block = partitions[ h ].block_of( w ) == partitions[ h ].block_of( v );
                    failures += same_sig != oracle || same_block != oracle;
                    ++pairs;
                }
    }
    std::ostringstream out;
    out << failures << " disagreements over " << pairs << " world pairs";
    return { failures == 0, out.str() };
}

Verdict minimality()
{
    std::size_t failures = 0;
    std::size_t corpus_checks = 0;
    for ( const auto& s : corpus() )
        for ( unsigned b = 0; b <= 4; ++b )
        {
            const auto canonical = canonical_contraction( s, b ).state.world_count();
            const auto rooted = rooted_contraction( s, b ).state.world_count();
            const auto standard = standard_b_contraction( restrict( s, b ).state, b ).world_count();
            failures += canonical != rooted || rooted > standard;
            ++corpus_checks;
        }

    // Smallest model size per b-unfolding over every pointed model with at
    // most 3 worlds, 1 agent and 1 atom.
    const auto vocabulary = test::numbered_vocabulary( 1, 1 );
    constexpr unsigned max_b = 2;
    std::vector< std::map< std::string, std::size_t > > smallest( max_b + 1 );
    std::vector< EpistemicState > all;
    test::for_each_pointed_model( vocabulary, 3,
                                  [ & ]( const EpistemicState& s )
                                  {
                                      for ( unsigned b = 0; b <= max_b; ++b )
                                      {
                                          const auto key = test::unfolding_key( s.model(), s.designated(), b );
                                          auto [ it, inserted ] = smallest[ b ].try_emplace( key, s.world_count() );
                                          if ( !inserted )
                                              it->second = std::min( it->second, s.world_count() );
                                      }
                                      all.push_back( s );
                                  } );
    std::size_t exhaustive_checks = 0;
    for ( const auto& s : all )
        for ( unsigned b = 0; b <= max_b; ++b )
        {
            const auto c = canonical_contraction( s, b ).state;
            const auto key = test::unfolding_key( s.model(), s.designated(), b );
            failures += test::unfolding_key( c.model(), c.designated(), b ) != key;
            failures += c.world_count() != smallest[ b ].at( key );
            ++exhaustive_checks;
        }
    std::ostringstream out;
    out << failures << " failures; " << corpus_checks << " corpus cases, " << exhaustive_checks
        << " exhaustive cases over " << all.size() << " pointed models";
    return { failures == 0, out.str() };
}

Verdict update_preservation()
{
    test::Rng rng{ 31337 };
    const auto vocabulary = test::numbered_vocabulary( 2, 2 );
    std::size_t failures = 0;
    std::size_t pairs = 0;
    while ( pairs < 200 )
    {
        const auto s = test::random_state( rng, vocabulary, { .max_worlds = 8 } );
        const auto action = test::random_action( rng, *vocabulary, std::uniform_int_distribution< unsigned >( 0, 2 )( rng ) );
        if ( !applicable( s, action ) )
            continue;
        ++pairs;
        const auto md = action.modal_depth();
        const auto updated = product_update( s, action );

        const auto standard = standard_contraction( s );
        failures += !applicable( standard, action ) || !bisimilar( updated, product_update( standard, action ) );

        for ( unsigned b = md; b <= md + 2; ++b )
        {
            const auto canonical = canonical_contraction( s, b ).state;
            failures += !applicable( canonical, action ) ||
                        !b_bisimilar( updated, product_update( canonical, action ), b - md );
        }
    }
    std::ostringstream out;
    out << failures << " failures over " << pairs << " applicable pairs";
    return { failures == 0, out.str() };
}

Verdict switches_table()
{
    const auto start = Clock::now();
    const std::vector< std::size_t > expected_nodes{ 3, 10, 41, 206, 1237 };
    Verdict v;
    std::ostringstream out;
    for ( unsigned n = 2; n <= 6; ++n )
    {
        const auto task = gen_switches( n );
        const auto tree = iter_bound_search( task, SearchVariant::tree );
        const auto bfs = baseline_bfs( task );
        const auto expected = expected_nodes[ n - 2 ];
        const bool ok = tree.solved() && bfs.solved() && tree.plan.size() == n && bfs.plan.size() == n &&
                        tree.stats.nodes_expanded == expected && bfs.stats.nodes_expanded == expected;
        v.pass = v.pass && ok;
        out << ( n > 2 ? ", " : "" ) << "n=" << n << " |pi|=" << tree.plan.size() << " |T|=" << tree.stats.nodes_expanded
            << "/" << bfs.stats.nodes_expanded;
    }
    const auto elapsed = seconds_since( start );
    v.pass = v.pass && elapsed < 10.0;
    v.detail = out.str();
    return v;
}

struct SuiteRun
{
    std::string domain;
    std::string instance;
    PlanningTask task;
    SearchResult tree;
    SearchResult graph;
    SearchResult bfs;
};

const std::vector< SuiteRun >& suite_runs()
{
    static const auto runs = []
    {
        std::vector< SuiteRun > result;
        SearchOptions options;
        options.timeout = std::chrono::seconds{ 60 };
        const std::filesystem::path root{ EPIPLAN_DOMAINS_DIR };
        for ( const auto& instance : bundled_instances() )
        {
            auto task = load_task( root / instance.domain / ( instance.instance + ".task" ) );
            auto tree = iter_bound_search( task, SearchVariant::tree, options );
            auto graph = iter_bound_search( task, SearchVariant::graph, options );
            auto bfs = baseline_bfs( task, options );
            result.push_back( { instance.domain, instance.instance, std::move( task ), std::move( tree ),
                                std::move( graph ), std::move( bfs ) } );
        }
        return result;
    }();
    return runs;
}

Verdict soundness_completeness()
{
    std::size_t failures = 0;
    std::size_t plans = 0;
    std::size_t completeness = 0;
    std::ostringstream problems;
    for ( const auto& run : suite_runs() )
    {
        for ( const auto* result : { &run.tree, &run.graph, &run.bfs } )
            if ( result->solved() )
            {
                ++plans;
                if ( !verify_plan( run.task, result->plan ).ok )
                {
                    ++failures;
                    problems << " unsound:" << run.instance;
                }
            }
        // Known solution length from any solver.
        std::optional< std::size_t > length;
        for ( const auto* result : { &run.bfs, &run.tree, &run.graph } )
            if ( result->solved() )
                length = result->plan.size();
        if ( !length )
        {
            ++failures;
            problems << " unsolved:" << run.instance;
            continue;
        }
        const auto b = run.task.max_action_depth() * static_cast< unsigned >( *length ) + run.task.goal_depth();
        SearchOptions options;
        options.timeout = std::chrono::seconds{ 60 };
        const auto direct = bounded_tree_search( run.task, b, options );
        if ( direct.solved() && verify_plan( run.task, direct.plan ).ok )
            ++completeness;
        else
        {
            ++failures;
            problems << " incomplete:" << run.instance << "@b=" << b;
        }
    }
    std::ostringstream out;
    out << plans << " plans verified, " << completeness << "/" << suite_runs().size()
        << " solved directly at c*u+md(goal)" << problems.str();
    return { failures == 0, out.str() };
}

Verdict plan_length_parity()
{
    std::size_t compared = 0;
    std::ostringstream problems;
    bool pass = true;
    for ( const auto& run : suite_runs() )
    {
        if ( !run.tree.solved() || !run.graph.solved() || !run.bfs.solved() )
            continue;
        ++compared;
        if ( run.tree.plan.size() != run.bfs.plan.size() || run.graph.plan.size() != run.bfs.plan.size() )
        {
            pass = false;
            problems << " " << run.instance << ":" << run.tree.plan.size() << "/" << run.graph.plan.size() << "/"
                     << run.bfs.plan.size();
        }
    }
    std::ostringstream out;
    out << compared << "/" << suite_runs().size() << " instances solved by all three, lengths equal" << problems.str();
    return { pass && compared > 0, out.str() };
}

Verdict reconstructed_columns()
{
    struct Expected
    {
        std::string domain;
        std::size_t atoms, agents, worlds, actions;
        std::vector< unsigned > goal_md;
    };
    const std::vector< Expected > table{
        { "coin-in-box", 5, 3, 2, 31, { 1, 1, 1, 2, 2 } },
        { "selective-communication", 7, 2, 2, 14, { 1, 2, 2, 1 } },
        { "collaboration", 18, 2, 4, 28, { 2, 1, 1, 1 } },
    };
    bool pass = true;
    std::size_t checked = 0;
    double ratio_sum = 0;
    std::size_t ratio_count = 0;
    for ( const auto& expected : table )
    {
        std::vector< unsigned > md;
        for ( const auto& run : suite_runs() )
        {
            if ( run.domain != expected.domain )
                continue;
            const auto& task = run.task;
            pass = pass && task.vocabulary().atom_count() == expected.atoms &&
                   task.vocabulary().agent_count() == expected.agents &&
                   task.initial().world_count() == expected.worlds && task.actions().size() == expected.actions;
            md.push_back( task.goal_depth() );
            ++checked;
            if ( run.tree.solved() && run.bfs.solved() && run.tree.stats.elapsed_ms > 0 )
            {
                ratio_sum += run.bfs.stats.elapsed_ms / run.tree.stats.elapsed_ms;
                ++ratio_count;
            }
        }
        pass = pass && md == expected.goal_md;
    }
    std::ostringstream out;
    out.precision( 2 );
    out << std::fixed << checked << " instances match |P|/|AG|/|W|/|A|/md; informational mean BFS/IBTS time ratio "
        << ( ratio_count ? ratio_sum / static_cast< double >( ratio_count ) : 0.0 ) << " (not gated)";
    return { pass && checked == 13, out.str() };
}

} // namespace

int main()
{
    const std::vector< std::pair< const char*, std::function< Verdict() > > > criteria{
        { "chain contraction", chain_contraction },
        { "renaming invariance and idempotence", renaming_invariance },
        { "signatures, partitions and naive bisimilarity agree", signature_partition_oracle },
        { "minimality", minimality },
        { "update preserves (bounded) bisimilarity", update_preservation },
        { "switches table", switches_table },
        { "soundness and completeness on the bundled suite", soundness_completeness },
        { "plan-length parity", plan_length_parity },
        { "reconstructed domain columns", reconstructed_columns },
    };
    int failed = 0;
    for ( std::size_t i = 0; i < criteria.size(); ++i )
    {
        const auto start = Clock::now();
        Verdict verdict;
        try
        {
            verdict = criteria[ i ].second();
        }
        catch ( const std::exception& error )
        {
            verdict = { false, std::string( "exception: " ) + error.what() };
        }
        char timing[ 32 ];
        std::snprintf( timing, sizeof timing, "%.2f s", seconds_since( start ) );
        std::cout << "criterion " << i + 1 << " " << ( verdict.pass ? "PASS" : "FAIL" ) << " " << criteria[ i ].first
                  << ": " << verdict.detail << " [" << timing << "]" << std::endl;
        failed += verdict.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
