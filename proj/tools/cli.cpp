#include "cli.hpp"

#include "epiplan/bisimulation.hpp"
#include "epiplan/canonical.hpp"
#include "epiplan/domains.hpp"
#include "epiplan/planner.hpp"
#include "epiplan/task_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

namespace epiplan::cli
{

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

const std::vector< std::string > algorithms{ "iter-tree", "iter-graph", "bfs-baseline" };

struct SolveSettings
{
    std::string search = "iter-tree";
    unsigned max_bound = 32;
    double timeout = 60;
    bool memoize = false;
};

SearchOptions options_of( const SolveSettings& settings )
{
    SearchOptions options;
    options.max_bound = settings.max_bound;
    options.memoize = settings.memoize;
    options.timeout = std::chrono::milliseconds( static_cast< long long >( settings.timeout * 1000.0 ) );
    return options;
}

SearchResult run_search( const PlanningTask& task, const std::string& search, const SearchOptions& options )
{
    if ( search == "iter-tree" )
        return iter_bound_search( task, SearchVariant::tree, options );
    if ( search == "iter-graph" )
        return iter_bound_search( task, SearchVariant::graph, options );
    return baseline_bfs( task, options );
}

std::string format_ms( double ms )
{
    std::ostringstream text;
    text << std::fixed << std::setprecision( 3 ) << ms;
    return text.str();
}

int cmd_solve( const std::string& path, const SolveSettings& settings, bool verify, std::ostream& out,
               std::ostream& err )
{
    const auto task = load_task( path );
    const auto result = run_search( task, settings.search, options_of( settings ) );

    auto status = result.status;
    if ( result.solved() && verify )
    {
        const auto check = verify_plan( task, result.plan );
        if ( !check.ok )
        {
            err << "plan failed verification at step " << *check.failed_step << ": " << check.reason << "\n";
            return exit_failed;
        }
    }

    out << "status: " << to_string( status ) << "\n";
    out << "search: " << settings.search << "\n";
    out << "bound: " << result.stats.final_bound << "\n";
    out << "nodes_expanded: " << result.stats.nodes_expanded << "\n";
    out << "nodes_generated: " << result.stats.nodes_generated << "\n";
    out << "time_ms: " << format_ms( result.stats.elapsed_ms ) << "\n";
    if ( !result.solved() )
    {
        err << to_string( status ) << "\n";
        return exit_failed;
    }
    out << "plan_length: " << result.plan.size() << "\n";
    out << "plan:\n";
    for ( const auto& step : result.plan )
        out << step << "\n";
    return exit_ok;
}

int cmd_contract( const std::string& path, unsigned bound, const std::string& method, std::ostream& out )
{
    const auto state = load_state( path );
    const auto contracted = [ & ]
    {
        if ( method == "canonical" )
            return canonical_contraction( state, bound ).state;
        if ( method == "rooted" )
            return rooted_contraction( state, bound ).state;
        if ( method == "standard-b" )
            return standard_b_contraction( restrict( state, bound ).state, bound );
        return standard_contraction( reachable_part( state ).state );
    }();

    auto document = nlohmann::ordered_json::parse( print_state( contracted ) );
    document[ "stats" ] = { { "method", method },
                            { "bound", bound },
                            { "worlds", contracted.world_count() },
                            { "edges", contracted.model().edge_count() } };
    out << format_document( document.dump() );
    return exit_ok;
}

int cmd_check( const std::string& first, const std::string& second, const std::string& bound, std::ostream& out )
{
    const auto s = load_state( first );
    const auto t = load_state( second );
    bool result = false;
    if ( bound == "full" )
        result = bisimilar( s, t );
    else
    {
        std::size_t used = 0;
        unsigned long value = 0;
        try
        {
            value = std::stoul( bound, &used );
        }
        catch ( const std::exception& )
        {
            used = 0;
        }
        if ( used != bound.size() || bound.empty() )
            throw CLI::ValidationError( "--bound", "expected a natural number or 'full'" );
        result = b_bisimilar( s, t, static_cast< unsigned >( value ) );
    }
    out << ( result ? "true" : "false" ) << "\n";
    return result ? exit_ok : exit_failed;
}

struct BenchRow
{
    std::string domain;
    std::string instance;
    std::size_t atoms = 0;
    std::size_t agents = 0;
    std::size_t worlds = 0;
    std::size_t actions = 0;
    unsigned goal_md = 0;
    std::string algorithm;
    SearchResult result;
};

std::string csv_line( const BenchRow& row )
{
    std::ostringstream line;
    line << row.domain << ',' << row.instance << ',' << row.atoms << ',' << row.agents << ',' << row.worlds << ','
         << row.actions << ',' << row.goal_md << ',' << row.algorithm << ',';
    if ( row.result.solved() )
        line << row.result.plan.size();
    line << ',' << row.result.stats.nodes_expanded << ',' << format_ms( row.result.stats.elapsed_ms ) << ','
         << ( row.result.solved() ? "true" : "false" );
    return line.str();
}

int cmd_bench( const std::string& suite, std::vector< std::string > selected, const std::string& out_path,
               unsigned jobs, const SolveSettings& settings, std::ostream& out, std::ostream& err )
{
    std::vector< std::filesystem::path > files;
    for ( const auto& entry : std::filesystem::recursive_directory_iterator( suite ) )
        if ( entry.is_regular_file() && entry.path().extension() == ".task" )
            files.push_back( entry.path() );
    // Natural order so that switches-10 follows switches-9.
    std::sort( files.begin(), files.end(),
               []( const auto& a, const auto& b )
               {
                   const auto key = []( const std::filesystem::path& p )
                   {
                       const auto stem = p.stem().string();
                       auto digits = stem.find_last_not_of( "0123456789" ) + 1;
                       const auto number = digits < stem.size() ? std::stoull( stem.substr( digits ) ) : 0ULL;
                       return std::tuple{ p.parent_path().string(), stem.substr( 0, digits ), number, stem };
                   };
                   return key( a ) < key( b );
               } );
    if ( files.empty() )
    {
        err << "no .task files under '" << suite << "'\n";
        return exit_input;
    }

    std::vector< PlanningTask > tasks;
    for ( const auto& file : files )
        tasks.push_back( load_task( file ) );

    std::vector< BenchRow > rows;
    for ( std::size_t t = 0; t < tasks.size(); ++t )
        for ( const auto& algorithm : selected )
        {
            const auto& task = tasks[ t ];
            rows.push_back( BenchRow{ files[ t ].parent_path().filename().string(), files[ t ].stem().string(),
                                      task.vocabulary().atom_count(), task.vocabulary().agent_count(),
                                      task.initial().world_count(), task.actions().size(), task.goal_depth(),
                                      algorithm, {} } );
        }

    std::vector< std::size_t > task_of;
    for ( std::size_t t = 0; t < tasks.size(); ++t )
        for ( std::size_t k = 0; k < selected.size(); ++k )
            task_of.push_back( t );

    std::atomic< std::size_t > next{ 0 };
    std::mutex log_mutex;
    const auto options = options_of( settings );
    const auto worker = [ & ]
    {
        for ( auto i = next++; i < rows.size(); i = next++ )
        {
            rows[ i ].result = run_search( tasks[ task_of[ i ] ], rows[ i ].algorithm, options );
            std::lock_guard lock{ log_mutex };
            err << rows[ i ].instance << " " << rows[ i ].algorithm << ": " << to_string( rows[ i ].result.status )
                << "\n";
        }
    };
    std::vector< std::thread > pool;
    for ( unsigned j = 1; j < std::max( jobs, 1U ); ++j )
        pool.emplace_back( worker );
    worker();
    for ( auto& thread : pool )
        thread.join();

    std::ostringstream csv;
    csv << "domain,instance,num_atoms,num_agents,initial_worlds,num_actions,goal_md,algorithm,plan_length,"
           "nodes_expanded,time_ms,solved\n";
    for ( const auto& row : rows )
        csv << csv_line( row ) << "\n";

    if ( out_path.empty() || out_path == "-" )
        out << csv.str();
    else
    {
        std::ofstream file{ out_path, std::ios::binary };
        if ( !file )
        {
            err << "cannot write '" << out_path << "'\n";
            return exit_input;
        }
        file << csv.str();
    }
    return exit_ok;
}

} // namespace

int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err )
{
    CLI::App app{ "Depth-bounded epistemic planner", "epiplan" };
    app.require_subcommand( 1 );

    SolveSettings solve_settings;
    std::string task_path;
    bool verify = false;
    auto* solve = app.add_subcommand( "solve", "Search for a plan" );
    solve->add_option( "task", task_path, "Task file" )->required();
    solve->add_option( "--search", solve_settings.search, "Search algorithm" )
        ->check( CLI::IsMember( algorithms ) );
    solve->add_option( "--max-bound", solve_settings.max_bound, "Largest bound tried by iterative search" );
    solve->add_option( "--timeout", solve_settings.timeout, "Timeout in seconds" )->check( CLI::NonNegativeNumber );
    solve->add_flag( "--verify", verify, "Replay the plan without contractions before reporting success" );
    solve->add_flag( "--memo", solve_settings.memoize, "Cache child nodes across iterations" );

    std::string state_path;
    unsigned bound = 0;
    std::string method = "canonical";
    auto* contract = app.add_subcommand( "contract", "Contract an epistemic state" );
    contract->add_option( "state", state_path, "State file" )->required();
    contract->add_option( "--bound", bound, "Depth bound" )->required();
    contract->add_option( "--method", method, "Contraction" )
        ->check( CLI::IsMember( { "canonical", "rooted", "standard-b", "standard" } ) );

    std::string first;
    std::string second;
    std::string check_bound;
    auto* check = app.add_subcommand( "check", "Test (bounded) bisimilarity of two states" );
    check->add_option( "first", first, "State file" )->required();
    check->add_option( "second", second, "State file" )->required();
    check->add_option( "--bound", check_bound, "Depth bound or 'full'" )->required();

    std::string suite;
    std::vector< std::string > selected{ "iter-tree", "bfs-baseline" };
    std::string out_path;
    unsigned jobs = 1;
    SolveSettings bench_settings;
    auto* bench = app.add_subcommand( "bench", "Run algorithms over a directory of tasks and write CSV" );
    bench->add_option( "suite", suite, "Directory searched recursively for .task files" )->required();
    bench->add_option( "--algorithms", selected, "Algorithms to run" )
        ->delimiter( ',' )
        ->check( CLI::IsMember( algorithms ) );
    bench->add_option( "--out", out_path, "CSV output file ('-' for standard output)" );
    bench->add_option( "--jobs", jobs, "Parallel runs" )->check( CLI::PositiveNumber );
    bench->add_option( "--timeout", bench_settings.timeout, "Timeout per run in seconds" )
        ->check( CLI::NonNegativeNumber );
    bench->add_option( "--max-bound", bench_settings.max_bound, "Largest bound tried by iterative search" );
    bench->add_flag( "--memo", bench_settings.memoize, "Cache child nodes across iterations" );

    std::string generate_root = "domains";
    auto* generate = app.add_subcommand( "generate", "Write the bundled benchmark tasks" );
    generate->add_option( "--out", generate_root, "Target directory" );

    try
    {
        std::vector< std::string > reversed( args.rbegin(), args.rend() );
        app.parse( reversed );
    }
    catch ( const CLI::ParseError& error )
    {
        const auto code = app.exit( error, out, err );
        return code == 0 ? exit_ok : exit_input;
    }

    try
    {
        if ( *solve )
            return cmd_solve( task_path, solve_settings, verify, out, err );
        if ( *contract )
            return cmd_contract( state_path, bound, method, out );
        if ( *check )
            return cmd_check( first, second, check_bound, out );
        if ( *bench )
            return cmd_bench( suite, selected, out_path, jobs, bench_settings, out, err );
        if ( *generate )
        {
            for ( const auto& path : write_bundled_domains( generate_root ) )
                out << path.string() << "\n";
            return exit_ok;
        }
    }
    catch ( const TaskFormatError& error )
    {
        err << "error: " << error.what() << "\n";
        return exit_input;
    }
    catch ( const CLI::Error& error )
    {
        err << "error: " << error.what() << "\n";
        return exit_input;
    }
    catch ( const std::exception& error )
    {
        err << "error: " << error.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

} // namespace epiplan::cli
