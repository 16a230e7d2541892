#include "epiplan/planner.hpp"

#include "epiplan/bisimulation.hpp"
#include "epiplan/semantics.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace epiplan
{

PlanningTask::PlanningTask( EpistemicState initial, std::vector< Action > actions, Formula goal )
    : _initial{ std::move( initial ) }, _actions{ std::move( actions ) }, _goal{ std::move( goal ) }
{
    std::unordered_set< std::string > names;
    for ( const auto& action : _actions )
        if ( !names.insert( action.name() ).second )
            throw std::invalid_argument( "duplicate action name '" + action.name() + "'" );
}

unsigned PlanningTask::max_action_depth() const
{
    unsigned depth = 0;
    for ( const auto& action : _actions )
        depth = std::max( depth, action.modal_depth() );
    return depth;
}

std::optional< std::size_t > PlanningTask::find_action( const std::string& name ) const
{
    for ( std::size_t i = 0; i < _actions.size(); ++i )
        if ( _actions[ i ].name() == name )
            return i;
    return std::nullopt;
}

SearchNode init_node( const EpistemicState& state, unsigned b, bool was_bisim )
{
    auto contracted = canonical_contraction( state, b );
    const bool is_bisim = was_bisim && bisimilar( contracted.state, state );
    return SearchNode{ std::move( contracted ), b, is_bisim };
}

std::optional< SearchNode > child_node( const SearchNode& node, const Action& action, unsigned goal_depth )
{
    assert( action.modal_depth() <= node.bound );
    if ( node.is_bisim )
        return init_node( product_update( node.state(), action ), node.bound, true );
    if ( node.bound >= action.modal_depth() + goal_depth )
        return init_node( product_update( node.state(), action ), node.bound - action.modal_depth(), false );
    return std::nullopt;
}

const char* to_string( SearchStatus status )
{
    switch ( status )
    {
    case SearchStatus::solved:
        return "solved";
    case SearchStatus::exhausted:
        return "exhausted";
    case SearchStatus::bound_limit:
        return "bound_limit";
    case SearchStatus::timeout:
        return "timeout";
    }
    return "unknown";
}

namespace
{

using Clock = std::chrono::steady_clock;

struct PathLink
{
    std::shared_ptr< const PathLink > parent;
    std::uint32_t action;
};
using Path = std::shared_ptr< const PathLink >;

Path extend( const Path& path, std::size_t action )
{
    return std::make_shared< const PathLink >( PathLink{ path, static_cast< std::uint32_t >( action ) } );
}

Plan extract_plan( const PlanningTask& task, Path path )
{
    Plan plan;
    for ( ; path; path = path->parent )
        plan.push_back( task.actions()[ path->action ].name() );
    std::reverse( plan.begin(), plan.end() );
    return plan;
}

std::string bound_key( unsigned bound, const std::string& encoding )
{
    return std::to_string( bound ) + ":" + encoding;
}

struct Deadline
{
    std::optional< Clock::time_point > at;

    static Deadline from( const SearchOptions& options, Clock::time_point start )
    {
        if ( !options.timeout )
            return {};
        return { start + *options.timeout };
    }

    [[nodiscard]] bool passed() const { return at && Clock::now() >= *at; }
};

double elapsed_ms( Clock::time_point start )
{
    return std::chrono::duration< double, std::milli >( Clock::now() - start ).count();
}

// Child results cached across iterations of one iterative search.
class ChildMemo
{
    struct Entry
    {
        bool applicable;
        std::optional< SearchNode > child;
    };
    std::unordered_map< std::string, Entry > _entries;

public:
    const Entry* find( const std::string& key ) const
    {
        const auto it = _entries.find( key );
        return it == _entries.end() ? nullptr : &it->second;
    }

    void store( std::string key, bool applicable, std::optional< SearchNode > child )
    {
        _entries.emplace( std::move( key ), Entry{ applicable, std::move( child ) } );
    }

    static std::string key( const std::string& parent_encoding, const SearchNode& parent, std::size_t action )
    {
        return parent_encoding + "|" + std::to_string( parent.bound ) + ( parent.is_bisim ? "b" : "n" ) +
               std::to_string( action );
    }
};

enum class Outcome
{
    solved,
    exhausted,
    cut,
    timeout,
};

struct Frontier
{
    SearchNode node;
    Path path;
    std::string encoding; // filled when needed
};

Outcome run_bounded( const PlanningTask& task, unsigned b, bool graph, const Deadline& deadline, ChildMemo* memo,
                     IterationStats& stats, Plan& plan )
{
    if ( b < task.goal_depth() )
        throw std::invalid_argument( "search bound below the goal's modal depth" );

    const bool need_encoding = graph || memo != nullptr;
    std::deque< Frontier > frontier;
    std::unordered_set< std::string > visited;

    {
        auto root = init_node( task.initial(), b, true );
        std::string encoding = need_encoding ? encode_state( root.contracted ) : std::string{};
        if ( graph )
            visited.insert( bound_key( root.bound, encoding ) );
        frontier.push_back( Frontier{ std::move( root ), nullptr, std::move( encoding ) } );
    }

    bool cut = false;
    while ( !frontier.empty() )
    {
        if ( deadline.passed() )
            return Outcome::timeout;

        auto current = std::move( frontier.front() );
        frontier.pop_front();
        if ( satisfies( current.node.state(), task.goal() ) )
        {
            plan = extract_plan( task, current.path );
            return Outcome::solved;
        }
        ++stats.nodes_expanded;

        for ( std::size_t i = 0; i < task.actions().size(); ++i )
        {
            const auto& action = task.actions()[ i ];
            if ( action.modal_depth() > current.node.bound )
            {
                cut = true;
                continue;
            }

            std::optional< SearchNode > child;
            bool is_applicable = false;
            if ( memo != nullptr )
            {
                auto key = ChildMemo::key( current.encoding, current.node, i );
                if ( const auto* hit = memo->find( key ) )
                {
                    is_applicable = hit->applicable;
                    child = hit->child;
                }
                else
                {
                    is_applicable = applicable( current.node.state(), action );
                    if ( is_applicable )
                        child = child_node( current.node, action, task.goal_depth() );
                    memo->store( std::move( key ), is_applicable, child );
                }
            }
            else
            {
                is_applicable = applicable( current.node.state(), action );
                if ( is_applicable )
                    child = child_node( current.node, action, task.goal_depth() );
            }

            if ( !is_applicable )
                continue;
            if ( !child )
            {
                cut = true;
                continue;
            }
            assert( child->bound >= task.goal_depth() );

            std::string encoding = need_encoding ? encode_state( child->contracted ) : std::string{};
            if ( graph && !visited.insert( bound_key( child->bound, encoding ) ).second )
                continue;
            ++stats.nodes_generated;
            frontier.push_back( Frontier{ std::move( *child ), extend( current.path, i ), std::move( encoding ) } );
        }
    }
    return cut ? Outcome::cut : Outcome::exhausted;
}

SearchStatus status_of( Outcome outcome )
{
    switch ( outcome )
    {
    case Outcome::solved:
        return SearchStatus::solved;
    case Outcome::exhausted:
        return SearchStatus::exhausted;
    case Outcome::cut:
        return SearchStatus::bound_limit;
    case Outcome::timeout:
        return SearchStatus::timeout;
    }
    return SearchStatus::exhausted;
}

SearchResult single_bound( const PlanningTask& task, unsigned b, bool graph, const SearchOptions& options )
{
    const auto start = Clock::now();
    const auto deadline = Deadline::from( options, start );
    ChildMemo memo;
    SearchResult result;
    IterationStats iteration{ b, 0, 0 };
    result.status = status_of(
        run_bounded( task, b, graph, deadline, options.memoize ? &memo : nullptr, iteration, result.plan ) );
    result.stats.nodes_expanded = iteration.nodes_expanded;
    result.stats.nodes_generated = iteration.nodes_generated;
    result.stats.final_bound = b;
    result.stats.iterations.push_back( iteration );
    result.stats.elapsed_ms = elapsed_ms( start );
    return result;
}

} // namespace

SearchResult bounded_tree_search( const PlanningTask& task, unsigned b, const SearchOptions& options )
{
    return single_bound( task, b, false, options );
}

SearchResult bounded_graph_search( const PlanningTask& task, unsigned b, const SearchOptions& options )
{
    return single_bound( task, b, true, options );
}

SearchResult iter_bound_search( const PlanningTask& task, SearchVariant variant, const SearchOptions& options )
{
    const auto start = Clock::now();
    const auto deadline = Deadline::from( options, start );
    ChildMemo memo;
    SearchResult result;
    result.status = SearchStatus::bound_limit;

    for ( unsigned b = task.goal_depth(); b <= options.max_bound; ++b )
    {
        IterationStats iteration{ b, 0, 0 };
        const auto outcome = run_bounded( task, b, variant == SearchVariant::graph, deadline,
                                          options.memoize ? &memo : nullptr, iteration, result.plan );
        result.stats.iterations.push_back( iteration );
        result.stats.nodes_expanded += iteration.nodes_expanded;
        result.stats.nodes_generated += iteration.nodes_generated;
        result.stats.final_bound = b;
        if ( outcome != Outcome::cut )
        {
            result.status = status_of( outcome );
            break;
        }
    }
    result.stats.elapsed_ms = elapsed_ms( start );
    return result;
}

SearchResult baseline_bfs( const PlanningTask& task, const SearchOptions& options )
{
    const auto start = Clock::now();
    const auto deadline = Deadline::from( options, start );
    const auto contract = []( const EpistemicState& state )
    { return standard_contraction( reachable_part( state ).state ); };

    SearchResult result;
    result.status = SearchStatus::exhausted;
    std::deque< std::pair< EpistemicState, Path > > frontier;
    frontier.emplace_back( contract( task.initial() ), nullptr );

    while ( !frontier.empty() )
    {
        if ( deadline.passed() )
        {
            result.status = SearchStatus::timeout;
            break;
        }
        auto [ state, path ] = std::move( frontier.front() );
        frontier.pop_front();
        if ( satisfies( state, task.goal() ) )
        {
            result.status = SearchStatus::solved;
            result.plan = extract_plan( task, path );
            break;
        }
        ++result.stats.nodes_expanded;
        for ( std::size_t i = 0; i < task.actions().size(); ++i )
        {
            const auto& action = task.actions()[ i ];
            if ( !applicable( state, action ) )
                continue;
            ++result.stats.nodes_generated;
            frontier.emplace_back( contract( product_update( state, action ) ), extend( path, i ) );
        }
    }
    result.stats.iterations.push_back( { 0, result.stats.nodes_expanded, result.stats.nodes_generated } );
    result.stats.elapsed_ms = elapsed_ms( start );
    return result;
}

Verification verify_plan( const PlanningTask& task, const Plan& plan )
{
    auto state = task.initial();
    for ( std::size_t step = 0; step < plan.size(); ++step )
    {
        const auto index = task.find_action( plan[ step ] );
        if ( !index )
            return { false, step, "unknown action '" + plan[ step ] + "'" };
        const auto& action = task.actions()[ *index ];
        if ( !applicable( state, action ) )
            return { false, step, "action '" + plan[ step ] + "' is not applicable" };
        state = product_update( state, action );
    }
    if ( !satisfies( state, task.goal() ) )
        return { false, plan.size(), "goal does not hold after the last action" };
    return { true, std::nullopt, {} };
}

} // namespace epiplan
