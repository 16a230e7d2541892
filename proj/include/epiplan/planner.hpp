#pragma once

#include "epiplan/action.hpp"
#include "epiplan/canonical.hpp"
#include "epiplan/formula.hpp"
#include "epiplan/model.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace epiplan
{

class PlanningTask
{
public:
    PlanningTask( EpistemicState initial, std::vector< Action > actions, Formula goal );

    [[nodiscard]] const EpistemicState& initial() const { return _initial; }
    [[nodiscard]] const std::vector< Action >& actions() const { return _actions; }
    [[nodiscard]] const Formula& goal() const { return _goal; }
    [[nodiscard]] unsigned goal_depth() const { return _goal.modal_depth(); }
    [[nodiscard]] unsigned max_action_depth() const;
    [[nodiscard]] std::optional< std::size_t > find_action( const std::string& name ) const;
    [[nodiscard]] const Vocabulary& vocabulary() const { return _initial.vocabulary(); }

private:
    EpistemicState _initial;
    std::vector< Action > _actions;
    Formula _goal;
};

using Plan = std::vector< std::string >;

struct SearchNode
{
    CanonicalState contracted;
    unsigned bound = 0;
    bool is_bisim = false;

    [[nodiscard]] const EpistemicState& state() const { return contracted.state; }
};

SearchNode init_node( const EpistemicState& state, unsigned b, bool was_bisim );

// nullopt when the child's bound would drop below the goal depth.
std::optional< SearchNode > child_node( const SearchNode& node, const Action& action, unsigned goal_depth );

enum class SearchStatus
{
    solved,
    exhausted,   // frontier ran dry and no node was cut by the bound
    bound_limit, // every bound up to the maximum failed
    timeout,
};

const char* to_string( SearchStatus status );

struct IterationStats
{
    unsigned bound = 0;
    std::size_t nodes_expanded = 0;
    std::size_t nodes_generated = 0;
};

struct SearchStats
{
    // Totals over all iterations.
    std::size_t nodes_expanded = 0;
    std::size_t nodes_generated = 0;
    unsigned final_bound = 0;
    std::vector< IterationStats > iterations;
    double elapsed_ms = 0;
};

struct SearchResult
{
    SearchStatus status = SearchStatus::exhausted;
    Plan plan;
    SearchStats stats;

    [[nodiscard]] bool solved() const { return status == SearchStatus::solved; }
};

struct SearchOptions
{
    unsigned max_bound = 32;
    std::optional< std::chrono::milliseconds > timeout;
    // Cache child nodes by (parent state, bound, is_bisim, action).
    bool memoize = false;
};

enum class SearchVariant
{
    tree,
    graph,
};

// One breadth-first pass at a fixed bound b >= goal depth. A bound-limited
// failure is reported as bound_limit, a genuinely empty search space as
// exhausted.
SearchResult bounded_tree_search( const PlanningTask& task, unsigned b, const SearchOptions& options = {} );
SearchResult bounded_graph_search( const PlanningTask& task, unsigned b, const SearchOptions& options = {} );

// Bounded search for b = goal depth, goal depth + 1, ... up to
// options.max_bound.
SearchResult iter_bound_search( const PlanningTask& task, SearchVariant variant, const SearchOptions& options = {} );

// Breadth-first search over standard bisimulation contractions, without
// duplicate detection.
SearchResult baseline_bfs( const PlanningTask& task, const SearchOptions& options = {} );

struct Verification
{
    bool ok = false;
    std::optional< std::size_t > failed_step; // index of the offending action, or plan size for the goal
    std::string reason;
};

// Replays the plan with plain product updates from the initial state.
Verification verify_plan( const PlanningTask& task, const Plan& plan );

} // namespace epiplan
