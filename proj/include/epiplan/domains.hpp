#pragma once

#include "epiplan/action.hpp"
#include "epiplan/model.hpp"
#include "epiplan/planner.hpp"

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace epiplan
{

// n switches, agents a0..an. switch_k turns on_k on, seen by a0 and ak
// only; the other agents believe nothing happened. With communication,
// tell_k publicly announces that a0 believes on_k.
PlanningTask gen_switches( unsigned n, bool with_comm = false );

struct ConsecutiveNumbers
{
    EpistemicState state;
    Action announcement; // public announcement that b does not know a's number
};

// Two agents a and b hold consecutive numbers in [0, max]. Worlds are the
// number pairs connected to (na, nb), ordered by decreasing sum.
ConsecutiveNumbers gen_consecutive_numbers( unsigned max, unsigned na, unsigned nb );

// Reconstructed benchmark families; instance numbers start at 1.
PlanningTask gen_coin_in_box( unsigned instance );
PlanningTask gen_selective_communication( unsigned instance );
PlanningTask gen_collaboration( unsigned instance );

struct BundledInstance
{
    std::string domain;
    std::string instance;
    std::function< PlanningTask() > make;
};

// Everything shipped under domains/<domain>/<instance>.task.
std::vector< BundledInstance > bundled_instances();

// Writes every bundled instance below `root`; returns the files written.
std::vector< std::filesystem::path > write_bundled_domains( const std::filesystem::path& root );

} // namespace epiplan
