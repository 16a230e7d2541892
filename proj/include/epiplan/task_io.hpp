#pragma once

#include "epiplan/formula.hpp"
#include "epiplan/model.hpp"
#include "epiplan/planner.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace epiplan
{

// Malformed or inconsistent task/state document. Syntax errors carry
// "line L, column C"; semantic errors name the offending entity.
struct TaskFormatError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

PlanningTask parse_task( std::string_view text );
PlanningTask load_task( const std::filesystem::path& path );
std::string print_task( const PlanningTask& task );

// State documents hold only "atoms", "agents" and "state".
EpistemicState parse_state( std::string_view text );
EpistemicState load_state( const std::filesystem::path& path );
std::string print_state( const EpistemicState& state );

Formula parse_formula( std::string_view text, const Vocabulary& vocabulary );
std::string print_formula( const Formula& phi, const Vocabulary& vocabulary );

// Re-renders arbitrary JSON text in the layout used by print_task.
std::string format_document( std::string_view json );

bool operator==( const PlanningTask& a, const PlanningTask& b );

} // namespace epiplan
