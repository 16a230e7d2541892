#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epiplan::cli
{

// Exit codes: 0 success, 1 search failure / negative check, 2 input error.
int run( const std::vector< std::string >& args, std::ostream& out, std::ostream& err );

} // namespace epiplan::cli
