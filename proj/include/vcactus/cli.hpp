#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vcactus/cartan.hpp"

namespace vcactus::cli {

// Exit codes: 0 all checks pass, 1 verification or model failure, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "1,0,2" -> weight of the given rank; nonnegative entries only.
WeightVec parse_weight(const std::string& text, int rank);
// "1,3" -> {1,3}; every node in 1..rank.
NodeSet parse_nodes(const std::string& text, int rank);

}  // namespace vcactus::cli
