#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace fg {

// shared command-line configuration; every budget is positive and
// rank stays within [2, 26]
struct Config {
  int rank = 2;
  int pattern_max = 3;
  int g_max = 3;
  int pair_budget = 4;
  int exponent_budget = 4;
  int cl_budget = 4;
  std::string format = "csv";
  std::string out_path;  // empty = stdout
  std::uint64_t seed = 0;
};

// dispatches to the subcommands; exit code 0 on any computed answer
// (including "absent" and "non-inner"), 2 on usage or parse errors
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fg
