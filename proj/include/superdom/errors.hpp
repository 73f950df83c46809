#pragma once

#include <stdexcept>
#include <string>

namespace superdom {

// Input-file syntax errors; `line` is 1-based within the parsed text.
struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// A structural claim that the library relies on failed on a concrete
// instance. The verification harness catches these and turns them into
// report violations instead of aborting the run.
struct theorem_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace superdom
