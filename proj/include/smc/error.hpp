#pragma once

#include <stdexcept>
#include <string>

namespace smc {

// malformed text input (cli exit code 2)
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// overflow, oracle guard, violated precondition inside a solver (exit code 1)
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace smc
