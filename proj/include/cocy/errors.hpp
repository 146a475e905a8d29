#pragma once

#include <stdexcept>
#include <string>

namespace cocy {

// Parameter outside its documented domain (e.g. p not in (0,1)).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A plaquette with nonzero residual was found where a valid configuration
// is required. Carries the first offending plaquette in scan order.
struct CocycleViolation : std::runtime_error {
  int plaq_x;
  int plaq_y;
  CocycleViolation(int x, int y)
      : std::runtime_error("cocycle violation at plaquette (" + std::to_string(x) + "," +
                           std::to_string(y) + ")"),
        plaq_x(x),
        plaq_y(y) {}
};

struct PathOutOfWindow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Marginal h or v is 0 or 1, so the cone direction -h/v is degenerate.
struct DegenerateMarginals : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two vertices of one 0-cluster carry different height values. Cannot happen
// on a validated configuration; indicates an internal bug.
struct FConstancyViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct NoVerticalEdges : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("parse error at line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

}  // namespace cocy
