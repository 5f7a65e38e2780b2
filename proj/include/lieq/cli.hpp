// Command-line front end: verbs over a type spec, with json/csv/text output.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lieq/rootsystem.hpp"

namespace lieq {

// Syntax error in a type spec; position is a 0-based offset into the input.
struct ParseError : DomainError {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos) : DomainError(what), position(pos) {}
};

// A well-formed factor with a rank the family does not have ("D3", "E9").
struct InvalidRank : DomainError {
  using DomainError::DomainError;
};

// "B3", "c2xa1", "A1 x A1"; factors separated by 'x'.
std::vector<SimpleType> parse_type_spec(const std::string& s);

// "1,0,-2" or "(1,0,-2)"
IVec parse_ivec(const std::string& s);

enum class ExitCode { Ok = 0, CheckFailed = 1, Usage = 2 };

struct Command {
  std::string verb;  // rootsys chevalley module nilalg classify verify geodesic
  std::string type_spec;
  std::string rep = "adjoint";
  long bound = 3;
  long kmax = 3;
  std::string format = "text";  // json csv text
  std::string suite = "all";    // all bracket weyl chevalley geodesic zform
  std::string weight;           // geodesic: fundamental coordinates
  std::string root;             // geodesic: simple-root coordinates of a positive root
  std::string out;              // file, stdout when empty
};

// Writes the report to out (or cmd.out) and errors to err as "error[<code>]: ...".
int run(const Command& cmd, std::ostream& out, std::ostream& err);

// Parses argv (argv[0] is the program name) and calls run.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lieq
