#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace psbck {

// One CLI invocation, already split into fields.
struct Request {
  std::string command;  // validate props enum quotient lift hedges factor valuation suite
  std::string kind;     // enum kind, or check|compose for valuation
  std::vector<std::string> files;
  std::string algebra;  // --algebra
  std::string to;       // --to, target algebra of enum hom
  std::string vto;      // --vto
  std::string u;        // --u, operator on the target
  std::string ds;       // --ds, a subset name
  std::string q;        // --q, a subset name
  std::string phi;      // --phi
  std::string hom;      // --hom
  bool json = false;
  std::uint64_t seed = 2024;   // suite: generated algebras
  std::size_t generated = 120;
};

// exit_code: 0 success, 1 a checked property failed, 2 bad input.
struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Never throws for library errors; they become "error[<code>]: ..." on err
// with exit code 2.
Outcome run(const Request& request);

// Commands and their kinds, for help texts and argument validation.
const std::vector<std::string>& command_names();
const std::vector<std::string>& enum_kinds();

}  // namespace psbck
