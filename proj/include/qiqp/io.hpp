#pragma once

#include "qiqp/graph.hpp"
#include "qiqp/model.hpp"

#include <iosfwd>
#include <string>

namespace qiqp {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Text formats. Sections are keyword-delimited; '#' starts a comment and
// integer tokens may wrap lines freely.
Iqp parse_iqp(const std::string& text);
Graph parse_graph(const std::string& text);

// Canonical writers; parse(emit(x)) == x.
std::string emit_iqp(const Iqp& iqp);
std::string emit_graph(const Graph& g);

// "18", "-7" or "7/2".
std::string render_rat(const Rat& value);

// Batch entry point used by the binary and the tests. Returns the process
// exit code: 0 for a decided status, 2 for usage/parse errors, 3 when a
// budget was exhausted or boundedness stayed unknown.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qiqp
