#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgc/graph.hpp"
#include "qgc/zxcf.hpp"

namespace qgc::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsageError = 2 };

// Runs one command line (args excludes the program name). File arguments named "-"
// read standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Nodes in id order, then edges in lexicographic order. Inputs blue, pivots orange,
// outputs black.
std::string export_dot(const CodeGraph& g);
// Adds each non-identity decoration as a label on the node's free edge.
std::string export_dot(const ZXDiagram& d);

}  // namespace qgc::cli
