#pragma once

#include <string>
#include <string_view>

#include "tourcolor/tournament.hpp"

namespace tourcolor {

// The .trn text format:
//
//   line 1: decimal n
//   line 2: n(n-1)/2 characters from {0,1}, one per pair (i,j), i < j, in the
//           order (0,1),(0,2),...,(0,n-1),(1,2),...
//
// For tournaments '1' means i->j and '0' means j->i. For graphs '1' means the
// edge {i,j} is present. Lines starting with '#' are comments; the pair line
// may be omitted when n <= 1.

std::string serialize(const Tournament &t);
Tournament parse_tournament(std::string_view text);

std::string serialize(const Graph &g);
Graph parse_graph(std::string_view text);

std::string read_file(const std::string &path);

} // namespace tourcolor
