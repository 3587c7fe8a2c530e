#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "clusterfit/graph.hpp"

namespace cfit {

// Raised on malformed graph files; line is 1-based, 0 when the problem is
// not tied to a single line (e.g. missing header).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const { return line_; }

private:
    int line_;
};

// Text graph format:
//   # comment (anywhere)
//   p <n> <m>
//   e <u> <v>        exactly m lines, 0 <= u,v < n, u != v
// Duplicate edges (in either orientation) and self-loops are errors.
Graph parse_graph(std::string_view text);

// Canonical serialization: header plus edges sorted with u < v, LF endings.
// parse_graph(write_graph(g)) == g, and the output is a fixed point of a
// parse/write round trip.
std::string write_graph(const Graph& g);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

}  // namespace cfit
