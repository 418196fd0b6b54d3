#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlang/graph.hpp"

namespace netlang {

// Parse failure with the offending 1-based line number.
class EdgeListError : public std::runtime_error {
public:
    EdgeListError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct LoadedGraph {
    Graph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
    // Dense index -> original label, in first-appearance order; only filled
    // when parsing with string labels.
    std::vector<std::string> labels;
};

// Whitespace-separated "u v" pairs, one edge per line; '#' lines and blank
// lines are ignored. With string_labels the tokens may be arbitrary strings
// and are densely re-indexed; otherwise they must be non-negative integers
// used as node ids directly (node count = max id + 1).
LoadedGraph read_edge_list(const std::string& path, bool string_labels = false);

// Writes '#' metadata lines followed by one "u v" line per edge (u < v,
// sorted). The file always ends with a newline.
void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& metadata);

// Sidecar map, one "index<TAB>label" line per node.
void write_label_map(const std::string& path, const std::vector<std::string>& labels);

}  // namespace netlang
