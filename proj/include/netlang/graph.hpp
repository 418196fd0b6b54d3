#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace netlang {

using NodeId = std::uint32_t;

// Undirected simple graph over dense node ids [0, n). Adjacency lists are
// kept sorted so iteration order (and everything seeded on top of it) is
// deterministic. Graphs are mutated only while being built; simulations and
// metrics treat them as read-only and may share them across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n) : adj_(n) {}

    NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }
    std::size_t edge_count() const { return m_; }
    double mean_degree() const;

    // Inserts {u,v}. Returns false (no mutation) for self-loops and edges
    // already present; throws std::out_of_range for invalid ids.
    bool add_edge(NodeId u, NodeId v);

    // Removes {u,v} if present; returns whether an edge was removed.
    bool remove_edge(NodeId u, NodeId v);

    bool has_edge(NodeId u, NodeId v) const;
    NodeId degree(NodeId u) const;
    const std::vector<NodeId>& neighbors(NodeId u) const;

    // 2M / n(n-1); throws std::invalid_argument for n < 2.
    double density() const;

    bool is_connected() const;
    std::size_t component_count() const;

    // Nodes of the largest connected component, ascending. Ties between
    // equal-sized components go to the one containing the smallest id.
    std::vector<NodeId> largest_component() const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    void check_node(NodeId u) const;

    std::vector<std::vector<NodeId>> adj_;
    std::size_t m_ = 0;
};

}  // namespace netlang
