#include "netlang/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace netlang {

void Graph::check_node(NodeId u) const {
    if (u >= adj_.size()) {
        throw std::out_of_range("node id " + std::to_string(u) +
                                " out of range for graph with " +
                                std::to_string(adj_.size()) + " nodes");
    }
}

double Graph::mean_degree() const {
    if (adj_.empty()) return 0.0;
    return 2.0 * static_cast<double>(m_) / static_cast<double>(adj_.size());
}

bool Graph::add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) return false;
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
    return true;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    if (u == v) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

NodeId Graph::degree(NodeId u) const {
    check_node(u);
    return static_cast<NodeId>(adj_[u].size());
}

const std::vector<NodeId>& Graph::neighbors(NodeId u) const {
    check_node(u);
    return adj_[u];
}

double Graph::density() const {
    const auto n = adj_.size();
    if (n < 2) throw std::invalid_argument("density undefined for graphs with fewer than 2 nodes");
    return 2.0 * static_cast<double>(m_) /
           (static_cast<double>(n) * static_cast<double>(n - 1));
}

namespace {

// Iterative BFS fill; returns component size.
std::size_t flood(const std::vector<std::vector<NodeId>>& adj, NodeId start,
                  std::vector<char>& visited, std::vector<NodeId>* members) {
    std::vector<NodeId> queue{start};
    visited[start] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
        NodeId u = queue[head++];
        for (NodeId v : adj[u]) {
            if (!visited[v]) {
                visited[v] = 1;
                queue.push_back(v);
            }
        }
    }
    if (members) *members = std::move(queue);
    return head;
}

}  // namespace

bool Graph::is_connected() const {
    if (adj_.size() <= 1) return true;
    std::vector<char> visited(adj_.size(), 0);
    return flood(adj_, 0, visited, nullptr) == adj_.size();
}

std::size_t Graph::component_count() const {
    std::vector<char> visited(adj_.size(), 0);
    std::size_t count = 0;
    for (NodeId u = 0; u < adj_.size(); ++u) {
        if (!visited[u]) {
            ++count;
            flood(adj_, u, visited, nullptr);
        }
    }
    return count;
}

std::vector<NodeId> Graph::largest_component() const {
    std::vector<char> visited(adj_.size(), 0);
    std::vector<NodeId> best;
    for (NodeId u = 0; u < adj_.size(); ++u) {
        if (visited[u]) continue;
        std::vector<NodeId> members;
        flood(adj_, u, visited, &members);
        // Components are discovered in order of their smallest node id, so a
        // strict comparison keeps the tie-break on the smallest id.
        if (members.size() > best.size()) best = std::move(members);
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(m_);
    for (NodeId u = 0; u < adj_.size(); ++u) {
        for (NodeId v : adj_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

}  // namespace netlang
