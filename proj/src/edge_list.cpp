#include "netlang/edge_list.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace netlang {

namespace {

// Node ids above this are almost certainly a malformed file, and the dense
// representation would try to allocate adjacency lists for every id below.
constexpr std::uint64_t kMaxNodeId = 100'000'000;

bool parse_node_id(const std::string& token, std::uint64_t& out) {
    if (token.empty()) return false;
    std::uint64_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
        if (value > kMaxNodeId) return false;
    }
    out = value;
    return true;
}

}  // namespace

LoadedGraph read_edge_list(const std::string& path, bool string_labels) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;
    std::unordered_map<std::string, std::uint64_t> label_index;
    LoadedGraph result;

    std::string line;
    std::size_t line_no = 0;
    std::uint64_t max_id = 0;
    bool any_node = false;

    auto to_id = [&](const std::string& token) -> std::uint64_t {
        if (string_labels) {
            auto [it, inserted] = label_index.emplace(token, result.labels.size());
            if (inserted) result.labels.push_back(token);
            return it->second;
        }
        std::uint64_t id = 0;
        if (!parse_node_id(token, id))
            throw EdgeListError("expected a non-negative integer node id, got '" + token + "'",
                                line_no);
        return id;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream tokens(line);
        std::string a, b, extra;
        tokens >> a >> b;
        if (b.empty()) throw EdgeListError("expected two whitespace-separated node ids", line_no);
        if (tokens >> extra)
            throw EdgeListError("unexpected trailing token '" + extra + "'", line_no);

        const std::uint64_t u = to_id(a);
        const std::uint64_t v = to_id(b);
        any_node = true;
        max_id = std::max({max_id, u, v});
        if (u == v) {
            ++result.self_loops_dropped;
            continue;
        }
        raw_edges.emplace_back(u, v);
    }

    result.graph = Graph(any_node ? static_cast<NodeId>(max_id + 1) : 0);
    for (const auto& [u, v] : raw_edges) {
        if (!result.graph.add_edge(static_cast<NodeId>(u), static_cast<NodeId>(v)))
            ++result.duplicates_dropped;
    }
    return result;
}

void write_edge_list(const std::string& path, const Graph& g,
                     const std::vector<std::string>& metadata) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (const auto& note : metadata) out << "# " << note << '\n';
    out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_label_map(const std::string& path, const std::vector<std::string>& labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::size_t i = 0; i < labels.size(); ++i) out << i << '\t' << labels[i] << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace netlang
