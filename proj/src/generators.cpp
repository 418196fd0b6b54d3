#include "netlang/generators.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "netlang/rng.hpp"

namespace netlang {

const char* family_name(Family f) {
    switch (f) {
        case Family::complete: return "complete";
        case Family::regular_ring: return "regular";
        case Family::small_world: return "smallworld";
        case Family::random_er: return "random";
        case Family::scale_free: return "scalefree";
    }
    return "?";
}

bool parse_family(const std::string& name, Family& out) {
    if (name == "complete") out = Family::complete;
    else if (name == "regular") out = Family::regular_ring;
    else if (name == "smallworld") out = Family::small_world;
    else if (name == "random") out = Family::random_er;
    else if (name == "scalefree") out = Family::scale_free;
    else return false;
    return true;
}

Graph gen_complete(NodeId n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_regular_ring(NodeId n, NodeId k) {
    if (k % 2 != 0) throw std::invalid_argument("ring lattice needs even k");
    if (k < 2 || k >= n) throw std::invalid_argument("ring lattice needs 2 <= k < n");
    Graph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 1; j <= k / 2; ++j) g.add_edge(i, (i + j) % n);
    return g;
}

Graph gen_small_world(NodeId n, NodeId k, double p, std::uint64_t seed, int max_retries) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("rewiring probability must be in [0,1]");
    if (k % 2 != 0) throw std::invalid_argument("small-world base ring needs even k");
    if (k < 2 || k >= n) throw std::invalid_argument("small-world base ring needs 2 <= k < n");

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        Graph g = gen_regular_ring(n, k);
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        // Visit each ring edge once, ordered by (source, clockwise offset).
        for (NodeId i = 0; i < n; ++i) {
            for (NodeId j = 1; j <= k / 2; ++j) {
                if (!rng.chance(p)) continue;
                if (g.degree(i) == n - 1) continue;  // no non-neighbor available
                const NodeId v = (i + j) % n;
                NodeId w;
                do {
                    w = static_cast<NodeId>(rng.index(n));
                } while (w == i || g.has_edge(i, w));  // excludes v as well
                g.remove_edge(i, v);
                g.add_edge(i, w);
            }
        }
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("small-world generation: " + std::to_string(max_retries + 1) +
                             " attempts all produced disconnected graphs");
}

Graph gen_random_er(NodeId n, NodeId k, std::uint64_t seed, int max_retries) {
    if (n < 2) throw std::invalid_argument("random graph needs n >= 2");
    if ((static_cast<std::uint64_t>(n) * k) % 2 != 0)
        throw std::invalid_argument("random graph needs n*k even so the edge count n*k/2 is integral");
    const std::uint64_t m = static_cast<std::uint64_t>(n) * k / 2;
    const std::uint64_t max_m = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > max_m) throw std::invalid_argument("requested mean degree exceeds the complete graph");
    if (m < n - 1)
        throw std::invalid_argument("n*k/2 edges cannot connect " + std::to_string(n) + " nodes");

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::set<std::uint64_t> picked;
        while (picked.size() < m) {
            NodeId u = static_cast<NodeId>(rng.index(n));
            NodeId v = static_cast<NodeId>(rng.index(n - 1));
            if (v >= u) ++v;
            if (u > v) std::swap(u, v);
            picked.insert((static_cast<std::uint64_t>(u) << 32) | v);
        }
        Graph g(n);
        for (std::uint64_t key : picked)
            g.add_edge(static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffULL));
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("random graph generation: " + std::to_string(max_retries + 1) +
                             " attempts all produced disconnected graphs");
}

Graph gen_scale_free(NodeId n, NodeId m0, NodeId m, std::uint64_t seed) {
    if (m < 1 || m > m0 || m0 >= n)
        throw std::invalid_argument("scale-free generation needs 1 <= m <= m0 < n");
    Graph g(n);
    // lottery holds one entry per unit of degree; drawing a uniform element
    // realizes degree-proportional attachment in O(1).
    std::vector<NodeId> lottery;
    lottery.reserve(2 * (m0 + static_cast<std::size_t>(m) * (n - m0)));

    // Seed nodes joined in a ring so that attachment is well-defined from the
    // first arrival (a 2-node "ring" is a single edge; a single seed node
    // starts isolated and the first arrival falls back to a uniform pick).
    if (m0 >= 2) {
        for (NodeId i = 0; i < m0; ++i) {
            NodeId j = (i + 1) % m0;
            if (g.add_edge(i, j)) {
                lottery.push_back(i);
                lottery.push_back(j);
            }
        }
    }

    Rng rng(seed);
    std::vector<NodeId> picks;
    for (NodeId a = m0; a < n; ++a) {
        picks.clear();
        while (picks.size() < m) {
            NodeId t;
            if (lottery.empty()) {
                t = static_cast<NodeId>(rng.index(a));
            } else {
                t = lottery[rng.index(lottery.size())];
            }
            bool dup = false;
            for (NodeId q : picks) {
                if (q == t) { dup = true; break; }
            }
            if (dup) continue;
            picks.push_back(t);
            g.add_edge(a, t);
            lottery.push_back(t);  // degree update visible to the next pick
        }
        for (std::size_t i = 0; i < picks.size(); ++i) lottery.push_back(a);
    }
    return g;
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::complete: return gen_complete(spec.n);
        case Family::regular_ring: return gen_regular_ring(spec.n, spec.k);
        case Family::small_world:
            return gen_small_world(spec.n, spec.k, spec.p, spec.seed, spec.max_retries);
        case Family::random_er:
            return gen_random_er(spec.n, spec.k, spec.seed, spec.max_retries);
        case Family::scale_free: return gen_scale_free(spec.n, spec.m0, spec.m, spec.seed);
    }
    throw std::invalid_argument("unknown network family");
}

std::string describe(const GenSpec& spec) {
    std::ostringstream os;
    os << "family=" << family_name(spec.family) << " nodes=" << spec.n;
    switch (spec.family) {
        case Family::complete: break;
        case Family::regular_ring:
            os << " mean_degree=" << spec.k;
            break;
        case Family::small_world:
            os << " mean_degree=" << spec.k << " rewire_p=" << spec.p << " seed=" << spec.seed;
            break;
        case Family::random_er:
            os << " mean_degree=" << spec.k << " seed=" << spec.seed;
            break;
        case Family::scale_free:
            os << " m0=" << spec.m0 << " m=" << spec.m << " seed=" << spec.seed
               << " (ring-seeded: m0 extra edges beyond m per arrival)";
            break;
    }
    return os.str();
}

}  // namespace netlang
