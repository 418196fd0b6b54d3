#pragma once

#include <cstdint>
#include <string>

#include "netlang/graph.hpp"

namespace netlang {

enum class Family { complete, regular_ring, small_world, random_er, scale_free };

const char* family_name(Family f);
bool parse_family(const std::string& name, Family& out);

// Parameters for the five network families. k is the target mean degree for
// the ring-based and random families; m0/m drive preferential attachment.
struct GenSpec {
    Family family = Family::regular_ring;
    NodeId n = 0;
    NodeId k = 0;
    double p = 0.0;
    NodeId m0 = 0;
    NodeId m = 0;
    std::uint64_t seed = 0;
    int max_retries = 100;
};

Graph gen_complete(NodeId n);

// Node i linked to i+-1 .. i+-k/2 (mod n); k even, 2 <= k < n.
Graph gen_regular_ring(NodeId n, NodeId k);

// Watts-Strogatz rewiring on top of the regular ring. Each ring edge is
// visited once, ordered by (source, offset); with probability p its clockwise
// endpoint is replaced by a uniform node that is neither the source nor
// already adjacent to it. Edge count stays n*k/2. Disconnected results are
// regenerated with a derived seed up to max_retries times.
Graph gen_small_world(NodeId n, NodeId k, double p, std::uint64_t seed,
                      int max_retries = 100);

// Exactly n*k/2 distinct edges drawn uniformly without replacement;
// resampled with a derived seed until connected.
Graph gen_random_er(NodeId n, NodeId k, std::uint64_t seed, int max_retries = 100);

// Preferential attachment: m0 seed nodes joined in a ring, then n-m0
// arrivals each linking to m distinct existing nodes chosen sequentially
// with probability proportional to current degree. Connected by construction.
Graph gen_scale_free(NodeId n, NodeId m0, NodeId m, std::uint64_t seed);

Graph generate(const GenSpec& spec);

// One-line parameter summary used in edge-list file headers.
std::string describe(const GenSpec& spec);

}  // namespace netlang
