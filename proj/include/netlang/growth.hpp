#pragma once

#include <cstdint>
#include <string>

#include "netlang/graph.hpp"

namespace netlang {

enum class GrowthModel { motter, dm, st };

const char* growth_model_name(GrowthModel m);
bool parse_growth_model(const std::string& name, GrowthModel& out);

struct GrowthSpec {
    GrowthModel model = GrowthModel::motter;
    NodeId n_final = 0;
    NodeId m = 1;                   // links per arriving node
    double c = 0.0;                 // dm: old-old links added at step t = floor(c*t)
    double utility_exponent = 1.0;  // st: Zipf exponent for node utilities (0 = constant)
    std::uint64_t seed = 0;
};

// Neighborhood attachment: each arrival picks its first target uniformly,
// then the remaining m-1 targets uniformly among that target's neighbors
// (uniform over all existing nodes once the neighborhood is exhausted).
Graph grow_motter(const GrowthSpec& spec);

// Preferential arrival plus floor(c*t) extra degree-proportional edges
// between old nodes at step t.
Graph grow_dm(const GrowthSpec& spec);

// Arrival picks an anchor x with probability proportional to degree(x) times
// a Zipf-distributed utility drawn at x's birth, then links to m uniform
// picks from {x} union neighbors(x). utilities_out, when given, receives the
// per-node utilities (indexed by birth order).
Graph grow_st(const GrowthSpec& spec, std::vector<double>* utilities_out = nullptr);

Graph grow(const GrowthSpec& spec);

// One-line summary of the spec plus the interpretation knobs, for file headers.
std::string describe(const GrowthSpec& spec);

}  // namespace netlang
