#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netlang/graph.hpp"

namespace netlang {

// Degree -> count. Counts are doubles so synthetic distributions can be fed
// to the fitting routines exactly.
using DegreeHistogram = std::map<int, double>;

// Least-squares power-law fit on log-binned frequencies. exponent is the
// positive gamma of P(k) ~ k^-gamma. For two-regime fits, exponent mirrors
// exponent_high (the tail) and breakpoint is the degree where the segments
// meet.
struct PowerLawFit {
    double exponent = 0.0;
    int k_min = 1;
    double r_squared = 0.0;
    bool two_regime = false;
    int breakpoint = 0;
    double exponent_low = 0.0;
    double exponent_high = 0.0;
    double mean_sq_residual = 0.0;  // per-bin, log space
};

struct PathLengthOptions {
    std::size_t exact_threshold = 20000;  // all-pairs BFS up to this many nodes
    std::size_t sample_sources = 1000;    // sources sampled beyond it
    std::uint64_t seed = 0;
    bool strict = false;  // error on disconnected input instead of using the LCC
};

struct PathLengthResult {
    double length = 0.0;
    bool estimated = false;     // true when source-sampled
    double lcc_fraction = 1.0;  // share of nodes the measurement covers
};

// C_u = 2*T_u / (k_u (k_u - 1)); zero for degree < 2.
double clustering_node(const Graph& g, NodeId u);
double clustering_avg(const Graph& g);

// Mean shortest-path distance over node pairs (BFS per source). Disconnected
// graphs are measured over the largest component unless opts.strict is set.
PathLengthResult char_path_length(const Graph& g, const PathLengthOptions& opts = {});

// Random-graph reference values: c_random = <k>/n, l_random = ln n / ln <k>.
std::pair<double, double> random_baselines(double n, double mean_degree);

// Shortest-path betweenness per node, as unordered-pair counts.
std::vector<double> betweenness(const Graph& g, bool strict = false);

// Degree-degree Pearson correlation over edge endpoints (both orientations).
// Empty when undefined (fewer than 2 edges or zero degree variance).
std::optional<double> assortativity(const Graph& g);

DegreeHistogram degree_histogram(const Graph& g);

// Single power law for k >= k_min. Throws when fewer than 3 nonempty log
// bins are available.
PowerLawFit fit_power_law(const DegreeHistogram& hist, int k_min);

// Scans all candidate breakpoints and keeps the one minimizing the combined
// residual of the low and high segment fits.
PowerLawFit fit_two_regime(const DegreeHistogram& hist);

struct AnalyzeOptions {
    PathLengthOptions paths;
    std::optional<int> fit_k_min;  // default: round(mean degree)
};

struct MetricsReport {
    std::size_t n = 0;
    std::size_t m_edges = 0;
    double mean_degree = 0.0;
    double density = 0.0;  // NaN when undefined (n < 2)
    double clustering_avg = 0.0;
    double char_path_length = 0.0;
    bool length_estimated = false;
    double c_random = 0.0;  // NaN when undefined (<k> <= 1)
    double l_random = 0.0;
    std::optional<double> assortativity;
    DegreeHistogram degree_histogram;
    std::size_t component_count = 1;
    double lcc_fraction = 1.0;
    std::optional<PowerLawFit> fit;  // regime chosen by residual comparison
};

MetricsReport analyze(const Graph& g, const AnalyzeOptions& opts = {});

// Fixed-order CSV row: n, m, mean_degree, density, C, L, c_random, l_random,
// assortativity, gamma, regime, breakpoint.
std::string report_csv_header();
std::string report_csv_row(const MetricsReport& r);
std::string report_text(const MetricsReport& r);

}  // namespace netlang
