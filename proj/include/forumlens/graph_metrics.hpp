#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "forumlens/social_graph.hpp"

namespace forumlens {

struct NodeMetrics {
    int degree = 0;
    int in_degree = 0;
    int out_degree = 0;
    double betweenness = 0.0;
    int coreness = 0;
    double hub = 0.0;
    double authority = 0.0;
};

/// Per-node metrics for one snapshot, keyed by node id.
using MetricTable = std::map<std::string, NodeMetrics>;

struct DegreeCentrality {
    int in_degree = 0;
    int out_degree = 0;
    int degree = 0;  // in + out
};

/// In/out-degree count distinct neighbors; weights are ignored.
std::map<std::string, DegreeCentrality> degree_centrality(const SocialGraph& g);

/// Directed, unweighted shortest-path betweenness (Brandes accumulation).
/// Endpoints are excluded; unreachable pairs contribute nothing.
std::map<std::string, double> betweenness_centrality(const SocialGraph& g);

/// Each component is a sorted node list; components are sorted by their
/// smallest member.
std::vector<std::vector<std::string>> strongly_connected_components(const SocialGraph& g);
std::vector<std::vector<std::string>> weakly_connected_components(const SocialGraph& g);

/// Bow-tie decomposition relative to the largest strongly connected
/// component (size ties broken toward the set holding the smallest id).
struct BowTie {
    std::set<std::string> scc;
    std::set<std::string> in_set;
    std::set<std::string> out_set;
    std::set<std::string> tubes;
    std::set<std::string> tendrils;
    std::set<std::string> others;
};

/// Throws EmptyGraph when g has no nodes.
BowTie bowtie_decompose(const SocialGraph& g);

/// k-core numbers on the undirected, unweighted projection.
std::map<std::string, int> coreness(const SocialGraph& g);

struct HitsOptions {
    double tol = 1e-8;
    int max_iter = 1000;
};

/// Hub/authority scores by power iteration on the weighted adjacency,
/// L2-normalized each step. An edgeless graph yields all zeros. When the
/// iteration cap is hit, `converged` is false and the scores carry the
/// last iterate.
struct HitsResult {
    std::map<std::string, double> hub;
    std::map<std::string, double> authority;
    int iterations = 0;
    bool converged = true;
};

HitsResult hits_scores(const SocialGraph& g, const HitsOptions& opts = {});

/// Runs the full measurement set over one graph.
MetricTable compute_metrics(const SocialGraph& g, const HitsOptions& hits_opts = {});

struct ProfileEntry {
    std::string node;
    double betweenness = 0.0;
    int coreness = 0;
};

/// Rows sorted by betweenness descending, ties by node id ascending;
/// the shape used to plot coreness against falling centrality.
std::vector<ProfileEntry> coreness_centrality_profile(const MetricTable& m);

}  // namespace forumlens
