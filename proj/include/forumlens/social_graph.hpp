#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forumlens/errors.hpp"

namespace forumlens {

/// Directed weighted simple graph over student identifiers. No self
/// edges, no anonymous nodes (callers never see an absent author here),
/// all weights >= 1. Node and edge iteration order is id order, which
/// keeps every downstream report deterministic.
class SocialGraph {
public:
    using EdgeMap = std::map<std::pair<std::string, std::string>, std::int64_t>;

    void add_node(const std::string& id);

    /// Accumulates weight onto (src, dst). Self edges and non-positive
    /// weights are rejected. Endpoints are added as nodes.
    void add_edge(const std::string& src, const std::string& dst, std::int64_t weight);

    bool has_node(const std::string& id) const { return nodes_.count(id) > 0; }
    bool has_edge(const std::string& src, const std::string& dst) const;
    std::int64_t edge_weight(const std::string& src, const std::string& dst) const;

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::int64_t total_weight() const;

    const std::set<std::string>& nodes() const { return nodes_; }
    const EdgeMap& edges() const { return edges_; }

    bool operator==(const SocialGraph&) const = default;

private:
    std::set<std::string> nodes_;
    EdgeMap edges_;
};

/// Node-set union; weights of edges present in both graphs are summed.
SocialGraph union_sum(const SocialGraph& a, const SocialGraph& b);

/// Indexed adjacency over an immutable SocialGraph. Node index i is the
/// i-th id in ascending order; adjacency lists are sorted by neighbor
/// index. Built once per analysis pass.
struct GraphView {
    std::vector<std::string> ids;
    std::map<std::string, int> index;
    std::vector<std::vector<std::pair<int, std::int64_t>>> out;  // (target, weight)
    std::vector<std::vector<std::pair<int, std::int64_t>>> in;   // (source, weight)
    std::vector<std::vector<int>> undirected;  // distinct neighbors either direction

    explicit GraphView(const SocialGraph& g);
    int n() const { return static_cast<int>(ids.size()); }
};

}  // namespace forumlens
