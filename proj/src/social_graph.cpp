#include "forumlens/social_graph.hpp"

#include <algorithm>

namespace forumlens {

void SocialGraph::add_node(const std::string& id) {
    if (id.empty()) throw InvalidArgument("graph node id must be non-empty");
    nodes_.insert(id);
}

void SocialGraph::add_edge(const std::string& src, const std::string& dst,
                           std::int64_t weight) {
    if (src == dst) throw InvalidArgument("self edge rejected: " + src);
    if (weight <= 0) throw InvalidArgument("edge weight must be positive");
    add_node(src);
    add_node(dst);
    edges_[{src, dst}] += weight;
}

bool SocialGraph::has_edge(const std::string& src, const std::string& dst) const {
    return edges_.count({src, dst}) > 0;
}

std::int64_t SocialGraph::edge_weight(const std::string& src, const std::string& dst) const {
    auto it = edges_.find({src, dst});
    return it == edges_.end() ? 0 : it->second;
}

std::int64_t SocialGraph::total_weight() const {
    std::int64_t sum = 0;
    for (const auto& [_, w] : edges_) sum += w;
    return sum;
}

SocialGraph union_sum(const SocialGraph& a, const SocialGraph& b) {
    SocialGraph out;
    for (const auto& id : a.nodes()) out.add_node(id);
    for (const auto& id : b.nodes()) out.add_node(id);
    for (const auto& [key, w] : a.edges()) out.add_edge(key.first, key.second, w);
    for (const auto& [key, w] : b.edges()) out.add_edge(key.first, key.second, w);
    return out;
}

GraphView::GraphView(const SocialGraph& g) {
    ids.assign(g.nodes().begin(), g.nodes().end());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;
    out.resize(ids.size());
    in.resize(ids.size());
    undirected.resize(ids.size());
    for (const auto& [key, w] : g.edges()) {
        int s = index.at(key.first);
        int t = index.at(key.second);
        out[s].push_back({t, w});
        in[t].push_back({s, w});
        undirected[s].push_back(t);
        undirected[t].push_back(s);
    }
    for (auto& adj : undirected) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    // Edge map iterates in key order, so out lists are already sorted;
    // in lists are not.
    for (auto& adj : in) std::sort(adj.begin(), adj.end());
}

}  // namespace forumlens
