#include "forumlens/graph_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>

namespace forumlens {

std::map<std::string, DegreeCentrality> degree_centrality(const SocialGraph& g) {
    GraphView v(g);
    std::map<std::string, DegreeCentrality> out;
    for (int i = 0; i < v.n(); ++i) {
        DegreeCentrality c;
        c.in_degree = static_cast<int>(v.in[i].size());
        c.out_degree = static_cast<int>(v.out[i].size());
        c.degree = c.in_degree + c.out_degree;
        out[v.ids[i]] = c;
    }
    return out;
}

std::map<std::string, double> betweenness_centrality(const SocialGraph& g) {
    GraphView v(g);
    const int n = v.n();
    std::vector<double> bc(n, 0.0);

    // Brandes: one BFS per source with dependency back-accumulation.
    std::vector<int> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    order.reserve(n);

    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (const auto& [w, _] : v.out[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[u] + 1) {
                    sigma[w] += sigma[u];
                    preds[w].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int p : preds[w]) {
                delta[p] += sigma[p] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) bc[w] += delta[w];
        }
    }

    std::map<std::string, double> out;
    for (int i = 0; i < n; ++i) out[v.ids[i]] = bc[i];
    return out;
}

namespace {

// Iterative Tarjan; recursion would overflow on long chains.
std::vector<int> scc_assignments(const GraphView& v, int& scc_count) {
    const int n = v.n();
    std::vector<int> comp(n, -1), low(n), num(n, -1), edge_pos(n, 0);
    std::vector<int> stack, call_stack;
    std::vector<bool> on_stack(n, false);
    int next_num = 0;
    scc_count = 0;

    for (int root = 0; root < n; ++root) {
        if (num[root] >= 0) continue;
        call_stack.push_back(root);
        while (!call_stack.empty()) {
            int u = call_stack.back();
            if (num[u] < 0) {
                num[u] = low[u] = next_num++;
                stack.push_back(u);
                on_stack[u] = true;
            }
            bool descended = false;
            while (edge_pos[u] < static_cast<int>(v.out[u].size())) {
                int w = v.out[u][edge_pos[u]].first;
                ++edge_pos[u];
                if (num[w] < 0) {
                    call_stack.push_back(w);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[u] = std::min(low[u], num[w]);
            }
            if (descended) continue;
            if (low[u] == num[u]) {
                while (true) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = scc_count;
                    if (w == u) break;
                }
                ++scc_count;
            }
            call_stack.pop_back();
            if (!call_stack.empty()) {
                int parent = call_stack.back();
                low[parent] = std::min(low[parent], low[u]);
            }
        }
    }
    return comp;
}

std::vector<std::vector<std::string>> group_components(const GraphView& v,
                                                       const std::vector<int>& comp,
                                                       int count) {
    std::vector<std::vector<std::string>> sets(count);
    for (int i = 0; i < v.n(); ++i) sets[comp[i]].push_back(v.ids[i]);
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sets;
}

// BFS over a choice of adjacency; marks everything reachable from seeds.
std::vector<bool> reach(const GraphView& v,
                        const std::vector<std::vector<std::pair<int, std::int64_t>>>& adj,
                        const std::vector<int>& seeds) {
    std::vector<bool> seen(v.n(), false);
    std::deque<int> queue;
    for (int s : seeds) {
        if (!seen[s]) {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& [w, _] : adj[u]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

std::vector<std::vector<std::string>> strongly_connected_components(const SocialGraph& g) {
    GraphView v(g);
    int count = 0;
    auto comp = scc_assignments(v, count);
    return group_components(v, comp, count);
}

std::vector<std::vector<std::string>> weakly_connected_components(const SocialGraph& g) {
    GraphView v(g);
    const int n = v.n();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = count;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : v.undirected[u]) {
                if (comp[w] < 0) {
                    comp[w] = count;
                    queue.push_back(w);
                }
            }
        }
        ++count;
    }
    return group_components(v, comp, count);
}

BowTie bowtie_decompose(const SocialGraph& g) {
    if (g.node_count() == 0) throw EmptyGraph("bow-tie decomposition needs nodes");
    GraphView v(g);
    const int n = v.n();

    int scc_count = 0;
    auto comp = scc_assignments(v, scc_count);
    std::vector<int> sizes(scc_count, 0);
    std::vector<int> min_node(scc_count, n);
    for (int i = 0; i < n; ++i) {
        ++sizes[comp[i]];
        min_node[comp[i]] = std::min(min_node[comp[i]], i);  // ids sorted, index order = id order
    }
    int core = 0;
    for (int c = 1; c < scc_count; ++c) {
        if (sizes[c] > sizes[core] ||
            (sizes[c] == sizes[core] && min_node[c] < min_node[core])) {
            core = c;
        }
    }

    std::vector<int> core_nodes;
    for (int i = 0; i < n; ++i) {
        if (comp[i] == core) core_nodes.push_back(i);
    }
    const auto reached_from_core = reach(v, v.out, core_nodes);
    const auto reaches_core = reach(v, v.in, core_nodes);

    enum Klass { kUnset, kScc, kIn, kOut };
    std::vector<Klass> klass(n, kUnset);
    std::vector<int> in_nodes, out_nodes;
    for (int i = 0; i < n; ++i) {
        if (comp[i] == core) {
            klass[i] = kScc;
        } else if (reaches_core[i]) {
            klass[i] = kIn;
            in_nodes.push_back(i);
        } else if (reached_from_core[i]) {
            klass[i] = kOut;
            out_nodes.push_back(i);
        }
    }

    // For the remaining nodes, any witness path from In (or to Out)
    // avoids Scc automatically: passing through the core would have
    // classified the node as Out (or In) above.
    const auto from_in = reach(v, v.out, in_nodes);
    const auto to_out = reach(v, v.in, out_nodes);

    BowTie bt;
    for (int i = 0; i < n; ++i) {
        const std::string& id = v.ids[i];
        switch (klass[i]) {
            case kScc: bt.scc.insert(id); continue;
            case kIn: bt.in_set.insert(id); continue;
            case kOut: bt.out_set.insert(id); continue;
            case kUnset: break;
        }
        if (from_in[i] && to_out[i]) bt.tubes.insert(id);
        else if (from_in[i] || to_out[i]) bt.tendrils.insert(id);
        else bt.others.insert(id);
    }
    return bt;
}

std::map<std::string, int> coreness(const SocialGraph& g) {
    GraphView v(g);
    const int n = v.n();
    std::vector<int> deg(n), core(n, 0);
    int max_deg = 0;
    for (int i = 0; i < n; ++i) {
        deg[i] = static_cast<int>(v.undirected[i].size());
        max_deg = std::max(max_deg, deg[i]);
    }

    // Peel by degree buckets: process vertices in non-decreasing degree
    // order, lowering neighbors as we go.
    std::vector<std::vector<int>> bins(max_deg + 1);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) {
        pos[i] = static_cast<int>(bins[deg[i]].size());
        bins[deg[i]].push_back(i);
    }
    std::vector<bool> done(n, false);
    for (int k = 0; k <= max_deg; ++k) {
        auto& bin = bins[k];
        while (!bin.empty()) {
            int u = bin.back();
            bin.pop_back();
            if (done[u]) continue;
            done[u] = true;
            core[u] = k;
            for (int w : v.undirected[u]) {
                if (done[w] || deg[w] <= k) continue;
                auto& old_bin = bins[deg[w]];
                int last = old_bin.back();
                old_bin[pos[w]] = last;
                pos[last] = pos[w];
                old_bin.pop_back();
                --deg[w];
                pos[w] = static_cast<int>(bins[deg[w]].size());
                bins[deg[w]].push_back(w);
            }
        }
    }

    std::map<std::string, int> out;
    for (int i = 0; i < n; ++i) out[v.ids[i]] = core[i];
    return out;
}

HitsResult hits_scores(const SocialGraph& g, const HitsOptions& opts) {
    if (opts.tol <= 0) throw InvalidArgument("hits: tol must be positive");
    if (opts.max_iter < 1) throw InvalidArgument("hits: max_iter must be >= 1");
    GraphView v(g);
    const int n = v.n();

    HitsResult res;
    if (g.edge_count() == 0) {
        for (const auto& id : v.ids) {
            res.hub[id] = 0.0;
            res.authority[id] = 0.0;
        }
        return res;
    }

    auto normalize = [](std::vector<double>& vec) {
        double norm = 0.0;
        for (double x : vec) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (double& x : vec) x /= norm;
        }
    };

    std::vector<double> hub(n, 1.0), auth(n, 1.0);
    normalize(hub);
    normalize(auth);

    std::vector<double> new_hub(n), new_auth(n);
    res.converged = false;
    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double a = 0.0;
            for (const auto& [src, w] : v.in[i]) a += static_cast<double>(w) * hub[src];
            new_auth[i] = a;
        }
        normalize(new_auth);
        for (int i = 0; i < n; ++i) {
            double h = 0.0;
            for (const auto& [dst, w] : v.out[i]) h += static_cast<double>(w) * new_auth[dst];
            new_hub[i] = h;
        }
        normalize(new_hub);

        double change = 0.0;
        for (int i = 0; i < n; ++i) {
            change = std::max(change, std::abs(new_auth[i] - auth[i]));
            change = std::max(change, std::abs(new_hub[i] - hub[i]));
        }
        hub.swap(new_hub);
        auth.swap(new_auth);
        res.iterations = iter;
        if (change < opts.tol) {
            res.converged = true;
            break;
        }
    }

    for (int i = 0; i < n; ++i) {
        res.hub[v.ids[i]] = hub[i];
        res.authority[v.ids[i]] = auth[i];
    }
    return res;
}

MetricTable compute_metrics(const SocialGraph& g, const HitsOptions& hits_opts) {
    MetricTable table;
    for (const auto& [id, d] : degree_centrality(g)) {
        NodeMetrics& m = table[id];
        m.in_degree = d.in_degree;
        m.out_degree = d.out_degree;
        m.degree = d.degree;
    }
    for (const auto& [id, b] : betweenness_centrality(g)) table[id].betweenness = b;
    for (const auto& [id, c] : coreness(g)) table[id].coreness = c;
    const HitsResult hits = hits_scores(g, hits_opts);
    for (const auto& [id, h] : hits.hub) table[id].hub = h;
    for (const auto& [id, a] : hits.authority) table[id].authority = a;
    return table;
}

std::vector<ProfileEntry> coreness_centrality_profile(const MetricTable& m) {
    std::vector<ProfileEntry> out;
    out.reserve(m.size());
    for (const auto& [id, metrics] : m) {
        out.push_back({id, metrics.betweenness, metrics.coreness});
    }
    std::sort(out.begin(), out.end(), [](const ProfileEntry& a, const ProfileEntry& b) {
        if (a.betweenness != b.betweenness) return a.betweenness > b.betweenness;
        return a.node < b.node;
    });
    return out;
}

}  // namespace forumlens
