#include "forumlens/ego_roles.hpp"

#include <algorithm>
#include <vector>

#include "forumlens/graph_metrics.hpp"

namespace forumlens {

EgoNetwork ego_network(const SocialGraph& g, const std::string& v) {
    if (!g.has_node(v)) throw UnknownNode("ego_network: unknown node " + v);
    EgoNetwork ego;
    ego.ego = v;
    for (const auto& [key, w] : g.edges()) {
        (void)w;
        if (key.first == v) ego.alters.insert(key.second);
        if (key.second == v) ego.alters.insert(key.first);
    }

    std::int64_t alter_alter = 0, inward = 0, outward = 0;
    for (const auto& [key, w] : g.edges()) {
        const bool src_in = key.first == v || ego.alters.count(key.first);
        const bool dst_in = key.second == v || ego.alters.count(key.second);
        if (!src_in || !dst_in) continue;
        ego.edges[key] = w;
        if (key.second == v) ++inward;
        else if (key.first == v) ++outward;
        else ++alter_alter;
    }

    const auto n_alters = static_cast<std::int64_t>(ego.alters.size());
    if (n_alters >= 2) {
        ego.alter_alter_density =
            static_cast<double>(alter_alter) / static_cast<double>(n_alters * (n_alters - 1));
    }
    if (inward + outward > 0) {
        ego.inward_share = static_cast<double>(inward) / static_cast<double>(inward + outward);
    }
    return ego;
}

const char* to_string(Role r) {
    switch (r) {
        case Role::AnswerPerson: return "answer_person";
        case Role::DiscussionPerson: return "discussion_person";
        case Role::Mixed: return "mixed";
    }
    return "mixed";
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

RoleLabel classify_role(const SocialGraph& g, const ForumDataset& d, const std::string& v,
                        const RoleThresholds& t) {
    const EgoNetwork ego = ego_network(g, v);  // throws UnknownNode

    // Median messages per participated thread. A single marathon thread
    // should not drag the ego into discussion-person territory, hence
    // median rather than mean.
    std::map<std::string, double> per_thread;
    for (const auto& m : d.messages()) {
        if (m.author_id && *m.author_id == v) per_thread[m.thread_id] += 1.0;
    }
    if (per_thread.empty()) throw NoMessages("classify_role: " + v + " authored nothing");
    std::vector<double> counts;
    counts.reserve(per_thread.size());
    for (const auto& [_, c] : per_thread) counts.push_back(c);

    RoleLabel label;
    label.mpt = median_of(std::move(counts));
    label.dens = ego.alter_alter_density;
    label.inward = ego.inward_share;

    const auto degrees = degree_centrality(g);
    std::vector<double> all_degrees;
    all_degrees.reserve(degrees.size());
    for (const auto& [_, dc] : degrees) all_degrees.push_back(dc.degree);
    const double median_degree = median_of(std::move(all_degrees));
    if (!ego.alters.empty() && median_degree > 0.0) {
        double mean_alter_degree = 0.0;
        for (const auto& a : ego.alters) mean_alter_degree += degrees.at(a).degree;
        mean_alter_degree /= static_cast<double>(ego.alters.size());
        label.mad = mean_alter_degree / median_degree;
    }

    const bool answer = label.mpt <= t.answer_max_mpt && label.dens <= t.answer_max_density &&
                        label.inward >= t.answer_min_inward;
    const bool discussion =
        label.dens >= t.discussion_min_density && label.mad >= t.discussion_min_mad;
    if (discussion) label.role = Role::DiscussionPerson;  // denser structure dominates
    else if (answer) label.role = Role::AnswerPerson;
    else label.role = Role::Mixed;
    return label;
}

std::map<std::string, std::pair<RoleLabel, RoleLabel>> role_transition(
    const SocialGraph& g_early, const ForumDataset& d_early, const SocialGraph& g_late,
    const ForumDataset& d_late, const std::set<std::string>& nodes,
    const RoleThresholds& t) {
    std::map<std::string, std::pair<RoleLabel, RoleLabel>> out;
    for (const auto& v : nodes) {
        out[v] = {classify_role(g_early, d_early, v, t), classify_role(g_late, d_late, v, t)};
    }
    return out;
}

std::map<std::pair<Role, Role>, int> transition_counts(
    const std::map<std::string, std::pair<RoleLabel, RoleLabel>>& transitions) {
    std::map<std::pair<Role, Role>, int> counts;
    for (const auto& [_, pair] : transitions) {
        counts[{pair.first.role, pair.second.role}] += 1;
    }
    return counts;
}

}  // namespace forumlens
