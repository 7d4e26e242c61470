#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>

#include "forumlens/forum_model.hpp"
#include "forumlens/social_graph.hpp"

namespace forumlens {

/// Radius-1 ego network: the ego, its in/out-neighbors, and every graph
/// edge among them.
struct EgoNetwork {
    std::string ego;
    std::set<std::string> alters;
    SocialGraph::EdgeMap edges;       // induced on {ego} + alters
    double alter_alter_density = 0.0; // directed alter-alter edges / |alters|(|alters|-1)
    double inward_share = 0.0;        // ego-incident edges pointing at the ego
};

/// Throws UnknownNode.
EgoNetwork ego_network(const SocialGraph& g, const std::string& v);

enum class Role { AnswerPerson, DiscussionPerson, Mixed };

const char* to_string(Role r);

/// The operationalized cut-offs for the two Welser-style roles. The
/// qualitative descriptions ("one or two messages per thread", "sparse,
/// star-shaped, inward connections", "dense ties to highly connected
/// alters") carry no numbers, so these stay configurable.
struct RoleThresholds {
    double answer_max_mpt = 2.0;        // median messages per thread
    double answer_max_density = 0.10;   // alter-alter density
    double answer_min_inward = 0.60;    // inward share
    double discussion_min_density = 0.30;
    double discussion_min_mad = 1.0;    // mean alter degree / graph median degree
};

struct RoleLabel {
    Role role = Role::Mixed;
    double mpt = 0.0;     // median messages by the ego per participated thread
    double dens = 0.0;    // alter-alter density
    double inward = 0.0;  // inward share
    double mad = 0.0;     // mean alter degree relative to the graph median degree
};

/// AnswerPerson when mpt <= answer_max_mpt, dens <= answer_max_density
/// and inward >= answer_min_inward; DiscussionPerson when dens >=
/// discussion_min_density and mad >= discussion_min_mad (winning any
/// overlap); Mixed otherwise. Throws UnknownNode / NoMessages.
RoleLabel classify_role(const SocialGraph& g, const ForumDataset& d, const std::string& v,
                        const RoleThresholds& t = {});

/// Early and late classification for each requested node; nodes must be
/// present in both graphs.
std::map<std::string, std::pair<RoleLabel, RoleLabel>> role_transition(
    const SocialGraph& g_early, const ForumDataset& d_early, const SocialGraph& g_late,
    const ForumDataset& d_late, const std::set<std::string>& nodes,
    const RoleThresholds& t = {});

/// (early role, late role) -> node count.
std::map<std::pair<Role, Role>, int> transition_counts(
    const std::map<std::string, std::pair<RoleLabel, RoleLabel>>& transitions);

}  // namespace forumlens
