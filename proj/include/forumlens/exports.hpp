#pragma once

#include <map>
#include <string>
#include <vector>

#include "forumlens/cohort_analytics.hpp"
#include "forumlens/ego_roles.hpp"
#include "forumlens/graph_metrics.hpp"
#include "forumlens/social_graph.hpp"
#include "forumlens/thread_analytics.hpp"

namespace forumlens {

// All exporters are deterministic: nodes and rows are emitted in id
// order with stable number formatting, so identical inputs give
// byte-identical documents.

/// GraphML with node attributes degree, betweenness, coreness, hub,
/// authority and integer edge weights. Throws MetricMismatch when m
/// misses a node of g.
std::string export_graphml(const SocialGraph& g, const MetricTable& m);

/// DOT sociogram: node width follows the out-degree rank, fill color a
/// 9-step grayscale betweenness quantile (greys9, darker = more
/// central). Edge weight is carried as an attribute.
std::string export_dot(const SocialGraph& g, const MetricTable& m);

std::string export_metrics_csv(const SocialGraph& g, const MetricTable& m);
std::string export_bowtie_json(const BowTie& bt);
std::string export_profile_csv(const std::vector<ProfileEntry>& profile);
std::string export_features_csv(const std::vector<ThreadFeatures>& features);
std::string export_clustering_csv(const Clustering& c,
                                  const std::map<int, std::string>& categories);
std::string export_cohorts_csv(const std::map<std::string, int>& cohorts);
std::string export_unit_week_csv(
    const std::map<std::tuple<int, int, int>, std::int64_t>& matrix);
std::string export_persistence_csv(
    const std::map<std::pair<int, int>, std::int64_t>& persistence);
std::string export_activity_csv(
    const std::map<std::pair<std::string, int>, std::int64_t>& activity);
std::string export_early_posts_csv(const std::vector<EarlyPost>& posts);
std::string export_roles_csv(const std::map<std::string, RoleLabel>& roles);
std::string export_tracking_json(const CentralityTracking& t);
std::string export_transitions_csv(
    const std::map<std::string, std::pair<RoleLabel, RoleLabel>>& transitions);

}  // namespace forumlens
