#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "forumlens/forum_model.hpp"
#include "forumlens/graph_metrics.hpp"

namespace forumlens {

/// Cohort of an author: the course week of their earliest message.
/// Anonymous messages are ignored.
std::map<std::string, int> assign_cohorts(const ForumDataset& d);

/// (cohort, week, unit) -> message count, restricted to unit subforums
/// and non-anonymous authors. Unit numbers come from the schedule's
/// subforum mapping.
std::map<std::tuple<int, int, int>, std::int64_t> cohort_unit_matrix(const ForumDataset& d);

/// (cohort, unit) -> message count; the week marginal of the matrix above.
std::map<std::pair<int, int>, std::int64_t> cohort_persistence(const ForumDataset& d);

struct EarlyPost {
    std::string message_id;
    int unit = 0;
    std::int64_t lead_seconds = 0;

    bool operator==(const EarlyPost&) const = default;
};

/// Messages in a unit's subforum posted strictly before that unit's
/// release, sorted by lead time descending (ties by message id).
std::vector<EarlyPost> early_posts(const ForumDataset& d);

/// (forum, week) -> message count. Anonymous messages count here: this
/// measures forum volume, not actors.
std::map<std::pair<std::string, int>, std::int64_t> forum_activity_matrix(const ForumDataset& d);

struct CohortReport {
    std::map<std::string, int> cohort_of;
    std::map<std::tuple<int, int, int>, std::int64_t> unit_week_matrix;
    std::map<std::pair<int, int>, std::int64_t> persistence;
};

CohortReport build_cohort_report(const ForumDataset& d);

struct CentralityTracking {
    std::set<std::string> remained;
    std::set<std::string> dropped;
    std::set<std::string> entered;
    int n = 0;
};

/// Nodes holding the n highest degree values in a table, expanded to
/// include everything tied with the n-th value.
std::set<std::string> top_degree_set(const MetricTable& m, int n);

/// Movement between the top-n degree lists of two snapshots.
CentralityTracking central_tracking(const MetricTable& early, const MetricTable& late, int n);

}  // namespace forumlens
