#include "forumlens/cohort_analytics.hpp"

#include <algorithm>

namespace forumlens {

std::map<std::string, int> assign_cohorts(const ForumDataset& d) {
    std::map<std::string, int> cohorts;
    // messages() is sorted by (timestamp, id), so the first sighting of
    // an author is their earliest message.
    for (const auto& m : d.messages()) {
        if (!m.author_id || cohorts.count(*m.author_id)) continue;
        cohorts[*m.author_id] = course_week(m.timestamp, d.schedule());
    }
    return cohorts;
}

std::map<std::tuple<int, int, int>, std::int64_t> cohort_unit_matrix(const ForumDataset& d) {
    const auto cohorts = assign_cohorts(d);
    std::map<std::tuple<int, int, int>, std::int64_t> matrix;
    for (const auto& m : d.messages()) {
        if (!m.author_id || !m.subforum_id) continue;
        const auto unit = d.schedule().unit_for_subforum(*m.subforum_id);
        if (!unit) continue;
        const int cohort = cohorts.at(*m.author_id);
        const int week = course_week(m.timestamp, d.schedule());
        matrix[{cohort, week, *unit}] += 1;
    }
    return matrix;
}

std::map<std::pair<int, int>, std::int64_t> cohort_persistence(const ForumDataset& d) {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (const auto& [key, count] : cohort_unit_matrix(d)) {
        const auto& [cohort, week, unit] = key;
        (void)week;
        out[{cohort, unit}] += count;
    }
    return out;
}

std::vector<EarlyPost> early_posts(const ForumDataset& d) {
    std::vector<EarlyPost> out;
    for (const auto& m : d.messages()) {
        if (!m.subforum_id) continue;
        const auto unit = d.schedule().unit_for_subforum(*m.subforum_id);
        if (!unit) continue;
        for (const auto& u : d.schedule().units) {
            if (u.unit != *unit) continue;
            if (m.timestamp < u.release) {  // posting at the release instant is on time
                out.push_back({m.message_id, *unit, u.release - m.timestamp});
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const EarlyPost& a, const EarlyPost& b) {
        if (a.lead_seconds != b.lead_seconds) return a.lead_seconds > b.lead_seconds;
        return a.message_id < b.message_id;
    });
    return out;
}

std::map<std::pair<std::string, int>, std::int64_t> forum_activity_matrix(
    const ForumDataset& d) {
    std::map<std::pair<std::string, int>, std::int64_t> out;
    for (const auto& m : d.messages()) {
        out[{m.forum_id, course_week(m.timestamp, d.schedule())}] += 1;
    }
    return out;
}

CohortReport build_cohort_report(const ForumDataset& d) {
    CohortReport r;
    r.cohort_of = assign_cohorts(d);
    r.unit_week_matrix = cohort_unit_matrix(d);
    r.persistence = cohort_persistence(d);
    return r;
}

std::set<std::string> top_degree_set(const MetricTable& m, int n) {
    if (n < 1) throw InvalidArgument("top_degree_set: n must be >= 1");
    std::vector<std::pair<int, std::string>> ranked;
    ranked.reserve(m.size());
    for (const auto& [id, metrics] : m) ranked.push_back({metrics.degree, id});
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::set<std::string> top;
    if (ranked.empty()) return top;
    const std::size_t cut = std::min<std::size_t>(n, ranked.size());
    const int nth_degree = ranked[cut - 1].first;
    for (const auto& [deg, id] : ranked) {
        if (top.size() < cut || deg == nth_degree) top.insert(id);
        else break;
    }
    return top;
}

CentralityTracking central_tracking(const MetricTable& early, const MetricTable& late,
                                    int n) {
    CentralityTracking t;
    t.n = n;
    const auto early_top = top_degree_set(early, n);
    const auto late_top = top_degree_set(late, n);
    for (const auto& id : early_top) {
        if (late_top.count(id)) t.remained.insert(id);
        else t.dropped.insert(id);
    }
    for (const auto& id : late_top) {
        if (!early_top.count(id)) t.entered.insert(id);
    }
    return t;
}

}  // namespace forumlens
