#include "forumlens/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "forumlens/errors.hpp"
#include "forumlens/forum_model.hpp"
#include "forumlens/rng.hpp"

namespace forumlens {

namespace {

// Course corpus shape: six forums, the last one split into weekly unit
// subforums through the schedule.
const char* const kForums[] = {"general",   "faq",         "assignments",
                               "technical", "studygroups", "units"};

constexpr std::int64_t kCourseStart = 1370044800;  // 2013-06-01T00:00:00Z
constexpr std::int64_t kWeek = 7 * 86400;
constexpr std::int64_t kDay = 86400;

std::string student_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "s%04d", i);
    return buf;
}

std::string message_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "m%06d", i);
    return buf;
}

std::string thread_id(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "t%04d", i);
    return buf;
}

/// Weighted pick over non-negative weights; total must be positive.
std::size_t pick_weighted(std::mt19937_64& rng, const std::vector<double>& weights,
                          double total) {
    double target = rng_unit(rng) * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        target -= weights[i];
        if (target < 0) return i;
    }
    return weights.size() - 1;
}

}  // namespace

SynthOutput synth_fixture(const SynthConfig& cfg) {
    if (cfg.n_students < 1 || cfg.n_threads < 0 || cfg.weeks < 1) {
        throw InvalidArgument("synth: students and weeks must be positive");
    }
    auto rng = seeded_rng(cfg.seed, 0x5f0f);

    CourseSchedule schedule;
    schedule.course_start = kCourseStart;
    schedule.week_length = kWeek;
    for (int u = 1; u <= cfg.weeks; ++u) {
        UnitSchedule unit;
        unit.unit = u;
        unit.subforum_id = "unit" + std::to_string(u);
        // Unit videos land two days before their week ends; the
        // assignment is due at the same moment.
        unit.release = kCourseStart + u * kWeek - 2 * kDay;
        unit.due = unit.release;
        schedule.units.push_back(unit);
    }

    // Cohort arrival: quadratic skew toward the early weeks.
    std::vector<int> arrival_week(cfg.n_students);
    for (int s = 0; s < cfg.n_students; ++s) {
        const double u = rng_unit(rng);
        arrival_week[s] = 1 + static_cast<int>(u * u * cfg.weeks);
        arrival_week[s] = std::min(arrival_week[s], cfg.weeks);
    }
    // Preferential attachment state: one phantom message per student so
    // newcomers stay reachable.
    std::vector<double> engagement(cfg.n_students, 1.0);
    double engagement_total = cfg.n_students;

    const std::int64_t course_end = kCourseStart + static_cast<std::int64_t>(cfg.weeks) * kWeek;

    struct PendingMessage {
        MessageRecord record;
    };
    std::vector<MessageRecord> messages;
    int next_message = 1;

    auto sample_author = [&](int week) -> std::optional<std::string> {
        if (rng_unit(rng) < 0.05) return std::nullopt;  // anonymous posting
        // Rejection-sample an arrived student, preferentially active ones.
        for (int tries = 0; tries < 64; ++tries) {
            const auto s = pick_weighted(rng, engagement, engagement_total);
            if (arrival_week[s] <= week) {
                engagement[s] += 1.0;
                engagement_total += 1.0;
                return student_id(static_cast<int>(s) + 1);
            }
        }
        // Dense fallback: earliest arrival always exists for week >= 1.
        for (int s = 0; s < cfg.n_students; ++s) {
            if (arrival_week[s] <= week) return student_id(s + 1);
        }
        return std::nullopt;
    };

    for (int t = 1; t <= cfg.n_threads; ++t) {
        const double skew = rng_unit(rng);
        int week = 1 + static_cast<int>(std::pow(skew, 1.4) * cfg.weeks);
        week = std::min(week, cfg.weeks);

        std::string forum;
        std::optional<std::string> subforum;
        int unit = 0;
        if (rng_unit(rng) < 0.4) {
            forum = "units";
            // Mostly the unit of the thread's week, sometimes a neighbor.
            unit = week;
            if (rng_unit(rng) < 0.2) {
                unit += static_cast<int>(rng_below(rng, 3)) - 1;
                unit = std::clamp(unit, 1, cfg.weeks);
            }
            subforum = "unit" + std::to_string(unit);
        } else {
            forum = kForums[rng_below(rng, 5)];
        }

        std::int64_t start_ts =
            kCourseStart + static_cast<std::int64_t>(week - 1) * kWeek +
            static_cast<std::int64_t>(rng_unit(rng) * (kWeek - 1));
        if (unit > 0 && rng_unit(rng) < 0.10) {
            // An occasional keen student posts before the unit releases.
            const std::int64_t release = kCourseStart + unit * kWeek - 2 * kDay;
            const std::int64_t lead = kDay / 2 + static_cast<std::int64_t>(
                                                     rng_unit(rng) * 4 * kDay);
            start_ts = std::max<std::int64_t>(kCourseStart, release - lead);
            week = static_cast<int>((start_ts - kCourseStart) / kWeek) + 1;
        }

        const std::string tid = thread_id(t);
        std::vector<std::string> post_ids;   // top-level posts, comment targets
        std::vector<double> post_heat;       // 1 + direct comment count
        double heat_total = 0.0;

        MessageRecord starter;
        starter.message_id = message_id(next_message++);
        starter.thread_id = tid;
        starter.forum_id = forum;
        starter.subforum_id = subforum;
        starter.author_id = sample_author(week);
        starter.timestamp = start_ts;
        starter.text_length = 20 + static_cast<std::int64_t>(rng_below(rng, 600));
        messages.push_back(starter);
        post_ids.push_back(starter.message_id);
        post_heat.push_back(1.0);
        heat_total = 1.0;

        const int n_replies =
            static_cast<int>(-std::log(1.0 - rng_unit(rng)) * 9.0);
        std::int64_t ts = start_ts;
        for (int r = 0; r < n_replies; ++r) {
            ts += 120 + static_cast<std::int64_t>(-std::log(1.0 - rng_unit(rng)) * 6 * 3600);
            if (ts >= course_end) break;
            const int msg_week = static_cast<int>((ts - kCourseStart) / kWeek) + 1;

            MessageRecord m;
            m.message_id = message_id(next_message++);
            m.thread_id = tid;
            m.forum_id = forum;
            m.subforum_id = subforum;
            m.author_id = sample_author(msg_week);
            m.timestamp = ts;
            m.text_length = 20 + static_cast<std::int64_t>(rng_below(rng, 600));
            if (rng_unit(rng) < 0.45) {
                // Comment on an existing post, preferentially a busy one.
                const auto p = pick_weighted(rng, post_heat, heat_total);
                m.parent_message_id = post_ids[p];
                post_heat[p] += 1.0;
                heat_total += 1.0;
            } else {
                post_ids.push_back(m.message_id);
                post_heat.push_back(1.0);
                heat_total += 1.0;
            }
            messages.push_back(std::move(m));
        }
    }

    // Serialize through the model so the emitted dump is exactly what a
    // parse would produce.
    ForumDataset d = ForumDataset::from_records(std::move(messages), schedule);
    SynthOutput out;
    out.dataset_json = serialize_dataset(d);
    out.schedule_json = serialize_schedule(schedule);
    return out;
}

}  // namespace forumlens
