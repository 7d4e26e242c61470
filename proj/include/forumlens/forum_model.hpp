#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forumlens/errors.hpp"

namespace forumlens {

/// One forum message. A record with no parent_message_id is a top-level
/// post; with one, a comment. A record with no author_id was posted
/// anonymously -- anonymity is always the *absence* of an author, never
/// a sentinel label.
struct MessageRecord {
    std::string message_id;
    std::string thread_id;
    std::string forum_id;
    std::optional<std::string> subforum_id;
    std::optional<std::string> author_id;
    std::optional<std::string> parent_message_id;
    std::int64_t timestamp = 0;  // epoch seconds UTC
    std::int64_t text_length = 0;
    std::optional<std::string> text;

    bool is_top_level() const { return !parent_message_id.has_value(); }
    bool is_anonymous() const { return !author_id.has_value(); }

    bool operator==(const MessageRecord&) const = default;
};

struct UnitSchedule {
    int unit = 0;
    std::string subforum_id;
    std::int64_t release = 0;
    std::int64_t due = 0;

    bool operator==(const UnitSchedule&) const = default;
};

struct CourseSchedule {
    std::int64_t course_start = 0;
    std::int64_t week_length = 7 * 86400;
    std::vector<UnitSchedule> units;

    /// Throws MalformedInput on violated invariants (unit numbers not
    /// strictly increasing, release after due, non-positive week length).
    void validate() const;

    /// Unit number owning a subforum, if the schedule maps one.
    std::optional<int> unit_for_subforum(const std::string& subforum_id) const;

    bool operator==(const CourseSchedule&) const = default;
};

/// Validated, immutable forum dump. Messages are held sorted by
/// (timestamp, message_id); per-thread and per-forum indices are built
/// at construction. All accessors are const and safe for concurrent use.
class ForumDataset {
public:
    ForumDataset() = default;

    /// Validates records against the model invariants, normalizes any
    /// literal "anonymous" author label (case-insensitive) to an absent
    /// author, sorts and indexes.
    static ForumDataset from_records(std::vector<MessageRecord> messages,
                                     CourseSchedule schedule);

    const std::vector<MessageRecord>& messages() const { return messages_; }
    const CourseSchedule& schedule() const { return schedule_; }
    std::size_t message_count() const { return messages_.size(); }
    std::size_t thread_count() const { return thread_index_.size(); }

    bool has_thread(const std::string& thread_id) const;
    std::vector<std::string> thread_ids() const;

    /// Messages of one thread ordered by (timestamp, message_id).
    /// Throws UnknownThread.
    std::vector<const MessageRecord*> thread_messages(const std::string& thread_id) const;

    /// The thread's earliest top-level message. Throws UnknownThread.
    const MessageRecord& thread_starter(const std::string& thread_id) const;

    /// forum_id -> set of thread ids.
    const std::map<std::string, std::set<std::string>>& forum_index() const {
        return forum_index_;
    }

private:
    friend ForumDataset snapshot(const ForumDataset&, std::int64_t);

    // Trusted path: records already normalized/validated upstream.
    static ForumDataset from_trusted_records(std::vector<MessageRecord> messages,
                                             CourseSchedule schedule);

    void build_indices(bool validate);

    std::vector<MessageRecord> messages_;  // sorted by (timestamp, message_id)
    CourseSchedule schedule_;
    std::map<std::string, std::vector<std::size_t>> thread_index_;
    std::map<std::string, std::size_t> starter_index_;  // thread -> message position
    std::map<std::string, std::set<std::string>> forum_index_;
};

/// Parse a forum-dump JSON document. The schema is strict: the top level
/// is {"messages": [...]} and every element carries exactly the keys
/// message_id, thread_id, forum_id, subforum_id, author_id,
/// parent_message_id, timestamp, text_length, text (nullable fields may
/// be null but must be present).
/// Throws MalformedInput, DuplicateId, DanglingParent.
ForumDataset parse_dataset(const std::string& json_text, CourseSchedule schedule);
ForumDataset parse_dataset(std::istream& source, CourseSchedule schedule);

/// Schedule JSON: {"course_start": int, "week_length_seconds": int,
/// "units": [{"unit": int, "subforum_id": str, "release": int, "due": int}]}.
CourseSchedule parse_schedule(const std::string& json_text);

/// Canonical serialization; parse(serialize(d)) reproduces d exactly.
std::string serialize_dataset(const ForumDataset& d);
std::string serialize_schedule(const CourseSchedule& s);

/// Restriction of d to messages with timestamp <= cutoff. A thread whose
/// starter post misses the cutoff is dropped entirely, comments included.
ForumDataset snapshot(const ForumDataset& d, std::int64_t cutoff);

/// 1-based course week of a timestamp. Throws BeforeCourseStart.
int course_week(std::int64_t ts, const CourseSchedule& s);

}  // namespace forumlens
