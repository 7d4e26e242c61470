#include "forumlens/forum_model.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace forumlens {

namespace {

bool ordered_before(const MessageRecord& a, const MessageRecord& b) {
    if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
    return a.message_id < b.message_id;
}

bool is_anonymous_label(const std::string& s) {
    static const std::string kAnon = "anonymous";
    if (s.size() != kAnon.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(s[i])) != kAnon[i]) return false;
    }
    return true;
}

}  // namespace

void CourseSchedule::validate() const {
    if (week_length <= 0) throw MalformedInput("schedule: week_length must be positive");
    int prev_unit = 0;
    for (const auto& u : units) {
        if (u.unit <= prev_unit) {
            throw MalformedInput("schedule: unit numbers must be strictly increasing");
        }
        if (u.subforum_id.empty()) {
            throw MalformedInput("schedule: unit subforum_id must be non-empty");
        }
        if (u.release > u.due) {
            throw MalformedInput("schedule: unit release after due timestamp");
        }
        prev_unit = u.unit;
    }
}

std::optional<int> CourseSchedule::unit_for_subforum(const std::string& subforum_id) const {
    for (const auto& u : units) {
        if (u.subforum_id == subforum_id) return u.unit;
    }
    return std::nullopt;
}

ForumDataset ForumDataset::from_records(std::vector<MessageRecord> messages,
                                        CourseSchedule schedule) {
    schedule.validate();
    for (auto& m : messages) {
        if (m.message_id.empty()) throw MalformedInput("message_id must be non-empty");
        if (m.thread_id.empty()) throw MalformedInput("thread_id must be non-empty");
        if (m.forum_id.empty()) throw MalformedInput("forum_id must be non-empty");
        if (m.subforum_id && m.subforum_id->empty()) {
            throw MalformedInput("subforum_id must be non-empty when present");
        }
        if (m.timestamp <= 0) {
            throw MalformedInput("message " + m.message_id + ": timestamp must be positive");
        }
        if (m.text_length < 0) {
            throw MalformedInput("message " + m.message_id + ": negative text_length");
        }
        if (m.text && static_cast<std::int64_t>(m.text->size()) != m.text_length) {
            throw MalformedInput("message " + m.message_id +
                                 ": text_length does not match text");
        }
        if (m.author_id) {
            if (m.author_id->empty()) {
                throw MalformedInput("message " + m.message_id + ": empty author_id");
            }
            // A literal "anonymous" author label would merge distinct
            // anonymous users into one identity; normalize it to absent.
            if (is_anonymous_label(*m.author_id)) m.author_id.reset();
        }
        if (m.parent_message_id && *m.parent_message_id == m.message_id) {
            throw DanglingParent("message " + m.message_id + " is its own parent");
        }
    }
    ForumDataset d;
    d.messages_ = std::move(messages);
    d.schedule_ = std::move(schedule);
    d.build_indices(/*validate=*/true);
    return d;
}

ForumDataset ForumDataset::from_trusted_records(std::vector<MessageRecord> messages,
                                                CourseSchedule schedule) {
    ForumDataset d;
    d.messages_ = std::move(messages);
    d.schedule_ = std::move(schedule);
    d.build_indices(/*validate=*/false);
    return d;
}

void ForumDataset::build_indices(bool validate) {
    std::sort(messages_.begin(), messages_.end(), ordered_before);

    thread_index_.clear();
    starter_index_.clear();
    forum_index_.clear();

    if (validate) {
        std::unordered_set<std::string> seen_ids;
        seen_ids.reserve(messages_.size());
        for (const auto& m : messages_) {
            if (!seen_ids.insert(m.message_id).second) {
                throw DuplicateId("duplicate message_id " + m.message_id);
            }
        }
    }

    for (std::size_t i = 0; i < messages_.size(); ++i) {
        const auto& m = messages_[i];
        thread_index_[m.thread_id].push_back(i);
        forum_index_[m.forum_id].insert(m.thread_id);
    }

    // Locate each thread's starter: its earliest top-level message in the
    // (timestamp, message_id) order.
    for (const auto& [tid, idxs] : thread_index_) {
        std::size_t starter = messages_.size();
        for (std::size_t i : idxs) {
            if (messages_[i].is_top_level()) { starter = i; break; }
        }
        if (starter == messages_.size()) {
            if (validate) {
                throw MalformedInput("thread " + tid + " has no top-level post");
            }
            continue;  // trusted path tolerates it; thread has no starter
        }
        starter_index_[tid] = starter;
    }

    if (validate) {
        for (const auto& [tid, idxs] : thread_index_) {
            std::unordered_set<std::string> in_thread;
            in_thread.reserve(idxs.size());
            for (std::size_t i : idxs) in_thread.insert(messages_[i].message_id);
            for (std::size_t i : idxs) {
                const auto& m = messages_[i];
                if (m.parent_message_id && !in_thread.count(*m.parent_message_id)) {
                    throw DanglingParent("message " + m.message_id + ": parent " +
                                         *m.parent_message_id + " not in thread " + tid);
                }
            }
        }
    }
}

bool ForumDataset::has_thread(const std::string& thread_id) const {
    return thread_index_.count(thread_id) > 0;
}

std::vector<std::string> ForumDataset::thread_ids() const {
    std::vector<std::string> out;
    out.reserve(thread_index_.size());
    for (const auto& [tid, _] : thread_index_) out.push_back(tid);
    return out;
}

std::vector<const MessageRecord*> ForumDataset::thread_messages(
    const std::string& thread_id) const {
    auto it = thread_index_.find(thread_id);
    if (it == thread_index_.end()) throw UnknownThread("unknown thread " + thread_id);
    std::vector<const MessageRecord*> out;
    out.reserve(it->second.size());
    for (std::size_t i : it->second) out.push_back(&messages_[i]);
    return out;
}

const MessageRecord& ForumDataset::thread_starter(const std::string& thread_id) const {
    auto it = starter_index_.find(thread_id);
    if (it == starter_index_.end()) throw UnknownThread("unknown thread " + thread_id);
    return messages_[it->second];
}

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const char* const kMessageKeys[] = {
    "message_id", "thread_id",  "forum_id",  "subforum_id", "author_id",
    "parent_message_id", "timestamp", "text_length", "text"};

void require_exact_keys(const json& obj, const char* const* keys, std::size_t n,
                        const std::string& what) {
    if (!obj.is_object()) throw MalformedInput(what + " must be a JSON object");
    if (obj.size() != n) {
        throw MalformedInput(what + " must carry exactly the documented keys");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!obj.contains(keys[i])) {
            throw MalformedInput(what + " missing key \"" + keys[i] + "\"");
        }
    }
}

std::optional<std::string> opt_string(const json& v, const std::string& what) {
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) throw MalformedInput(what + " must be a string or null");
    return v.get<std::string>();
}

std::string req_string(const json& v, const std::string& what) {
    if (!v.is_string()) throw MalformedInput(what + " must be a string");
    return v.get<std::string>();
}

std::int64_t req_int(const json& v, const std::string& what) {
    if (!v.is_number_integer()) throw MalformedInput(what + " must be an integer");
    return v.get<std::int64_t>();
}

ForumDataset parse_dataset_json(const json& doc, CourseSchedule schedule) {
    if (!doc.is_object() || doc.size() != 1 || !doc.contains("messages")) {
        throw MalformedInput("forum dump must be {\"messages\": [...]}");
    }
    const json& arr = doc["messages"];
    if (!arr.is_array()) throw MalformedInput("\"messages\" must be an array");

    std::vector<MessageRecord> records;
    records.reserve(arr.size());
    for (const auto& e : arr) {
        require_exact_keys(e, kMessageKeys, std::size(kMessageKeys), "message record");
        MessageRecord m;
        m.message_id = req_string(e["message_id"], "message_id");
        m.thread_id = req_string(e["thread_id"], "thread_id");
        m.forum_id = req_string(e["forum_id"], "forum_id");
        m.subforum_id = opt_string(e["subforum_id"], "subforum_id");
        m.author_id = opt_string(e["author_id"], "author_id");
        m.parent_message_id = opt_string(e["parent_message_id"], "parent_message_id");
        m.timestamp = req_int(e["timestamp"], "timestamp");
        m.text_length = req_int(e["text_length"], "text_length");
        m.text = opt_string(e["text"], "text");
        records.push_back(std::move(m));
    }
    return ForumDataset::from_records(std::move(records), std::move(schedule));
}

}  // namespace

ForumDataset parse_dataset(const std::string& json_text, CourseSchedule schedule) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    return parse_dataset_json(doc, std::move(schedule));
}

ForumDataset parse_dataset(std::istream& source, CourseSchedule schedule) {
    json doc;
    try {
        doc = json::parse(source);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    return parse_dataset_json(doc, std::move(schedule));
}

CourseSchedule parse_schedule(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("invalid schedule JSON: ") + e.what());
    }
    static const char* const kTop[] = {"course_start", "week_length_seconds", "units"};
    require_exact_keys(doc, kTop, std::size(kTop), "schedule");
    CourseSchedule s;
    s.course_start = req_int(doc["course_start"], "course_start");
    s.week_length = req_int(doc["week_length_seconds"], "week_length_seconds");
    if (!doc["units"].is_array()) throw MalformedInput("schedule \"units\" must be an array");
    static const char* const kUnit[] = {"unit", "subforum_id", "release", "due"};
    for (const auto& e : doc["units"]) {
        require_exact_keys(e, kUnit, std::size(kUnit), "schedule unit");
        UnitSchedule u;
        u.unit = static_cast<int>(req_int(e["unit"], "unit"));
        u.subforum_id = req_string(e["subforum_id"], "subforum_id");
        u.release = req_int(e["release"], "release");
        u.due = req_int(e["due"], "due");
        s.units.push_back(std::move(u));
    }
    s.validate();
    return s;
}

std::string serialize_dataset(const ForumDataset& d) {
    ordered_json arr = ordered_json::array();
    for (const auto& m : d.messages()) {
        ordered_json e;
        e["message_id"] = m.message_id;
        e["thread_id"] = m.thread_id;
        e["forum_id"] = m.forum_id;
        e["subforum_id"] = m.subforum_id ? ordered_json(*m.subforum_id) : ordered_json(nullptr);
        e["author_id"] = m.author_id ? ordered_json(*m.author_id) : ordered_json(nullptr);
        e["parent_message_id"] =
            m.parent_message_id ? ordered_json(*m.parent_message_id) : ordered_json(nullptr);
        e["timestamp"] = m.timestamp;
        e["text_length"] = m.text_length;
        e["text"] = m.text ? ordered_json(*m.text) : ordered_json(nullptr);
        arr.push_back(std::move(e));
    }
    ordered_json doc;
    doc["messages"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string serialize_schedule(const CourseSchedule& s) {
    ordered_json doc;
    doc["course_start"] = s.course_start;
    doc["week_length_seconds"] = s.week_length;
    ordered_json units = ordered_json::array();
    for (const auto& u : s.units) {
        ordered_json e;
        e["unit"] = u.unit;
        e["subforum_id"] = u.subforum_id;
        e["release"] = u.release;
        e["due"] = u.due;
        units.push_back(std::move(e));
    }
    doc["units"] = std::move(units);
    return doc.dump(2) + "\n";
}

ForumDataset snapshot(const ForumDataset& d, std::int64_t cutoff) {
    // A comment cannot survive without its thread starter: when the
    // starter post misses the cutoff the whole thread goes.
    std::set<std::string> dropped_threads;
    for (const auto& tid : d.thread_ids()) {
        if (d.thread_starter(tid).timestamp > cutoff) dropped_threads.insert(tid);
    }
    std::vector<MessageRecord> kept;
    for (const auto& m : d.messages()) {
        if (m.timestamp <= cutoff && !dropped_threads.count(m.thread_id)) {
            kept.push_back(m);
        }
    }
    return ForumDataset::from_trusted_records(std::move(kept), d.schedule());
}

int course_week(std::int64_t ts, const CourseSchedule& s) {
    if (ts < s.course_start) {
        throw BeforeCourseStart("timestamp " + std::to_string(ts) +
                                " precedes course start");
    }
    return static_cast<int>((ts - s.course_start) / s.week_length) + 1;
}

}  // namespace forumlens
