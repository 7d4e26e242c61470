#include "forumlens/graph_build.hpp"

#include <map>

namespace forumlens {

namespace {

void add_author_nodes(const ForumDataset& d, SocialGraph& g) {
    for (const auto& m : d.messages()) {
        if (m.author_id) g.add_node(*m.author_id);
    }
}

}  // namespace

SocialGraph thread_starter_network(const ForumDataset& d) {
    SocialGraph g;
    add_author_nodes(d, g);
    for (const auto& tid : d.thread_ids()) {
        const MessageRecord& starter = d.thread_starter(tid);
        if (starter.is_anonymous()) continue;
        const std::string& s = *starter.author_id;
        std::map<std::string, std::int64_t> messages_by_author;
        for (const MessageRecord* m : d.thread_messages(tid)) {
            if (m->author_id) messages_by_author[*m->author_id] += 1;
        }
        for (const auto& [p, count] : messages_by_author) {
            if (p == s) continue;  // no self edges
            g.add_edge(s, p, count);
        }
    }
    return g;
}

SocialGraph subthread_starter_network(const ForumDataset& d, int tau) {
    if (tau < 0) throw InvalidArgument("tau must be >= 0");
    SocialGraph g;
    add_author_nodes(d, g);
    for (const auto& tid : d.thread_ids()) {
        // Per parent message: total direct comments (anonymous included,
        // they count toward the > tau rule) and comments per author.
        std::map<std::string, std::int64_t> comment_totals;
        std::map<std::string, std::map<std::string, std::int64_t>> comments_by_author;
        for (const MessageRecord* m : d.thread_messages(tid)) {
            if (!m->parent_message_id) continue;
            comment_totals[*m->parent_message_id] += 1;
            if (m->author_id) {
                comments_by_author[*m->parent_message_id][*m->author_id] += 1;
            }
        }
        for (const MessageRecord* post : d.thread_messages(tid)) {
            auto total_it = comment_totals.find(post->message_id);
            if (total_it == comment_totals.end() || total_it->second <= tau) continue;
            if (post->is_anonymous()) continue;
            const std::string& q = *post->author_id;
            auto by_author = comments_by_author.find(post->message_id);
            if (by_author == comments_by_author.end()) continue;
            for (const auto& [c, count] : by_author->second) {
                if (c == q) continue;
                g.add_edge(q, c, count);
            }
        }
    }
    return g;
}

SocialGraph build_mooc_network(const ForumDataset& d, const BuildConfig& cfg) {
    SocialGraph g;
    if (cfg.include_thread_starter_net) {
        g = union_sum(g, thread_starter_network(d));
    }
    if (cfg.include_subthread_net) {
        g = union_sum(g, subthread_starter_network(d, cfg.subthread_comment_threshold));
    }
    return g;
}

}  // namespace forumlens
