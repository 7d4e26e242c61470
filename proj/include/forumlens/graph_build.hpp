#pragma once

#include "forumlens/forum_model.hpp"
#include "forumlens/social_graph.hpp"

namespace forumlens {

struct BuildConfig {
    int subthread_comment_threshold = 3;  // tau; a post qualifies with > tau comments
    bool include_thread_starter_net = true;
    bool include_subthread_net = true;
};

/// Thread-starter network: every thread with a non-anonymous starter s
/// contributes an edge s -> p for each other non-anonymous participant p,
/// weighted by the number of messages p authored in that thread. Every
/// non-anonymous author of the dataset is a node, tied or not.
SocialGraph thread_starter_network(const ForumDataset& d);

/// Sub-thread-starter network: a message with strictly more than tau
/// direct comments makes its (non-anonymous) author q a sub-thread
/// starter, with an edge q -> c per non-anonymous commenter c weighted
/// by c's comments on that message. Qualification counts all direct
/// comments, anonymous ones included; only the edges honor anonymity.
SocialGraph subthread_starter_network(const ForumDataset& d, int tau);

/// Union of the enabled component networks with duplicate ties summed.
SocialGraph build_mooc_network(const ForumDataset& d, const BuildConfig& cfg);

}  // namespace forumlens
