#include "forumlens/thread_analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "forumlens/errors.hpp"
#include "forumlens/rng.hpp"

namespace forumlens {

ThreadFeatures thread_features(const ForumDataset& d, const std::string& thread_id) {
    const auto msgs = d.thread_messages(thread_id);  // throws UnknownThread
    ThreadFeatures f;
    f.thread_id = thread_id;
    f.thread_length = static_cast<std::int64_t>(msgs.size());
    for (const MessageRecord* m : msgs) f.content_length += m->text_length;
    const std::int64_t span = msgs.back()->timestamp - msgs.front()->timestamp;
    f.duration_hours = std::max(1.0, static_cast<double>(span) / 3600.0);
    f.thread_density = static_cast<double>(f.thread_length) / f.duration_hours;
    f.content_density =
        static_cast<double>(f.content_length) / static_cast<double>(f.thread_length);
    return f;
}

std::vector<ThreadFeatures> all_thread_features(const ForumDataset& d) {
    std::vector<ThreadFeatures> out;
    for (const auto& tid : d.thread_ids()) out.push_back(thread_features(d, tid));
    return out;  // thread_ids() is sorted
}

FeatureMatrix standardize(const std::vector<ThreadFeatures>& features) {
    const std::size_t n = features.size();
    if (n < 2) throw TooFewThreads("standardize needs at least two threads");
    FeatureMatrix rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = features[i].as_vector();

    for (std::size_t col = 0; col < 5; ++col) {
        double mean = 0.0;
        for (const auto& r : rows) mean += r[col];
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (const auto& r : rows) var += (r[col] - mean) * (r[col] - mean);
        var /= static_cast<double>(n);
        const double sd = std::sqrt(var);
        for (auto& r : rows) {
            r[col] = sd > 0.0 ? (r[col] - mean) / sd : 0.0;
        }
    }
    return rows;
}

namespace {

double sq_dist(const std::array<double, 5>& a, const std::array<double, 5>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

struct LloydOutcome {
    std::vector<int> labels;
    FeatureMatrix centroids;
    double inertia = 0.0;
    std::vector<double> inertia_history;
};

LloydOutcome lloyd(const FeatureMatrix& points, int k, std::mt19937_64& rng) {
    const int n = static_cast<int>(points.size());

    // Forgy start: k points sampled without replacement.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n - i)));
        std::swap(order[i], order[j]);
    }
    FeatureMatrix centroids(k);
    for (int c = 0; c < k; ++c) centroids[c] = points[order[c]];

    std::vector<int> labels(n, -1);
    LloydOutcome out;
    const int max_iters = 300;
    for (int iter = 0; iter < max_iters; ++iter) {
        // Assignment; ties go to the lowest cluster index.
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double best_d = sq_dist(points[i], centroids[0]);
            for (int c = 1; c < k; ++c) {
                const double d = sq_dist(points[i], centroids[c]);
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }

        // Re-seed any empty cluster at the point currently farthest from
        // its centroid; setting the centroid to that point keeps the
        // inertia sequence non-increasing.
        std::vector<int> counts(k, 0);
        for (int l : labels) ++counts[l];
        for (int c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            int worst = -1;
            double worst_d = -1.0;
            for (int i = 0; i < n; ++i) {
                if (counts[labels[i]] <= 1) continue;  // do not empty another cluster
                const double d = sq_dist(points[i], centroids[labels[i]]);
                if (d > worst_d) {
                    worst_d = d;
                    worst = i;
                }
            }
            if (worst < 0) break;  // fewer distinct points than clusters
            --counts[labels[worst]];
            labels[worst] = c;
            counts[c] = 1;
            centroids[c] = points[worst];
            changed = true;
        }

        // Update step.
        FeatureMatrix sums(k, {0, 0, 0, 0, 0});
        std::vector<int> sizes(k, 0);
        for (int i = 0; i < n; ++i) {
            for (std::size_t col = 0; col < 5; ++col) sums[labels[i]][col] += points[i][col];
            ++sizes[labels[i]];
        }
        for (int c = 0; c < k; ++c) {
            if (sizes[c] == 0) continue;
            for (std::size_t col = 0; col < 5; ++col) {
                centroids[c][col] = sums[c][col] / static_cast<double>(sizes[c]);
            }
        }

        double inertia = 0.0;
        for (int i = 0; i < n; ++i) inertia += sq_dist(points[i], centroids[labels[i]]);
        out.inertia_history.push_back(inertia);
        if (!changed) break;
    }

    out.labels = std::move(labels);
    out.centroids = std::move(centroids);
    out.inertia = out.inertia_history.back();
    return out;
}

}  // namespace

double silhouette_score(const FeatureMatrix& points, const std::vector<int>& labels, int k) {
    const int n = static_cast<int>(points.size());
    std::vector<int> sizes(k, 0);
    for (int l : labels) ++sizes[l];

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        if (sizes[labels[i]] <= 1) continue;  // singleton scores 0
        std::vector<double> mean_dist(k, 0.0);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            mean_dist[labels[j]] += std::sqrt(sq_dist(points[i], points[j]));
        }
        double a = mean_dist[labels[i]] / static_cast<double>(sizes[labels[i]] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
            if (c == labels[i] || sizes[c] == 0) continue;
            b = std::min(b, mean_dist[c] / static_cast<double>(sizes[c]));
        }
        const double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(n);
}

KmeansRun kmeans_single(const FeatureMatrix& points, int k, std::uint64_t seed,
                        int restarts, std::vector<KmeansTrace>* traces) {
    if (k < 1) throw InvalidArgument("kmeans: k must be >= 1");
    if (static_cast<int>(points.size()) < k) {
        throw InvalidArgument("kmeans: need at least k points");
    }
    if (restarts < 1) throw InvalidArgument("kmeans: restarts must be >= 1");

    KmeansRun best;
    bool have_best = false;
    for (int r = 0; r < restarts; ++r) {
        auto rng = seeded_rng(seed, (static_cast<std::uint64_t>(k) << 32) | static_cast<std::uint64_t>(r));
        LloydOutcome o = lloyd(points, k, rng);
        if (traces) traces->push_back({k, r, o.inertia_history});
        if (!have_best || o.inertia < best.inertia) {
            best.k = k;
            best.labels = std::move(o.labels);
            best.centroids = std::move(o.centroids);
            best.inertia = o.inertia;
            have_best = true;
        }
    }
    best.silhouette = silhouette_score(points, best.labels, k);
    return best;
}

Clustering kmeans_cluster(const FeatureMatrix& points, const std::vector<std::string>& ids,
                          int k_min, int k_max, std::uint64_t seed, int restarts) {
    if (points.size() != ids.size()) {
        throw InvalidArgument("kmeans: ids must parallel the point rows");
    }
    if (k_min < 2 || k_max < k_min) throw InvalidArgument("kmeans: bad k range");
    if (static_cast<int>(points.size()) <= k_max) {
        throw InvalidArgument("kmeans: need more points than the largest k");
    }
    std::set<std::array<double, 5>> distinct(points.begin(), points.end());
    if (distinct.size() < 2) {
        throw DegenerateData("kmeans: fewer than two distinct points");
    }

    Clustering result;
    for (int k = k_min; k <= k_max; ++k) {
        result.per_k.push_back(kmeans_single(points, k, seed, restarts, &result.traces));
    }
    std::size_t chosen = 0;
    for (std::size_t i = 1; i < result.per_k.size(); ++i) {
        if (result.per_k[i].silhouette > result.per_k[chosen].silhouette) chosen = i;
    }

    const KmeansRun& run = result.per_k[chosen];
    result.k = run.k;
    result.centroids = run.centroids;
    result.inertia = run.inertia;
    result.silhouette = run.silhouette;
    for (std::size_t i = 0; i < ids.size(); ++i) result.assignments[ids[i]] = run.labels[i];
    return result;
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0) return 0.0;
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::map<int, std::string> categorize_clusters(const Clustering& c,
                                               const std::vector<ThreadFeatures>& raw) {
    std::map<std::string, const ThreadFeatures*> by_id;
    for (const auto& f : raw) by_id[f.thread_id] = &f;

    // Per-cluster means of the raw features.
    struct Mean {
        double thread_length = 0, duration = 0, thread_density = 0, content_density = 0;
        int count = 0;
    };
    std::vector<Mean> means(c.k);
    for (const auto& [tid, cluster] : c.assignments) {
        auto it = by_id.find(tid);
        if (it == by_id.end()) {
            throw InvalidArgument("categorize_clusters: missing raw features for " + tid);
        }
        Mean& m = means[cluster];
        m.thread_length += static_cast<double>(it->second->thread_length);
        m.duration += it->second->duration_hours;
        m.thread_density += it->second->thread_density;
        m.content_density += it->second->content_density;
        ++m.count;
    }
    for (auto& m : means) {
        if (m.count > 0) {
            m.thread_length /= m.count;
            m.duration /= m.count;
            m.thread_density /= m.count;
            m.content_density /= m.count;
        }
    }

    // Global medians over threads.
    std::vector<double> lengths, densities, contents;
    for (const auto& f : raw) {
        lengths.push_back(static_cast<double>(f.thread_length));
        densities.push_back(f.thread_density);
        contents.push_back(f.content_density);
    }
    const double med_length = median(lengths);
    const double med_density = median(densities);
    const double med_content = median(contents);

    std::map<int, std::string> labels;

    int burstiest = 0;
    for (int i = 1; i < c.k; ++i) {
        if (means[i].thread_density > means[burstiest].thread_density) burstiest = i;
    }
    labels[burstiest] =
        means[burstiest].content_density < med_content ? "bursty-short" : "bursty-detailed";

    int longest = 0;
    for (int i = 1; i < c.k; ++i) {
        if (means[i].duration > means[longest].duration) longest = i;
    }
    if (!labels.count(longest) && means[longest].thread_density < med_density &&
        means[longest].content_density > med_content) {
        labels[longest] = "long-lived-sparse-detailed";
    }

    for (int i = 0; i < c.k; ++i) {
        if (labels.count(i)) continue;
        const bool is_long = means[i].thread_length >= med_length;
        const bool detailed = means[i].content_density >= med_content;
        labels[i] = std::string(is_long ? "long" : "short") +
                    (detailed ? "-detailed" : "-less-detailed");
    }
    return labels;
}

}  // namespace forumlens
