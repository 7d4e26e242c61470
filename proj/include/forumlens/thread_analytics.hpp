#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forumlens/forum_model.hpp"

namespace forumlens {

/// The five per-thread conversation features. Duration is floored at one
/// hour so densities stay finite on single-message threads.
struct ThreadFeatures {
    std::string thread_id;
    std::int64_t thread_length = 0;   // messages: posts + comments
    std::int64_t content_length = 0;  // total characters
    double duration_hours = 0.0;
    double thread_density = 0.0;   // thread_length / duration_hours
    double content_density = 0.0;  // content_length / thread_length

    std::array<double, 5> as_vector() const {
        return {static_cast<double>(thread_length), static_cast<double>(content_length),
                duration_hours, thread_density, content_density};
    }
};

/// Throws UnknownThread.
ThreadFeatures thread_features(const ForumDataset& d, const std::string& thread_id);

/// Features for every thread, sorted by thread_id.
std::vector<ThreadFeatures> all_thread_features(const ForumDataset& d);

using FeatureMatrix = std::vector<std::array<double, 5>>;

/// Z-scores each column (population standard deviation); zero-variance
/// columns map to zero. Throws TooFewThreads below two rows.
FeatureMatrix standardize(const std::vector<ThreadFeatures>& features);

/// Inertia after every Lloyd iteration of one run; used to audit the
/// non-increase guarantee.
struct KmeansTrace {
    int k = 0;
    int restart = 0;
    std::vector<double> inertia_history;
};

/// Best run for one k.
struct KmeansRun {
    int k = 0;
    std::vector<int> labels;  // per row
    FeatureMatrix centroids;
    double inertia = 0.0;
    double silhouette = 0.0;
};

struct Clustering {
    int k = 0;
    std::map<std::string, int> assignments;
    FeatureMatrix centroids;
    double inertia = 0.0;
    double silhouette = 0.0;
    std::vector<KmeansRun> per_k;       // diagnostics, one entry per candidate k
    std::vector<KmeansTrace> traces;    // every restart of every k
};

/// Lloyd's iteration from seeded random centroids (best of `restarts` by
/// inertia per k), k chosen from [k_min, k_max] by maximal mean
/// silhouette (ties toward smaller k). Deterministic given seed.
/// Point-to-centroid distance ties break toward the lowest cluster index.
/// Throws DegenerateData when fewer than two distinct points exist and
/// InvalidArgument when the row count is not greater than k_max.
Clustering kmeans_cluster(const FeatureMatrix& points, const std::vector<std::string>& ids,
                          int k_min, int k_max, std::uint64_t seed, int restarts);

/// Single-k variant; exposed for tests and diagnostics.
KmeansRun kmeans_single(const FeatureMatrix& points, int k, std::uint64_t seed,
                        int restarts, std::vector<KmeansTrace>* traces = nullptr);

/// Mean silhouette width over all points (Euclidean; singleton clusters
/// score zero).
double silhouette_score(const FeatureMatrix& points, const std::vector<int>& labels, int k);

/// Rule-based conversation-category labels from per-cluster means of the
/// RAW (unstandardized) features:
///   - the cluster with maximal mean thread_density is "bursty-short"
///     when its mean content_density falls below the global median,
///     otherwise "bursty-detailed";
///   - the cluster with maximal mean duration is
///     "long-lived-sparse-detailed" when its thread_density is below and
///     its content_density above the global medians;
///   - every other cluster is labeled by its (thread_length,
///     content_density) quadrant: long/short x detailed/less-detailed.
/// Global medians are taken over threads, not clusters.
std::map<int, std::string> categorize_clusters(const Clustering& c,
                                               const std::vector<ThreadFeatures>& raw);

}  // namespace forumlens
