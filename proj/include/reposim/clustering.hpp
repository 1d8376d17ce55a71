#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reposim {

struct FitReport {
    std::size_t iterations = 0;
    std::vector<double> objective_trace;  // total cosine similarity, per iteration
    bool converged = false;
};

// Spherical k-means on raw vectors. Inputs are L2-normalized copies;
// initialization is seeded k-means++ with (1 - cos)^2 weights; assignment
// ties break toward the lowest cluster id; an empty cluster is reseeded from
// the globally worst-fit point. The objective trace never decreases.
struct KMeansFit {
    std::vector<std::vector<double>> centroids;  // unit norm
    std::vector<std::uint32_t> labels;           // per input point
    FitReport report;
};

KMeansFit fit_spherical_kmeans(const std::vector<std::vector<double>>& points, std::size_t k,
                               std::size_t max_iter, std::uint64_t seed);

struct ClusterModel {
    std::size_t k = 0;
    std::size_t dim = 0;
    std::vector<std::vector<double>> centroids;
    std::map<std::string, std::uint32_t> assignment;
    std::map<std::uint32_t, std::string> labels;
    std::map<std::uint32_t, std::vector<std::string>> representatives;
};

struct KeyedKMeansResult {
    ClusterModel model;
    FitReport report;
};

KeyedKMeansResult spherical_kmeans(
    const std::vector<std::pair<std::string, std::vector<double>>>& points, std::size_t k,
    std::size_t max_iter, std::uint64_t seed);

struct GapPoint {
    double gap = 0.0;
    double se = 0.0;
};

// Gap statistic against uniform samples on the unit sphere: for each K the
// within-cluster dispersion W = sum(1 - cos) of the data fit is compared to
// B reference fits; gap = mean(log W_ref) - log W_data with the standard
// error correction sqrt(1 + 1/B).
std::map<std::size_t, GapPoint> gap_statistic(const std::vector<std::vector<double>>& points,
                                              const std::vector<std::size_t>& k_candidates,
                                              std::size_t b_refs, std::uint64_t seed,
                                              std::size_t max_iter = 100);

// One-standard-error rule: the smallest K with gap(K) >= gap(K') - se(K')
// for the next candidate K'; falls back to the largest candidate.
std::size_t select_k(const std::map<std::size_t, GapPoint>& gaps);

// Nearest-centroid assignment for sub-token embeddings; ties break toward
// the lowest cluster id.
std::map<std::string, std::uint32_t> assign_tokens(
    const std::vector<std::pair<std::string, std::vector<double>>>& embeddings,
    const std::vector<std::vector<double>>& centroids);

using EmbeddingLookup = std::function<std::optional<std::vector<double>>(const std::string&)>;

// Union of the top-ceil(m/2) members by corpus frequency and by cosine
// proximity to the centroid, frequency picks first. Members without an
// embedding participate only in the frequency half.
std::vector<std::string> representatives(std::uint32_t cluster_id,
                                         const std::map<std::string, std::uint32_t>& assignment,
                                         const std::map<std::string, std::uint64_t>& corpus_frequencies,
                                         const std::vector<std::vector<double>>& centroids,
                                         std::size_t m, const EmbeddingLookup& embedding_of);

void compute_representatives(ClusterModel& model,
                             const std::map<std::string, std::uint64_t>& corpus_frequencies,
                             std::size_t m, const EmbeddingLookup& embedding_of);

// Fingerprint over centroids and assignment (labels excluded, so labeling a
// fitted model does not invalidate derived artifacts).
std::string model_checksum(const ClusterModel& model);

// File format: header "K dim"; K centroid lines; "token cluster" assignment
// lines; optional "@cluster label text" lines.
std::string write_cluster_model(const ClusterModel& model);
ClusterModel read_cluster_model(const std::string& contents,
                                const std::string& source_name = "<string>");
ClusterModel read_cluster_model_file(const std::string& path);

}  // namespace reposim
