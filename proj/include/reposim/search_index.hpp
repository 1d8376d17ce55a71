#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reposim/distribution.hpp"

namespace reposim {

enum class SimilarityMode { kl, cosine };

std::string_view mode_name(SimilarityMode mode);
std::optional<SimilarityMode> parse_mode(std::string_view name);

// Reference matrix prepared for maximum-inner-product queries. KL mode stores
// log(smooth(P, epsilon)) per row so that <q', row> recovers the
// cross-entropy term of the KL divergence; cosine mode stores L2-normalized
// rows.
struct SearchIndex {
    SimilarityMode mode = SimilarityMode::kl;
    std::size_t k = 0;
    double epsilon = 1e-6;
    std::string model_checksum;
    std::vector<std::string> ids;
    std::vector<std::vector<double>> rows;

    // Optional coarse partition for approximate queries.
    struct Coarse {
        std::vector<std::vector<double>> cell_centroids;
        std::vector<std::vector<std::uint32_t>> cell_members;
    };
    std::optional<Coarse> coarse;
};

struct SearchResult {
    std::string project_id;
    double score = 0.0;
    std::size_t rank = 0;
};

SearchIndex build_index(const DistributionSet& distributions, SimilarityMode mode, double epsilon);

// Exact top-n scan. KL mode smooths the query with the given epsilon; cosine
// mode normalizes it. Ties break toward the lexicographically smaller id.
std::vector<SearchResult> query(const SearchIndex& index, const ProjectDistribution& q,
                                std::size_t top_n, double epsilon);
std::vector<SearchResult> query(const SearchIndex& index, const ProjectDistribution& q,
                                std::size_t top_n);

// The query vector actually scored against rows (smoothed or normalized).
std::vector<double> prepare_query_vector(const SearchIndex& index, const ProjectDistribution& q,
                                         double epsilon);

// D_KL(p || r) = sum p_c log(p_c / r_c), natural log, 0*log 0 = 0.
// Throws DomainError when any r component is <= 0.
double kl_divergence(std::span<const double> p, std::span<const double> r);

// Coarse-partition approximation: references are grouped into ~sqrt(N) cells
// by spherical k-means; a query scans only the `probes` nearest cells.
void build_coarse_partition(SearchIndex& index, std::uint64_t seed);
std::vector<SearchResult> query_approx(const SearchIndex& index, const ProjectDistribution& q,
                                       std::size_t top_n, double epsilon, std::size_t probes);

// File format: header "mode K N epsilon checksum"; N rows "id v1 ... vK".
std::string write_index(const SearchIndex& index);
SearchIndex read_index(const std::string& contents, const std::string& source_name = "<string>");
SearchIndex read_index_file(const std::string& path);

}  // namespace reposim
