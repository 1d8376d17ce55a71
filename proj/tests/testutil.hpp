#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "reposim/embedding.hpp"
#include "reposim/token_stats.hpp"

namespace reposim::testutil {

std::filesystem::path fixture_dir();
std::filesystem::path corpus_dir();
std::vector<std::string> corpus_project_names();

// Tokenizes every fixture project once (cached).
const std::vector<TokenStats>& corpus_token_stats();

// Deterministic embedding model covering every sub-token of the fixture
// corpus: each token's vector comes from a generator seeded by the token's
// hash, so the model is reproducible without any training step.
EmbeddingModel make_corpus_embedding_model(std::size_t dim, std::uint64_t seed);

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& prefix);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
};

void write_file(const std::filesystem::path& p, const std::string& contents);

double adjusted_rand_index(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b);

// Tight clusters around mutually orthogonal unit anchors (pairwise angle 90
// degrees); noise is the stddev of the Gaussian jitter before renormalizing.
std::vector<std::vector<double>> planted_clusters(std::size_t n_clusters,
                                                  std::size_t points_per_cluster, std::size_t dim,
                                                  double noise, std::uint64_t seed,
                                                  std::vector<std::uint32_t>* truth = nullptr);

// Random probability vector (normalized exponentials), deterministic per seed.
std::vector<double> random_distribution(std::size_t k, std::uint64_t seed);

}  // namespace reposim::testutil
