#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace reposim {

// Pretrained subword-aware embedding model. Vocabulary tokens map straight to
// vectors; anything else is composed from character n-gram vectors of the
// boundary-marked form "<token>". In bucketed mode n-gram keys are FNV-1a
// hashes modulo the bucket count instead of the literal n-gram strings.
struct EmbeddingModel {
    std::size_t dim = 0;
    std::size_t min_n = 3;
    std::size_t max_n = 6;
    std::uint64_t buckets = 0;  // 0: literal n-gram keys
    std::unordered_map<std::string, std::vector<double>> vocab;
    std::unordered_map<std::string, std::vector<double>> ngrams;  // literal mode
    std::unordered_map<std::uint64_t, std::vector<double>> ngram_buckets;  // bucketed mode

    const std::vector<double>* find_ngram(const std::string& gram) const;
};

// Text format:
//   dim min_n max_n vocab_count ngram_count [buckets]
//   <token> v1 ... v_dim            (vocab_count lines)
//   #<gram> v1 ... v_dim            (ngram_count lines; #<int> when bucketed)
EmbeddingModel load_embedding_model(const std::string& contents,
                                    const std::string& source_name = "<string>");
EmbeddingModel load_embedding_model_file(const std::string& path);

std::string write_embedding_model(const EmbeddingModel& model);

// Vocabulary vector, or the mean of the stored n-gram vectors of "<token>",
// or nullopt when nothing is known.
std::optional<std::vector<double>> embed(const EmbeddingModel& model, const std::string& subtoken);

}  // namespace reposim
