#include "reposim/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reposim/errors.hpp"
#include "reposim/io_util.hpp"
#include "reposim/kernels.hpp"

namespace reposim {

const std::vector<double>* EmbeddingModel::find_ngram(const std::string& gram) const {
    if (buckets > 0) {
        auto it = ngram_buckets.find(io::fnv1a64(gram) % buckets);
        return it == ngram_buckets.end() ? nullptr : &it->second;
    }
    auto it = ngrams.find(gram);
    return it == ngrams.end() ? nullptr : &it->second;
}

namespace {

std::vector<double> parse_vector(const std::vector<std::string_view>& fields, std::size_t offset,
                                 std::size_t dim, const std::string& source, std::size_t lineno) {
    if (fields.size() != offset + dim)
        throw DimensionMismatch(source + ":" + std::to_string(lineno) + ": expected " +
                                std::to_string(dim) + " components, got " +
                                std::to_string(fields.size() - offset));
    std::vector<double> v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        bool ok = false;
        v[i] = io::parse_double(fields[offset + i], ok);
        if (!ok || !std::isfinite(v[i]))
            throw FormatError(source + ":" + std::to_string(lineno) + ": bad float '" +
                              std::string(fields[offset + i]) + "'");
    }
    return v;
}

}  // namespace

EmbeddingModel load_embedding_model(const std::string& contents, const std::string& source_name) {
    std::istringstream in(contents);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError(source_name + ":" + std::to_string(lineno) + ": " + what);
    };

    ++lineno;
    if (!std::getline(in, line)) fail("empty model file");
    auto header = io::split_ws(line);
    if (header.size() != 5 && header.size() != 6)
        fail("header must be: dim min_n max_n vocab_count ngram_count [buckets]");
    bool ok = false;
    EmbeddingModel model;
    std::uint64_t fields[6] = {0, 0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < header.size(); ++i) {
        fields[i] = io::parse_u64(header[i], ok);
        if (!ok) fail("bad header field '" + std::string(header[i]) + "'");
    }
    model.dim = fields[0];
    model.min_n = fields[1];
    model.max_n = fields[2];
    std::uint64_t vocab_count = fields[3];
    std::uint64_t ngram_count = fields[4];
    model.buckets = header.size() == 6 ? fields[5] : 0;
    if (model.dim == 0) fail("dim must be positive");
    if (model.min_n < 1 || model.min_n > model.max_n)
        fail("ngram range must satisfy 1 <= min_n <= max_n");

    for (std::uint64_t i = 0; i < vocab_count; ++i) {
        ++lineno;
        if (!std::getline(in, line)) fail("unexpected end of file in vocab section");
        auto parts = io::split_ws(line);
        if (parts.empty()) fail("blank vocab line");
        std::string token(parts[0]);
        model.vocab[token] = parse_vector(parts, 1, model.dim, source_name, lineno);
    }
    for (std::uint64_t i = 0; i < ngram_count; ++i) {
        ++lineno;
        if (!std::getline(in, line)) fail("unexpected end of file in ngram section");
        auto parts = io::split_ws(line);
        if (parts.empty() || parts[0].size() < 2 || parts[0][0] != '#')
            fail("ngram lines must start with #");
        std::string key(parts[0].substr(1));
        auto vec = parse_vector(parts, 1, model.dim, source_name, lineno);
        if (model.buckets > 0) {
            std::uint64_t id = io::parse_u64(key, ok);
            if (!ok) fail("bucketed model requires integer ngram ids");
            if (id >= model.buckets) fail("bucket id out of range");
            model.ngram_buckets[id] = std::move(vec);
        } else {
            model.ngrams[key] = std::move(vec);
        }
    }
    return model;
}

EmbeddingModel load_embedding_model_file(const std::string& path) {
    return load_embedding_model(io::read_file(path), path);
}

std::string write_embedding_model(const EmbeddingModel& model) {
    std::ostringstream out;
    std::size_t ngram_count = model.buckets > 0 ? model.ngram_buckets.size() : model.ngrams.size();
    out << model.dim << ' ' << model.min_n << ' ' << model.max_n << ' ' << model.vocab.size()
        << ' ' << ngram_count;
    if (model.buckets > 0) out << ' ' << model.buckets;
    out << '\n';

    std::vector<std::string> keys;
    keys.reserve(model.vocab.size());
    for (const auto& [k, _] : model.vocab) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (const auto& k : keys) {
        out << k;
        for (double v : model.vocab.at(k)) out << ' ' << io::format_double(v);
        out << '\n';
    }
    if (model.buckets > 0) {
        std::vector<std::uint64_t> ids;
        ids.reserve(model.ngram_buckets.size());
        for (const auto& [id, _] : model.ngram_buckets) ids.push_back(id);
        std::sort(ids.begin(), ids.end());
        for (std::uint64_t id : ids) {
            out << '#' << id;
            for (double v : model.ngram_buckets.at(id)) out << ' ' << io::format_double(v);
            out << '\n';
        }
    } else {
        std::vector<std::string> grams;
        grams.reserve(model.ngrams.size());
        for (const auto& [g, _] : model.ngrams) grams.push_back(g);
        std::sort(grams.begin(), grams.end());
        for (const auto& g : grams) {
            out << '#' << g;
            for (double v : model.ngrams.at(g)) out << ' ' << io::format_double(v);
            out << '\n';
        }
    }
    return std::move(out).str();
}

std::optional<std::vector<double>> embed(const EmbeddingModel& model,
                                         const std::string& subtoken) {
    if (auto it = model.vocab.find(subtoken); it != model.vocab.end()) return it->second;

    std::string marked = "<" + subtoken + ">";
    std::vector<double> sum(model.dim, 0.0);
    std::size_t found = 0;
    for (std::size_t n = model.min_n; n <= model.max_n && n <= marked.size(); ++n) {
        for (std::size_t start = 0; start + n <= marked.size(); ++start) {
            const std::vector<double>* vec = model.find_ngram(marked.substr(start, n));
            if (!vec) continue;
            kernels::add(sum, *vec);
            ++found;
        }
    }
    if (found == 0) return std::nullopt;
    kernels::scale(sum, 1.0 / static_cast<double>(found));
    return sum;
}

}  // namespace reposim
