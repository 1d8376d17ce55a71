#include "reposim/search_index.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "reposim/errors.hpp"
#include "reposim/io_util.hpp"
#include "reposim/kernels.hpp"

namespace reposim {

std::string_view mode_name(SimilarityMode mode) {
    return mode == SimilarityMode::kl ? "kl" : "cosine";
}

std::optional<SimilarityMode> parse_mode(std::string_view name) {
    if (name == "kl") return SimilarityMode::kl;
    if (name == "cosine") return SimilarityMode::cosine;
    return std::nullopt;
}

SearchIndex build_index(const DistributionSet& distributions, SimilarityMode mode,
                        double epsilon) {
    if (distributions.items.empty()) throw EmptyIndex("no reference distributions");
    SearchIndex index;
    index.mode = mode;
    index.k = distributions.k;
    index.epsilon = epsilon;
    index.model_checksum = distributions.model_checksum;
    index.ids.reserve(distributions.items.size());
    index.rows.reserve(distributions.items.size());

    for (const ProjectDistribution& d : distributions.items) {
        if (d.probs.size() != index.k)
            throw DimensionMismatch("distribution '" + d.project_id + "' has K=" +
                                    std::to_string(d.probs.size()) + ", index has K=" +
                                    std::to_string(index.k));
        std::vector<double> row;
        if (mode == SimilarityMode::kl) {
            ProjectDistribution s = smooth(d, epsilon);
            row = std::move(s.probs);
            for (double& v : row) v = std::log(v);
        } else {
            row = d.probs;
            if (!kernels::normalize(row))
                throw ZeroVector("distribution '" + d.project_id + "' is all zero");
        }
        index.ids.push_back(d.project_id);
        index.rows.push_back(std::move(row));
    }
    return index;
}

std::vector<double> prepare_query_vector(const SearchIndex& index, const ProjectDistribution& q,
                                         double epsilon) {
    if (q.probs.size() != index.k)
        throw DimensionMismatch("query has K=" + std::to_string(q.probs.size()) +
                                ", index has K=" + std::to_string(index.k));
    if (index.mode == SimilarityMode::kl) return smooth(q, epsilon).probs;
    std::vector<double> v = q.probs;
    if (!kernels::normalize(v)) throw ZeroVector("query distribution is all zero");
    return v;
}

namespace {

struct Scored {
    double score;
    std::uint32_t row;
};

std::vector<SearchResult> top_n_results(const SearchIndex& index, std::vector<Scored>& scored,
                                        std::size_t top_n) {
    auto better = [&](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        return index.ids[a.row] < index.ids[b.row];
    };
    std::size_t keep = std::min(top_n, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep),
                      scored.end(), better);
    std::vector<SearchResult> out;
    out.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i)
        out.push_back({index.ids[scored[i].row], scored[i].score, i + 1});
    return out;
}

}  // namespace

std::vector<SearchResult> query(const SearchIndex& index, const ProjectDistribution& q,
                                std::size_t top_n, double epsilon) {
    std::vector<double> qv = prepare_query_vector(index, q, epsilon);
    std::vector<Scored> scored;
    scored.reserve(index.rows.size());
    for (std::uint32_t i = 0; i < index.rows.size(); ++i)
        scored.push_back({kernels::dot(qv, index.rows[i]), i});
    return top_n_results(index, scored, top_n);
}

std::vector<SearchResult> query(const SearchIndex& index, const ProjectDistribution& q,
                                std::size_t top_n) {
    return query(index, q, top_n, index.epsilon);
}

double kl_divergence(std::span<const double> p, std::span<const double> r) {
    if (p.size() != r.size()) throw DimensionMismatch("KL divergence needs equal lengths");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (r[i] <= 0.0) throw DomainError("reference distribution has a non-positive component");
        if (p[i] == 0.0) continue;  // 0 * log 0 = 0
        d += p[i] * std::log(p[i] / r[i]);
    }
    return d;
}

void build_coarse_partition(SearchIndex& index, std::uint64_t seed) {
    const std::size_t n = index.rows.size();
    std::size_t cells = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    cells = std::max<std::size_t>(1, std::min(cells, n));

    // Partitioning is geometric only, so rows are normalized for the fit
    // regardless of mode; scoring still uses the original rows.
    KMeansFit fit = fit_spherical_kmeans(index.rows, cells, 100, seed);
    SearchIndex::Coarse coarse;
    coarse.cell_centroids = std::move(fit.centroids);
    coarse.cell_members.resize(cells);
    for (std::uint32_t i = 0; i < n; ++i)
        coarse.cell_members[fit.labels[i]].push_back(i);
    index.coarse = std::move(coarse);
}

std::vector<SearchResult> query_approx(const SearchIndex& index, const ProjectDistribution& q,
                                       std::size_t top_n, double epsilon, std::size_t probes) {
    if (!index.coarse) throw Error("coarse partition not built");
    std::vector<double> qv = prepare_query_vector(index, q, epsilon);

    std::vector<double> qn = qv;
    if (!kernels::normalize(qn)) throw ZeroVector("query vector is all zero");

    const auto& coarse = *index.coarse;
    std::vector<std::pair<double, std::uint32_t>> cell_rank;
    cell_rank.reserve(coarse.cell_centroids.size());
    for (std::uint32_t c = 0; c < coarse.cell_centroids.size(); ++c)
        cell_rank.emplace_back(kernels::dot(qn, coarse.cell_centroids[c]), c);
    std::sort(cell_rank.begin(), cell_rank.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    std::vector<Scored> scored;
    std::size_t probe_count = std::min(probes, cell_rank.size());
    for (std::size_t p = 0; p < probe_count; ++p) {
        for (std::uint32_t row : coarse.cell_members[cell_rank[p].second])
            scored.push_back({kernels::dot(qv, index.rows[row]), row});
    }
    return top_n_results(index, scored, top_n);
}

std::string write_index(const SearchIndex& index) {
    std::ostringstream out;
    out << mode_name(index.mode) << ' ' << index.k << ' ' << index.rows.size() << ' '
        << io::format_double(index.epsilon) << ' ' << index.model_checksum << '\n';
    for (std::size_t i = 0; i < index.rows.size(); ++i) {
        out << index.ids[i];
        for (double v : index.rows[i]) out << ' ' << io::format_double(v);
        out << '\n';
    }
    return std::move(out).str();
}

SearchIndex read_index(const std::string& contents, const std::string& source_name) {
    std::istringstream in(contents);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError(source_name + ":" + std::to_string(lineno) + ": " + what);
    };

    ++lineno;
    if (!std::getline(in, line)) fail("empty index file");
    auto header = io::split_ws(line);
    if (header.size() != 5) fail("header must be: mode K N epsilon checksum");
    SearchIndex index;
    auto mode = parse_mode(header[0]);
    if (!mode) fail("unknown mode '" + std::string(header[0]) + "'");
    index.mode = *mode;
    bool ok = false;
    index.k = io::parse_u64(header[1], ok);
    if (!ok || index.k == 0) fail("bad K");
    std::uint64_t n = io::parse_u64(header[2], ok);
    if (!ok) fail("bad N");
    index.epsilon = io::parse_double(header[3], ok);
    if (!ok || !(index.epsilon > 0.0)) fail("bad epsilon");
    index.model_checksum = std::string(header[4]);

    for (std::uint64_t i = 0; i < n; ++i) {
        ++lineno;
        if (!std::getline(in, line)) fail("unexpected end of file in row section");
        auto parts = io::split_ws(line);
        if (parts.size() != 1 + index.k)
            throw DimensionMismatch(source_name + ":" + std::to_string(lineno) +
                                    ": row has wrong dimension");
        std::vector<double> row(index.k);
        for (std::size_t c = 0; c < index.k; ++c) {
            row[c] = io::parse_double(parts[1 + c], ok);
            if (!ok || !std::isfinite(row[c])) fail("bad row component");
        }
        if (index.mode == SimilarityMode::kl) {
            for (double v : row)
                if (v > 0.0) fail("KL rows must be log-probabilities (components <= 0)");
        }
        index.ids.push_back(std::string(parts[0]));
        index.rows.push_back(std::move(row));
    }
    if (index.rows.empty()) throw EmptyIndex(source_name + ": index has no rows");
    return index;
}

SearchIndex read_index_file(const std::string& path) {
    return read_index(io::read_file(path), path);
}

}  // namespace reposim
