#include "reposim/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "reposim/errors.hpp"
#include "reposim/io_util.hpp"
#include "reposim/kernels.hpp"
#include "reposim/rng.hpp"

namespace reposim {

namespace {

std::vector<std::vector<double>> normalized_copy(const std::vector<std::vector<double>>& points) {
    std::vector<std::vector<double>> out = points;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!kernels::normalize(out[i]))
            throw ZeroVector("input vector " + std::to_string(i) + " has zero norm");
    }
    return out;
}

std::vector<std::vector<double>> kmeanspp_init(const std::vector<std::vector<double>>& x,
                                               std::size_t k, std::mt19937_64& gen) {
    const std::size_t n = x.size();
    std::vector<std::vector<double>> centroids;
    centroids.reserve(k);
    std::vector<bool> chosen(n, false);

    std::size_t first = rng::uniform_index(gen, n);
    centroids.push_back(x[first]);
    chosen[first] = true;

    std::vector<double> best_dot(n);
    for (std::size_t i = 0; i < n; ++i) best_dot[i] = kernels::dot(x[i], centroids[0]);

    while (centroids.size() < k) {
        std::vector<double> weight(n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double d = std::max(0.0, 1.0 - best_dot[i]);
            weight[i] = chosen[i] ? 0.0 : d * d;
            total += weight[i];
        }
        std::size_t pick = n;
        if (total > 0.0) {
            double r = rng::uniform01(gen) * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                acc += weight[i];
                if (r < acc && weight[i] > 0.0) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) {  // numeric edge: r landed on the upper boundary
                for (std::size_t i = n; i-- > 0;) {
                    if (weight[i] > 0.0) {
                        pick = i;
                        break;
                    }
                }
            }
        }
        if (pick == n) {
            // All remaining mass is zero (duplicates of chosen centroids);
            // take the lowest unchosen index.
            for (std::size_t i = 0; i < n; ++i) {
                if (!chosen[i]) {
                    pick = i;
                    break;
                }
            }
        }
        chosen[pick] = true;
        centroids.push_back(x[pick]);
        for (std::size_t i = 0; i < n; ++i)
            best_dot[i] = std::max(best_dot[i], kernels::dot(x[i], centroids.back()));
    }
    return centroids;
}

std::uint32_t nearest_centroid(const std::vector<double>& v,
                               const std::vector<std::vector<double>>& centroids) {
    std::uint32_t best = 0;
    double best_dot = -std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        double d = kernels::dot(v, centroids[c]);
        if (d > best_dot) {
            best_dot = d;
            best = static_cast<std::uint32_t>(c);
        }
    }
    return best;
}

// Argmax assignment plus empty-cluster repair: each empty cluster (ascending
// id) is reseeded with the worst-fit point drawn from a cluster that keeps at
// least one member, and that point moves to the reseeded cluster.
void assign_with_repair(const std::vector<std::vector<double>>& x,
                        std::vector<std::vector<double>>& centroids,
                        std::vector<std::uint32_t>& labels) {
    const std::size_t n = x.size();
    const std::size_t k = centroids.size();
    labels.resize(n);
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = nearest_centroid(x[i], centroids);
        ++sizes[labels[i]];
    }
    for (std::uint32_t e = 0; e < k; ++e) {
        if (sizes[e] != 0) continue;
        std::size_t worst = n;
        double worst_dot = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n; ++i) {
            if (sizes[labels[i]] < 2) continue;
            double d = kernels::dot(x[i], centroids[labels[i]]);
            if (d < worst_dot) {
                worst_dot = d;
                worst = i;
            }
        }
        if (worst == n) break;  // unreachable while n >= k
        --sizes[labels[worst]];
        labels[worst] = e;
        sizes[e] = 1;
        centroids[e] = x[worst];
    }
}

void update_centroids(const std::vector<std::vector<double>>& x,
                      const std::vector<std::uint32_t>& labels,
                      std::vector<std::vector<double>>& centroids) {
    const std::size_t k = centroids.size();
    const std::size_t dim = x.empty() ? 0 : x[0].size();
    std::vector<std::vector<double>> sums(k, std::vector<double>(dim, 0.0));
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        kernels::add(sums[labels[i]], x[i]);
        ++counts[labels[i]];
    }
    for (std::size_t c = 0; c < k; ++c) {
        if (counts[c] == 0) continue;  // repair keeps clusters populated
        if (kernels::normalize(sums[c])) centroids[c] = std::move(sums[c]);
    }
}

double objective(const std::vector<std::vector<double>>& x,
                 const std::vector<std::uint32_t>& labels,
                 const std::vector<std::vector<double>>& centroids) {
    double total = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) total += kernels::dot(x[i], centroids[labels[i]]);
    return total;
}

}  // namespace

KMeansFit fit_spherical_kmeans(const std::vector<std::vector<double>>& points, std::size_t k,
                               std::size_t max_iter, std::uint64_t seed) {
    if (k < 1) throw InsufficientPoints("k must be at least 1");
    if (points.size() < k)
        throw InsufficientPoints("need at least " + std::to_string(k) + " points, got " +
                                 std::to_string(points.size()));
    std::vector<std::vector<double>> x = normalized_copy(points);
    std::mt19937_64 gen(seed);

    KMeansFit fit;
    fit.centroids = kmeanspp_init(x, k, gen);
    assign_with_repair(x, fit.centroids, fit.labels);

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        update_centroids(x, fit.labels, fit.centroids);
        fit.report.objective_trace.push_back(objective(x, fit.labels, fit.centroids));

        std::vector<std::uint32_t> next;
        assign_with_repair(x, fit.centroids, next);
        if (next == fit.labels) {
            fit.report.converged = true;
            break;
        }
        fit.labels = std::move(next);
    }
    fit.report.iterations = fit.report.objective_trace.size();
    return fit;
}

KeyedKMeansResult spherical_kmeans(
    const std::vector<std::pair<std::string, std::vector<double>>>& points, std::size_t k,
    std::size_t max_iter, std::uint64_t seed) {
    std::vector<std::vector<double>> raw;
    raw.reserve(points.size());
    for (const auto& [_, v] : points) raw.push_back(v);

    KMeansFit fit = fit_spherical_kmeans(raw, k, max_iter, seed);

    KeyedKMeansResult result;
    result.model.k = k;
    result.model.dim = raw.empty() ? 0 : raw[0].size();
    result.model.centroids = std::move(fit.centroids);
    for (std::size_t i = 0; i < points.size(); ++i)
        result.model.assignment[points[i].first] = fit.labels[i];
    result.report = std::move(fit.report);
    return result;
}

namespace {

double dispersion(const std::vector<std::vector<double>>& points, const KMeansFit& fit) {
    std::vector<std::vector<double>> x = normalized_copy(points);
    double w = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        w += 1.0 - kernels::dot(x[i], fit.centroids[fit.labels[i]]);
    return w;
}

}  // namespace

std::map<std::size_t, GapPoint> gap_statistic(const std::vector<std::vector<double>>& points,
                                              const std::vector<std::size_t>& k_candidates,
                                              std::size_t b_refs, std::uint64_t seed,
                                              std::size_t max_iter) {
    if (k_candidates.empty()) throw InsufficientPoints("no K candidates");
    if (b_refs < 1) throw InsufficientPoints("need at least one reference sample");
    const std::size_t n = points.size();
    const std::size_t dim = n > 0 ? points[0].size() : 0;
    constexpr double kTinyW = 1e-300;

    std::map<std::size_t, GapPoint> out;
    for (std::size_t k : k_candidates) {
        KMeansFit data_fit = fit_spherical_kmeans(points, k, max_iter, rng::mix_seed(seed, k, 0));
        double log_w_data = std::log(std::max(dispersion(points, data_fit), kTinyW));

        std::vector<double> log_w_ref(b_refs);
        for (std::size_t b = 0; b < b_refs; ++b) {
            std::mt19937_64 gen(rng::mix_seed(seed, k, b + 1));
            std::vector<std::vector<double>> ref(n);
            for (auto& v : ref) {
                v = rng::gaussian_vector(gen, dim);
                while (!kernels::normalize(v)) v = rng::gaussian_vector(gen, dim);
            }
            KMeansFit ref_fit = fit_spherical_kmeans(ref, k, max_iter, gen());
            log_w_ref[b] = std::log(std::max(dispersion(ref, ref_fit), kTinyW));
        }
        double mean = 0.0;
        for (double lw : log_w_ref) mean += lw;
        mean /= static_cast<double>(b_refs);
        double var = 0.0;
        for (double lw : log_w_ref) var += (lw - mean) * (lw - mean);
        var /= static_cast<double>(b_refs);

        GapPoint g;
        g.gap = mean - log_w_data;
        g.se = std::sqrt(var) * std::sqrt(1.0 + 1.0 / static_cast<double>(b_refs));
        out[k] = g;
    }
    return out;
}

std::size_t select_k(const std::map<std::size_t, GapPoint>& gaps) {
    if (gaps.empty()) throw InsufficientPoints("empty gap table");
    for (auto it = gaps.begin(); it != gaps.end(); ++it) {
        auto next = std::next(it);
        if (next == gaps.end()) return it->first;
        if (it->second.gap >= next->second.gap - next->second.se) return it->first;
    }
    return gaps.rbegin()->first;
}

std::map<std::string, std::uint32_t> assign_tokens(
    const std::vector<std::pair<std::string, std::vector<double>>>& embeddings,
    const std::vector<std::vector<double>>& centroids) {
    std::map<std::string, std::uint32_t> out;
    for (const auto& [token, vec] : embeddings) {
        std::vector<double> v = vec;
        if (!kernels::normalize(v)) throw ZeroVector("zero embedding for sub-token " + token);
        out[token] = nearest_centroid(v, centroids);
    }
    return out;
}

std::vector<std::string> representatives(std::uint32_t cluster_id,
                                         const std::map<std::string, std::uint32_t>& assignment,
                                         const std::map<std::string, std::uint64_t>& corpus_frequencies,
                                         const std::vector<std::vector<double>>& centroids,
                                         std::size_t m, const EmbeddingLookup& embedding_of) {
    std::vector<std::string> members;
    for (const auto& [token, cluster] : assignment)
        if (cluster == cluster_id) members.push_back(token);
    if (members.empty() || m == 0) return {};

    const std::size_t half = (m + 1) / 2;

    std::vector<std::pair<std::uint64_t, std::string>> by_freq;
    by_freq.reserve(members.size());
    for (const auto& t : members) {
        auto it = corpus_frequencies.find(t);
        by_freq.emplace_back(it == corpus_frequencies.end() ? 0 : it->second, t);
    }
    std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    std::vector<std::pair<double, std::string>> by_cos;
    if (embedding_of && cluster_id < centroids.size()) {
        for (const auto& t : members) {
            auto vec = embedding_of(t);
            if (!vec) continue;
            std::vector<double> v = std::move(*vec);
            if (!kernels::normalize(v)) continue;
            by_cos.emplace_back(kernels::dot(v, centroids[cluster_id]), t);
        }
        std::sort(by_cos.begin(), by_cos.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
    }

    std::vector<std::string> out;
    auto push_unique = [&](const std::string& t) {
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    };
    for (std::size_t i = 0; i < by_freq.size() && i < half; ++i) push_unique(by_freq[i].second);
    for (std::size_t i = 0; i < by_cos.size() && i < half; ++i) push_unique(by_cos[i].second);
    return out;
}

void compute_representatives(ClusterModel& model,
                             const std::map<std::string, std::uint64_t>& corpus_frequencies,
                             std::size_t m, const EmbeddingLookup& embedding_of) {
    model.representatives.clear();
    for (std::uint32_t c = 0; c < model.k; ++c) {
        auto reps =
            representatives(c, model.assignment, corpus_frequencies, model.centroids, m, embedding_of);
        if (!reps.empty()) model.representatives[c] = std::move(reps);
    }
}

std::string model_checksum(const ClusterModel& model) {
    std::ostringstream canon;
    canon << model.k << ' ' << model.dim << '\n';
    for (const auto& c : model.centroids) {
        for (double v : c) canon << io::format_double(v) << ' ';
        canon << '\n';
    }
    for (const auto& [token, cluster] : model.assignment) canon << token << ' ' << cluster << '\n';
    return io::to_hex(io::fnv1a64(canon.str()));
}

std::string write_cluster_model(const ClusterModel& model) {
    std::ostringstream out;
    out << model.k << ' ' << model.dim << '\n';
    for (const auto& c : model.centroids) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << io::format_double(c[i]);
        }
        out << '\n';
    }
    for (const auto& [token, cluster] : model.assignment) out << token << ' ' << cluster << '\n';
    for (const auto& [cluster, label] : model.labels) out << '@' << cluster << ' ' << label << '\n';
    return std::move(out).str();
}

ClusterModel read_cluster_model(const std::string& contents, const std::string& source_name) {
    std::istringstream in(contents);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError(source_name + ":" + std::to_string(lineno) + ": " + what);
    };

    ++lineno;
    if (!std::getline(in, line)) fail("empty cluster model file");
    auto header = io::split_ws(line);
    bool ok = false;
    if (header.size() != 2) fail("header must be: K dim");
    ClusterModel model;
    model.k = io::parse_u64(header[0], ok);
    if (!ok || model.k == 0) fail("bad K");
    model.dim = io::parse_u64(header[1], ok);
    if (!ok || model.dim == 0) fail("bad dim");

    model.centroids.resize(model.k);
    for (std::size_t c = 0; c < model.k; ++c) {
        ++lineno;
        if (!std::getline(in, line)) fail("unexpected end of file in centroid section");
        auto parts = io::split_ws(line);
        if (parts.size() != model.dim)
            throw DimensionMismatch(source_name + ":" + std::to_string(lineno) +
                                    ": centroid has wrong dimension");
        model.centroids[c].resize(model.dim);
        for (std::size_t i = 0; i < model.dim; ++i) {
            model.centroids[c][i] = io::parse_double(parts[i], ok);
            if (!ok || !std::isfinite(model.centroids[c][i])) fail("bad centroid component");
        }
        double norm = kernels::norm(model.centroids[c]);
        if (std::abs(norm - 1.0) > 1e-6) fail("centroid " + std::to_string(c) + " is not unit norm");
    }
    while (std::getline(in, line)) {
        ++lineno;
        auto parts = io::split_ws(line);
        if (parts.empty()) continue;
        if (parts[0][0] == '@') {
            std::uint64_t cluster = io::parse_u64(parts[0].substr(1), ok);
            if (!ok || cluster >= model.k) fail("bad label cluster id");
            std::string label;
            for (std::size_t i = 1; i < parts.size(); ++i) {
                if (i > 1) label += ' ';
                label += std::string(parts[i]);
            }
            model.labels[static_cast<std::uint32_t>(cluster)] = label;
            continue;
        }
        if (parts.size() != 2) fail("assignment lines must be: subtoken cluster_id");
        std::uint64_t cluster = io::parse_u64(parts[1], ok);
        if (!ok || cluster >= model.k) fail("cluster id out of range");
        model.assignment[std::string(parts[0])] = static_cast<std::uint32_t>(cluster);
    }
    return model;
}

ClusterModel read_cluster_model_file(const std::string& path) {
    return read_cluster_model(io::read_file(path), path);
}

}  // namespace reposim
