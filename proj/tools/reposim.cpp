// reposim: represent software projects as probability distributions over
// semantic clusters of identifier sub-tokens and search for the most similar
// reference projects.
//
// Pipeline stages are separate subcommands over plain-text artifact files:
//   tokenize -> cluster-fit (or assign) -> distributions -> build-index -> query

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reposim/clustering.hpp"
#include "reposim/distribution.hpp"
#include "reposim/embedding.hpp"
#include "reposim/errors.hpp"
#include "reposim/explain.hpp"
#include "reposim/io_util.hpp"
#include "reposim/kernels.hpp"
#include "reposim/search_index.hpp"
#include "reposim/token_stats.hpp"

namespace fs = std::filesystem;
using namespace reposim;
using nlohmann::json;

namespace {

constexpr int kExitMissingArtifact = 2;
constexpr int kExitEmptyProject = 3;
constexpr int kExitNoKnownTokens = 4;
constexpr int kExitChecksumMismatch = 5;

struct GlobalOptions {
    std::uint64_t seed = 42;
    bool verbose = false;
};

struct TokenizerFlags {
    std::uint64_t max_file_size = 1 << 20;
    std::vector<std::string> ignore;
};

void add_tokenizer_flags(CLI::App* cmd, TokenizerFlags& flags) {
    cmd->add_option("--max-file-size", flags.max_file_size,
                    "Skip files larger than this many bytes (default 1 MiB)");
    cmd->add_option("--ignore", flags.ignore,
                    "Additional directory names to skip (repeatable)");
}

TokenizeOptions make_tokenize_options(const TokenizerFlags& flags, const GlobalOptions& global) {
    TokenizeOptions opt;
    opt.max_file_size = flags.max_file_size;
    for (const auto& name : flags.ignore) opt.ignore_dirs.push_back(name);
    if (global.verbose) opt.log = &std::cerr;
    return opt;
}

std::string project_id_from_dir(const fs::path& dir) {
    fs::path clean = dir;
    clean.remove_filename();
    std::string id = dir.filename().string();
    if (id.empty()) id = dir.parent_path().filename().string();
    if (id.empty()) throw Error("cannot derive a project id from " + dir.string());
    if (id.find_first_of(" \t\n") != std::string::npos)
        throw Error("project directory names may not contain whitespace: " + id);
    return id;
}

std::vector<TokenStats> read_token_stats_files(const std::vector<std::string>& paths) {
    std::vector<TokenStats> all;
    for (const auto& p : paths) {
        auto part = read_token_stats(io::read_file(p), p);
        all.insert(all.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return all;
}

std::map<std::string, std::uint64_t> corpus_frequencies(const std::vector<TokenStats>& stats) {
    std::map<std::string, std::uint64_t> freq;
    for (const auto& s : stats)
        for (const auto& [token, count] : s.counts) freq[token] += count;
    return freq;
}

// Embeds every distinct sub-token of the corpus, composing OOV vectors from
// n-grams; sub-tokens with no known n-gram are dropped.
std::vector<std::pair<std::string, std::vector<double>>> embed_corpus(
    const EmbeddingModel& model, const std::map<std::string, std::uint64_t>& freq,
    const GlobalOptions& global) {
    std::vector<std::pair<std::string, std::vector<double>>> out;
    std::size_t dropped = 0;
    for (const auto& [token, _] : freq) {
        auto vec = embed(model, token);
        if (!vec) {
            ++dropped;
            continue;
        }
        bool zero = true;
        for (double v : *vec) zero = zero && v == 0.0;
        if (zero) {
            ++dropped;
            continue;
        }
        out.emplace_back(token, std::move(*vec));
    }
    if (global.verbose)
        std::cerr << "embedded " << out.size() << " sub-tokens, dropped " << dropped
                  << " with no known n-gram\n";
    return out;
}

void parse_label_file(const std::string& path, ClusterModel& model) {
    std::istringstream in(io::read_file(path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto parts = io::split_ws(line);
        if (parts.empty() || parts[0][0] == '#') continue;
        if (parts[0][0] != '@' || parts.size() < 2)
            throw FormatError(path + ":" + std::to_string(lineno) +
                              ": label lines look like: @<cluster> <text>");
        bool ok = false;
        std::uint64_t cluster = io::parse_u64(parts[0].substr(1), ok);
        if (!ok || cluster >= model.k)
            throw FormatError(path + ":" + std::to_string(lineno) + ": bad cluster id");
        std::string label;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (i > 1) label += ' ';
            label += std::string(parts[i]);
        }
        model.labels[static_cast<std::uint32_t>(cluster)] = label;
    }
}

void require_checksum_match(const std::string& expected, const std::string& actual,
                            const std::string& what) {
    if (expected != actual)
        throw ChecksumMismatch(what + ": cluster model checksum " + actual +
                               " does not match expected " + expected);
}

// ---------------------------------------------------------------------------
// tokenize

struct TokenizeArgs {
    std::string input;
    std::string output;
    TokenizerFlags flags;
};

int cmd_tokenize(const TokenizeArgs& args, const GlobalOptions& global) {
    TokenizeOptions opt = make_tokenize_options(args.flags, global);
    std::vector<TokenStats> all;
    fs::path input(args.input);
    std::error_code ec;
    if (fs::is_directory(input, ec)) {
        all.push_back(tokenize_project(input, project_id_from_dir(input), opt));
    } else if (fs::is_regular_file(input, ec)) {
        std::istringstream manifest(io::read_file(input));
        std::string line;
        while (std::getline(manifest, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            fs::path dir(line);
            all.push_back(tokenize_project(dir, project_id_from_dir(dir), opt));
        }
        if (all.empty()) throw EmptyProject("manifest " + args.input + " lists no projects");
    } else {
        throw IoError("no such file or directory: " + args.input);
    }
    io::atomic_write(args.output, write_token_stats(all));
    std::cout << "wrote " << all.size() << " project record(s) to " << args.output << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// cluster-fit

struct ClusterFitArgs {
    std::string model;
    std::vector<std::string> tokens;
    std::size_t k = 256;
    std::size_t max_iter = 100;
    std::size_t reps_m = 10;
    std::string labels;
    std::string output;
};

int cmd_cluster_fit(const ClusterFitArgs& args, const GlobalOptions& global) {
    EmbeddingModel emb = load_embedding_model_file(args.model);
    std::vector<TokenStats> stats = read_token_stats_files(args.tokens);
    auto freq = corpus_frequencies(stats);
    auto points = embed_corpus(emb, freq, global);

    KeyedKMeansResult fit = spherical_kmeans(points, args.k, args.max_iter, global.seed);
    if (!args.labels.empty()) parse_label_file(args.labels, fit.model);
    compute_representatives(fit.model, freq, args.reps_m,
                            [&](const std::string& t) { return embed(emb, t); });

    io::atomic_write(args.output, write_cluster_model(fit.model));
    std::cout << "fit K=" << fit.model.k << " on " << points.size() << " sub-tokens in "
              << fit.report.iterations << " iteration(s)"
              << (fit.report.converged ? "" : " (max_iter reached)") << ", objective "
              << io::format_double(fit.report.objective_trace.empty()
                                       ? 0.0
                                       : fit.report.objective_trace.back())
              << "\n"
              << "checksum " << model_checksum(fit.model) << " -> " << args.output << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// gap

struct GapArgs {
    std::string model;
    std::vector<std::string> tokens;
    std::size_t k_min = 2;
    std::size_t k_max = 8;
    std::size_t b = 10;
    std::size_t max_iter = 100;
};

int cmd_gap(const GapArgs& args, const GlobalOptions& global) {
    if (args.k_min < 1 || args.k_min > args.k_max) throw Error("need 1 <= k-min <= k-max");
    EmbeddingModel emb = load_embedding_model_file(args.model);
    std::vector<TokenStats> stats = read_token_stats_files(args.tokens);
    auto points_keyed = embed_corpus(emb, corpus_frequencies(stats), global);
    std::vector<std::vector<double>> points;
    points.reserve(points_keyed.size());
    for (auto& [_, v] : points_keyed) points.push_back(std::move(v));

    std::vector<std::size_t> candidates;
    for (std::size_t k = args.k_min; k <= args.k_max; ++k) candidates.push_back(k);
    auto gaps = gap_statistic(points, candidates, args.b, global.seed, args.max_iter);

    std::cout << "K gap se\n";
    for (const auto& [k, g] : gaps)
        std::cout << k << ' ' << io::format_double(g.gap) << ' ' << io::format_double(g.se)
                  << "\n";
    std::cout << "selected K = " << select_k(gaps) << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// assign

struct AssignArgs {
    std::string model;
    std::string cluster_model;
    std::vector<std::string> tokens;
    std::size_t reps_m = 10;
    std::string output;
};

int cmd_assign(const AssignArgs& args, const GlobalOptions& global) {
    EmbeddingModel emb = load_embedding_model_file(args.model);
    ClusterModel model = read_cluster_model_file(args.cluster_model);
    std::vector<TokenStats> stats = read_token_stats_files(args.tokens);
    auto freq = corpus_frequencies(stats);

    std::size_t added = 0, dropped = 0;
    std::vector<std::pair<std::string, std::vector<double>>> fresh;
    for (const auto& [token, _] : freq) {
        if (model.assignment.count(token)) continue;
        auto vec = embed(emb, token);
        if (!vec) {
            ++dropped;
            continue;
        }
        fresh.emplace_back(token, std::move(*vec));
    }
    auto assigned = assign_tokens(fresh, model.centroids);
    for (const auto& [token, cluster] : assigned) {
        model.assignment[token] = cluster;
        ++added;
    }
    compute_representatives(model, freq, args.reps_m,
                            [&](const std::string& t) { return embed(emb, t); });
    io::atomic_write(args.output, write_cluster_model(model));
    std::cout << "assigned " << added << " new sub-token(s), skipped " << dropped
              << " unknown; checksum " << model_checksum(model) << " -> " << args.output << "\n";
    (void)global;
    return 0;
}

// ---------------------------------------------------------------------------
// distributions

struct DistributionsArgs {
    std::string cluster_model;
    std::vector<std::string> tokens;
    std::string output;
};

int cmd_distributions(const DistributionsArgs& args) {
    ClusterModel model = read_cluster_model_file(args.cluster_model);
    std::vector<TokenStats> stats = read_token_stats_files(args.tokens);
    DistributionSet set;
    set.k = model.k;
    set.model_checksum = model_checksum(model);
    for (const TokenStats& s : stats) set.items.push_back(build_distribution(s, model));
    io::atomic_write(args.output, write_distributions(set));
    std::cout << "wrote " << set.items.size() << " distribution(s), K=" << set.k << " -> "
              << args.output << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// build-index

struct BuildIndexArgs {
    std::string distributions;
    std::string cluster_model;  // optional; verifies the checksum when given
    std::string mode = "kl";
    double epsilon = 1e-6;
    std::string output;
};

int cmd_build_index(const BuildIndexArgs& args) {
    DistributionSet set = read_distributions_file(args.distributions);
    if (!args.cluster_model.empty()) {
        ClusterModel model = read_cluster_model_file(args.cluster_model);
        require_checksum_match(set.model_checksum, model_checksum(model), args.distributions);
    }
    auto mode = parse_mode(args.mode);
    if (!mode) throw Error("mode must be kl or cosine");
    SearchIndex index = build_index(set, *mode, args.epsilon);
    io::atomic_write(args.output, write_index(index));
    std::cout << "indexed " << index.rows.size() << " project(s), mode=" << mode_name(index.mode)
              << ", K=" << index.k << " -> " << args.output << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// query / explain

struct QueryArgs {
    std::string index;
    std::string cluster_model;
    std::string target;
    std::string embeddings;  // optional, enriches representatives
    std::string ref_tokens;  // optional, frequency-ranks representatives
    std::size_t top_n = 5;
    std::size_t explain_m = 5;
    std::size_t reps_m = 6;
    bool as_json = false;
    bool approx = false;
    std::size_t probes = 2;
    std::string result_id;  // explain subcommand only
    TokenizerFlags flags;
};

struct LoadedPipeline {
    SearchIndex index;
    ClusterModel model;
    ProjectDistribution dist;
};

LoadedPipeline load_for_query(const QueryArgs& args, const GlobalOptions& global) {
    LoadedPipeline p;
    p.index = read_index_file(args.index);
    p.model = read_cluster_model_file(args.cluster_model);
    require_checksum_match(p.index.model_checksum, model_checksum(p.model), args.index);

    TokenStats stats = tokenize_project(args.target, project_id_from_dir(args.target),
                                        make_tokenize_options(args.flags, global));
    p.dist = build_distribution(stats, p.model);

    std::map<std::string, std::uint64_t> freq;
    if (!args.ref_tokens.empty())
        freq = corpus_frequencies(read_token_stats_files({args.ref_tokens}));
    EmbeddingLookup lookup;
    if (!args.embeddings.empty()) {
        auto emb = std::make_shared<EmbeddingModel>(load_embedding_model_file(args.embeddings));
        lookup = [emb](const std::string& t) { return embed(*emb, t); };
    }
    compute_representatives(p.model, freq, args.reps_m, lookup);
    return p;
}

json explanation_to_json(const Explanation& ex) {
    json entries = json::array();
    for (const auto& e : ex.entries) {
        entries.push_back({{"cluster", e.cluster},
                           {"contribution", e.contribution},
                           {"query_mass", e.query_mass},
                           {"label", e.label},
                           {"representatives", e.representatives}});
    }
    return entries;
}

void print_explanation_text(const Explanation& ex) {
    for (const auto& e : ex.entries) {
        std::cout << "    cluster " << e.cluster << "  contribution="
                  << io::format_double(e.contribution)
                  << "  query_mass=" << io::format_double(e.query_mass) << "  label=\"" << e.label
                  << '"';
        if (!e.representatives.empty()) {
            std::cout << "  reps=";
            for (std::size_t i = 0; i < e.representatives.size(); ++i) {
                if (i) std::cout << ',';
                std::cout << e.representatives[i];
            }
        }
        std::cout << "\n";
    }
}

// In KL mode the score is sum q'_c log r'_c, so D_KL(q'||r') = sum q' log q' - score.
double reconstruct_kl(const SearchIndex& index, const ProjectDistribution& q, double score) {
    std::vector<double> qv = prepare_query_vector(index, q, index.epsilon);
    double entropy_term = 0.0;
    for (double p : qv)
        if (p > 0.0) entropy_term += p * std::log(p);
    return entropy_term - score;
}

int cmd_query(const QueryArgs& args, const GlobalOptions& global) {
    LoadedPipeline p = load_for_query(args, global);

    std::vector<SearchResult> results;
    if (args.approx) {
        build_coarse_partition(p.index, global.seed);
        results = query_approx(p.index, p.dist, args.top_n, p.index.epsilon, args.probes);
    } else {
        results = query(p.index, p.dist, args.top_n);
    }

    if (!args.as_json) {
        std::cout << "# query " << p.dist.project_id << "  mode=" << mode_name(p.index.mode)
                  << "  covered=" << p.dist.covered << "  dropped=" << p.dist.dropped << "\n";
    }
    for (const SearchResult& r : results) {
        Explanation ex =
            explain(p.dist, p.index, r.project_id, p.model, args.explain_m, p.index.epsilon);
        if (args.as_json) {
            json obj{{"rank", r.rank},
                     {"project_id", r.project_id},
                     {"score", r.score},
                     {"mode", std::string(mode_name(p.index.mode))},
                     {"explanation", explanation_to_json(ex)}};
            if (p.index.mode == SimilarityMode::kl)
                obj["kl_divergence"] = reconstruct_kl(p.index, p.dist, r.score);
            std::cout << obj.dump() << "\n";
        } else {
            std::cout << "rank " << r.rank << "  " << r.project_id
                      << "  score=" << io::format_double(r.score);
            if (p.index.mode == SimilarityMode::kl)
                std::cout << "  kl=" << io::format_double(reconstruct_kl(p.index, p.dist, r.score));
            std::cout << "\n";
            print_explanation_text(ex);
        }
    }
    return 0;
}

int cmd_explain(const QueryArgs& args, const GlobalOptions& global) {
    LoadedPipeline p = load_for_query(args, global);
    Explanation ex =
        explain(p.dist, p.index, args.result_id, p.model, args.explain_m, p.index.epsilon);
    if (args.as_json) {
        json obj{{"project_id", ex.result_id},
                 {"score", ex.score},
                 {"mode", std::string(mode_name(p.index.mode))},
                 {"explanation", explanation_to_json(ex)}};
        if (p.index.mode == SimilarityMode::kl)
            obj["kl_divergence"] = reconstruct_kl(p.index, p.dist, ex.score);
        std::cout << obj.dump() << "\n";
    } else {
        std::cout << "# query " << p.dist.project_id << "  mode=" << mode_name(p.index.mode)
                  << "\n";
        std::cout << "result " << ex.result_id << "  score=" << io::format_double(ex.score)
                  << "\n";
        print_explanation_text(ex);
    }
    return 0;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"similar-repository search over identifier sub-token cluster distributions"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand
    app.set_config("--config", "", "Flat key=value config file; flags override it");

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Seed for every stochastic stage")
        ->capture_default_str();
    app.add_flag("--verbose", global.verbose, "Log skipped files and other details");
    std::string kernel_backend;
    app.add_option("--kernel", kernel_backend, "Force a kernel backend: scalar or avx2")
        ->check(CLI::IsMember({"scalar", "avx2"}));

    TokenizeArgs tokenize_args;
    auto* tok = app.add_subcommand("tokenize", "Turn project trees into sub-token statistics");
    tok->add_option("--input", tokenize_args.input,
                    "Project directory, or manifest file with one directory per line")
        ->required();
    tok->add_option("--output", tokenize_args.output, "Token statistics output file")->required();
    add_tokenizer_flags(tok, tokenize_args.flags);

    ClusterFitArgs fit_args;
    auto* fit = app.add_subcommand("cluster-fit", "Fit spherical k-means over sub-token embeddings");
    fit->add_option("--model", fit_args.model, "Embedding model file")->required();
    fit->add_option("--tokens", fit_args.tokens, "Token statistics file(s)")
        ->required()
        ->expected(-1);
    fit->add_option("-K,--clusters", fit_args.k, "Number of clusters")->capture_default_str();
    fit->add_option("--max-iter", fit_args.max_iter, "Iteration cap")->capture_default_str();
    fit->add_option("--labels", fit_args.labels, "Optional label file (@cluster text lines)");
    fit->add_option("--reps-m", fit_args.reps_m, "Representatives per cluster")
        ->capture_default_str();
    fit->add_option("--output", fit_args.output, "Cluster model output file")->required();

    GapArgs gap_args;
    auto* gap = app.add_subcommand("gap", "Gap statistic over a range of K");
    gap->add_option("--model", gap_args.model, "Embedding model file")->required();
    gap->add_option("--tokens", gap_args.tokens, "Token statistics file(s)")
        ->required()
        ->expected(-1);
    gap->add_option("--k-min", gap_args.k_min, "Smallest K candidate")->capture_default_str();
    gap->add_option("--k-max", gap_args.k_max, "Largest K candidate")->capture_default_str();
    gap->add_option("-B,--references", gap_args.b, "Reference samples per K")
        ->capture_default_str();
    gap->add_option("--max-iter", gap_args.max_iter, "Iteration cap")->capture_default_str();

    AssignArgs assign_args;
    auto* assign = app.add_subcommand(
        "assign", "Extend a cluster model's assignment table with new sub-tokens");
    assign->add_option("--model", assign_args.model, "Embedding model file")->required();
    assign->add_option("--cluster-model", assign_args.cluster_model, "Cluster model file")
        ->required();
    assign->add_option("--tokens", assign_args.tokens, "Token statistics file(s)")
        ->required()
        ->expected(-1);
    assign->add_option("--reps-m", assign_args.reps_m, "Representatives per cluster")
        ->capture_default_str();
    assign->add_option("--output", assign_args.output, "Cluster model output file")->required();

    DistributionsArgs dist_args;
    auto* dist = app.add_subcommand("distributions",
                                    "Convert token statistics into cluster distributions");
    dist->add_option("--cluster-model", dist_args.cluster_model, "Cluster model file")->required();
    dist->add_option("--tokens", dist_args.tokens, "Token statistics file(s)")
        ->required()
        ->expected(-1);
    dist->add_option("--output", dist_args.output, "Distribution output file")->required();

    BuildIndexArgs index_args;
    auto* bindex = app.add_subcommand("build-index", "Prepare the reference search index");
    bindex->add_option("--distributions", index_args.distributions, "Distribution file")
        ->required();
    bindex->add_option("--cluster-model", index_args.cluster_model,
                       "Verify the distribution checksum against this cluster model");
    bindex->add_option("--mode", index_args.mode, "kl or cosine")->capture_default_str();
    bindex->add_option("--epsilon", index_args.epsilon, "Smoothing epsilon (KL mode)")
        ->capture_default_str();
    bindex->add_option("--output", index_args.output, "Index output file")->required();

    QueryArgs query_args;
    auto* q = app.add_subcommand("query", "Find reference projects similar to a directory");
    q->add_option("--index", query_args.index, "Index file")->required();
    q->add_option("--cluster-model", query_args.cluster_model, "Cluster model file")->required();
    q->add_option("--target", query_args.target, "Directory to query")->required();
    q->add_option("--top-n", query_args.top_n, "Results to return")->capture_default_str();
    q->add_option("--explain-m", query_args.explain_m, "Clusters shown per explanation")
        ->capture_default_str();
    q->add_option("--embeddings", query_args.embeddings,
                  "Embedding model for proximity-ranked representatives");
    q->add_option("--ref-tokens", query_args.ref_tokens,
                  "Reference token statistics for frequency-ranked representatives");
    q->add_flag("--json", query_args.as_json, "Line-delimited JSON output");
    q->add_flag("--approx", query_args.approx, "Probe a coarse partition instead of scanning");
    q->add_option("--probes", query_args.probes, "Cells to probe with --approx")
        ->capture_default_str();
    add_tokenizer_flags(q, query_args.flags);

    QueryArgs explain_args;
    auto* ex = app.add_subcommand("explain", "Explain one query/result pair");
    ex->add_option("--index", explain_args.index, "Index file")->required();
    ex->add_option("--cluster-model", explain_args.cluster_model, "Cluster model file")
        ->required();
    ex->add_option("--target", explain_args.target, "Directory to query")->required();
    ex->add_option("--result", explain_args.result_id, "Reference project id to explain")
        ->required();
    ex->add_option("-m,--explain-m", explain_args.explain_m, "Clusters shown")
        ->capture_default_str();
    ex->add_option("--embeddings", explain_args.embeddings,
                   "Embedding model for proximity-ranked representatives");
    ex->add_option("--ref-tokens", explain_args.ref_tokens,
                   "Reference token statistics for frequency-ranked representatives");
    ex->add_flag("--json", explain_args.as_json, "JSON output");
    add_tokenizer_flags(ex, explain_args.flags);

    CLI11_PARSE(app, argc, argv);

    if (!kernel_backend.empty()) {
        kernels::set_backend(kernel_backend == "avx2" ? kernels::Backend::avx2
                                                      : kernels::Backend::scalar);
    }

    try {
        if (tok->parsed()) return cmd_tokenize(tokenize_args, global);
        if (fit->parsed()) return cmd_cluster_fit(fit_args, global);
        if (gap->parsed()) return cmd_gap(gap_args, global);
        if (assign->parsed()) return cmd_assign(assign_args, global);
        if (dist->parsed()) return cmd_distributions(dist_args);
        if (bindex->parsed()) return cmd_build_index(index_args);
        if (q->parsed()) return cmd_query(query_args, global);
        if (ex->parsed()) return cmd_explain(explain_args, global);
    } catch (const ChecksumMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitChecksumMismatch;
    } catch (const NoKnownTokens& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoKnownTokens;
    } catch (const EmptyProject& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyProject;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissingArtifact;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return dispatch(argc, argv); }
