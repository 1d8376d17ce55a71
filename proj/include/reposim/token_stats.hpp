#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace reposim {

// A project's bag of fully processed sub-tokens (post split/merge/stem).
struct TokenStats {
    std::string project_id;
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t total = 0;
};

// Commutative merge used when accumulating per-file results.
void merge_counts(TokenStats& into, const TokenStats& from);

struct TokenizeOptions {
    std::uint64_t max_file_size = 1 << 20;
    std::vector<std::string> ignore_dirs = {"node_modules", "vendor",  "third_party",
                                            "thirdparty",   "Pods",    "bower_components",
                                            "external",     "deps"};
    std::ostream* log = nullptr;
};

// Walks root, lexes every supported-language file, and accumulates sub-token
// counts. Hidden directories, ignored directory names, oversized files, and
// undecodable files are skipped (logged when a log stream is set); symlinks
// are not followed. Throws IoError when root is missing and EmptyProject when
// nothing tokenizes.
TokenStats tokenize_project(const std::filesystem::path& root, const std::string& project_id,
                            const TokenizeOptions& options = {});

// One record per line: project_id total npairs subtoken count ... with keys
// in lexicographic order.
std::string write_token_stats(const std::vector<TokenStats>& stats);
std::vector<TokenStats> read_token_stats(const std::string& contents,
                                         const std::string& source_name = "<string>");

}  // namespace reposim
