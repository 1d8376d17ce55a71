#include "reposim/token_stats.hpp"

#include <ostream>
#include <sstream>
#include <system_error>

#include "reposim/errors.hpp"
#include "reposim/io_util.hpp"
#include "reposim/lexer.hpp"
#include "reposim/subtokens.hpp"

namespace fs = std::filesystem;

namespace reposim {

void merge_counts(TokenStats& into, const TokenStats& from) {
    for (const auto& [key, count] : from.counts) into.counts[key] += count;
    into.total += from.total;
}

namespace {

bool utf8_valid(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (c == 0) return false;
        std::size_t extra = 0;
        if (c < 0x80)
            extra = 0;
        else if ((c & 0xE0) == 0xC0)
            extra = 1;
        else if ((c & 0xF0) == 0xE0)
            extra = 2;
        else if ((c & 0xF8) == 0xF0)
            extra = 3;
        else
            return false;
        if (extra > 0 && i + extra >= s.size()) return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
        }
        i += extra + 1;
    }
    return true;
}

bool ignored_dir(const fs::path& name, const TokenizeOptions& opt) {
    std::string n = name.string();
    if (!n.empty() && n[0] == '.') return true;
    for (const auto& ig : opt.ignore_dirs)
        if (n == ig) return true;
    return false;
}

void log_skip(const TokenizeOptions& opt, const fs::path& p, std::string_view reason) {
    if (opt.log) *opt.log << "skip " << p.string() << " (" << reason << ")\n";
}

void tokenize_file(const fs::path& path, LanguageTag lang, TokenStats& acc,
                   const TokenizeOptions& opt) {
    std::string contents;
    try {
        contents = io::read_file(path);
    } catch (const IoError&) {
        log_skip(opt, path, "unreadable");
        return;
    }
    if (contents.find('\0') != std::string::npos || !utf8_valid(contents)) {
        log_skip(opt, path, "not valid text");
        return;
    }
    TokenStats file_stats;
    for (const std::string& token : extract_identifiers(contents, lang)) {
        for (std::string& sub : process_identifier(token)) {
            ++file_stats.counts[sub];
            ++file_stats.total;
        }
    }
    merge_counts(acc, file_stats);
}

void walk(const fs::path& dir, TokenStats& acc, const TokenizeOptions& opt) {
    std::error_code ec;
    fs::directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
    if (ec) {
        log_skip(opt, dir, ec.message());
        return;
    }
    for (const auto& entry : it) {
        const fs::path& p = entry.path();
        std::error_code sec;
        if (entry.is_symlink(sec) || sec) {
            log_skip(opt, p, "symlink");
            continue;
        }
        if (entry.is_directory(sec)) {
            if (!ignored_dir(p.filename(), opt)) walk(p, acc, opt);
            continue;
        }
        if (!entry.is_regular_file(sec)) continue;
        LanguageTag lang = detect_language(p);
        if (lang == LanguageTag::Unknown) continue;
        std::uintmax_t size = entry.file_size(sec);
        if (sec) continue;
        if (size > opt.max_file_size) {
            log_skip(opt, p, "exceeds size cap");
            continue;
        }
        tokenize_file(p, lang, acc, opt);
    }
}

}  // namespace

TokenStats tokenize_project(const fs::path& root, const std::string& project_id,
                            const TokenizeOptions& options) {
    std::error_code ec;
    if (!fs::exists(root, ec) || ec) throw IoError("no such directory: " + root.string());
    if (!fs::is_directory(root, ec) || ec) throw IoError("not a directory: " + root.string());
    TokenStats stats;
    stats.project_id = project_id;
    walk(root, stats, options);
    if (stats.total == 0)
        throw EmptyProject("project '" + project_id + "' produced no sub-tokens");
    return stats;
}

std::string write_token_stats(const std::vector<TokenStats>& stats) {
    std::ostringstream out;
    for (const TokenStats& s : stats) {
        out << s.project_id << ' ' << s.total << ' ' << s.counts.size();
        for (const auto& [key, count] : s.counts) out << ' ' << key << ' ' << count;
        out << '\n';
    }
    return std::move(out).str();
}

std::vector<TokenStats> read_token_stats(const std::string& contents,
                                         const std::string& source_name) {
    std::vector<TokenStats> result;
    std::istringstream in(contents);
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& what) {
        throw FormatError(source_name + ":" + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto fields = io::split_ws(line);
        if (fields.empty()) continue;
        if (fields.size() < 3) fail("expected: project_id total npairs ...");
        TokenStats s;
        s.project_id = std::string(fields[0]);
        bool ok = false;
        std::uint64_t total = io::parse_u64(fields[1], ok);
        if (!ok) fail("bad total");
        std::uint64_t npairs = io::parse_u64(fields[2], ok);
        if (!ok) fail("bad pair count");
        if (fields.size() != 3 + 2 * npairs) fail("wrong field count for " + s.project_id);
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < npairs; ++i) {
            std::string key(fields[3 + 2 * i]);
            std::uint64_t count = io::parse_u64(fields[4 + 2 * i], ok);
            if (!ok || count == 0) fail("bad count for sub-token " + key);
            if (s.counts.count(key)) fail("duplicate sub-token " + key);
            s.counts[key] = count;
            sum += count;
        }
        if (sum != total) fail("total mismatch for " + s.project_id);
        s.total = total;
        result.push_back(std::move(s));
    }
    return result;
}

}  // namespace reposim
