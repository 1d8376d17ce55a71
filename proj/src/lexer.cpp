#include "reposim/lexer.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "reposim/errors.hpp"

namespace reposim {

namespace {

struct Profile {
    LanguageTag tag = LanguageTag::Unknown;
    bool line_slash = false;      // //
    bool line_hash = false;       // #
    bool line_dashdash = false;   // --
    bool block_c = false;         // /* ... */
    bool block_haskell = false;   // {- ... -}
    bool nested_block = false;
    bool sq_string = false;       // '...' is a string
    bool sq_char = false;         // '...' is a char literal
    bool backtick_go = false;     // `...` raw string
    bool backtick_template = false;  // `...` template with ${}
    bool backtick_string = false;    // `...` command string (ruby)
    bool triple_dq = false;       // """..."""
    bool triple_sq = false;       // '''...'''
    bool py_prefixes = false;     // r/b/f/u string prefixes
    bool cpp_prefixes = false;    // L/u/u8/U/R prefixes, raw strings, 1'000
    bool rust_quirks = false;     // lifetimes, r"..."/r#"..."#
    bool interp_prefix_any = false;  // scala: any id directly before a quote
    bool dollar_ident = false;    // $ participates in identifiers
    bool php_quirks = false;      // $vars, <?php tags, heredocs
    bool apostrophe_ident = false;   // haskell: primes in identifiers
    bool preproc_c = false;       // skip directive word, whole #include line
    bool preproc_line = false;    // skip whole # line (C#)
    bool csharp_quirks = false;   // @"verbatim", $"interpolated"
    bool shell_quirks = false;    // $vars in "..." and bare, heredocs
    bool ruby_quirks = false;     // =begin/=end, %-literals, #{} interp
    bool keywords_ci = false;     // case-insensitive keyword match (PHP)
};

Profile profile_for(LanguageTag tag) {
    Profile p;
    p.tag = tag;
    switch (tag) {
        case LanguageTag::C:
            p.line_slash = p.block_c = p.sq_char = p.preproc_c = true;
            break;
        case LanguageTag::Cpp:
            p.line_slash = p.block_c = p.sq_char = p.preproc_c = p.cpp_prefixes = true;
            break;
        case LanguageTag::CSharp:
            p.line_slash = p.block_c = p.sq_char = p.preproc_line = p.csharp_quirks = true;
            break;
        case LanguageTag::Go:
            p.line_slash = p.block_c = p.sq_char = p.backtick_go = true;
            break;
        case LanguageTag::Haskell:
            p.line_dashdash = p.block_haskell = p.nested_block = p.sq_char = true;
            p.apostrophe_ident = true;
            break;
        case LanguageTag::Java:
            p.line_slash = p.block_c = p.sq_char = p.triple_dq = true;
            break;
        case LanguageTag::JavaScript:
        case LanguageTag::TypeScript:
            p.line_slash = p.block_c = p.sq_string = p.backtick_template = true;
            p.dollar_ident = true;
            break;
        case LanguageTag::Kotlin:
            p.line_slash = p.block_c = p.nested_block = p.sq_char = p.triple_dq = true;
            break;
        case LanguageTag::Php:
            p.line_slash = p.line_hash = p.block_c = p.sq_string = p.php_quirks = true;
            p.keywords_ci = true;
            break;
        case LanguageTag::Python:
            p.line_hash = p.sq_string = p.triple_dq = p.triple_sq = p.py_prefixes = true;
            break;
        case LanguageTag::Ruby:
            p.line_hash = p.sq_string = p.backtick_string = p.ruby_quirks = true;
            break;
        case LanguageTag::Rust:
            p.line_slash = p.block_c = p.nested_block = p.rust_quirks = true;
            break;
        case LanguageTag::Scala:
            p.line_slash = p.block_c = p.nested_block = p.sq_char = p.triple_dq = true;
            p.interp_prefix_any = true;
            break;
        case LanguageTag::Shell:
            p.line_hash = p.sq_string = p.shell_quirks = true;
            break;
        case LanguageTag::Swift:
            p.line_slash = p.block_c = p.nested_block = p.triple_dq = true;
            break;
        case LanguageTag::Unknown:
            break;
    }
    return p;
}

bool ident_start(unsigned char c, const Profile& p) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c >= 0x80) return true;
    return c == '$' && p.dollar_ident;
}

bool ident_cont(unsigned char c, const Profile& p) {
    if (ident_start(c, p) || (c >= '0' && c <= '9')) return true;
    return c == '\'' && p.apostrophe_ident;
}

bool is_py_string_prefix(std::string_view id) {
    if (id.empty() || id.size() > 2) return false;
    for (char c : id) {
        char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (l != 'r' && l != 'b' && l != 'f' && l != 'u') return false;
    }
    return true;
}

class Scanner {
public:
    Scanner(std::string_view src, const Profile& prof,
            const std::unordered_set<std::string>& keywords)
        : src_(src), prof_(prof), keywords_(keywords) {}

    std::vector<std::string> run() {
        while (i_ < src_.size()) step();
        return std::move(out_);
    }

private:
    std::string_view src_;
    const Profile& prof_;
    const std::unordered_set<std::string>& keywords_;
    std::vector<std::string> out_;
    std::size_t i_ = 0;
    bool line_start_ = true;
    std::vector<std::string> pending_heredocs_;

    char cur() const { return src_[i_]; }
    char peek(std::size_t off = 1) const {
        return i_ + off < src_.size() ? src_[i_ + off] : '\0';
    }
    bool match(std::string_view s) const { return src_.substr(i_).starts_with(s); }

    void newline() {
        ++i_;
        line_start_ = true;
        if (!pending_heredocs_.empty()) consume_heredocs();
    }

    void skip_to_eol() {
        while (i_ < src_.size() && src_[i_] != '\n') ++i_;
    }

    std::string_view rest_of_line() const {
        std::size_t end = src_.find('\n', i_);
        if (end == std::string_view::npos) end = src_.size();
        return src_.substr(i_, end - i_);
    }

    void step() {
        char c = cur();
        if (c == '\n') {
            newline();
            return;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
            ++i_;
            return;
        }

        if (prof_.ruby_quirks && line_start_ && match("=begin")) {
            skip_ruby_block_comment();
            return;
        }
        if (prof_.preproc_c && line_start_ && c == '#') {
            handle_c_preprocessor();
            return;
        }
        if (prof_.preproc_line && line_start_ && c == '#') {
            skip_to_eol();
            return;
        }
        line_start_ = false;

        if (prof_.line_slash && c == '/' && peek() == '/') {
            skip_to_eol();
            return;
        }
        if (prof_.block_c && c == '/' && peek() == '*') {
            skip_block("/*", "*/");
            return;
        }
        if (prof_.line_hash && c == '#') {
            skip_to_eol();
            return;
        }
        if (prof_.line_dashdash && c == '-' && peek() == '-') {
            skip_to_eol();
            return;
        }
        if (prof_.block_haskell && c == '{' && peek() == '-') {
            skip_block("{-", "-}");
            return;
        }
        if (prof_.php_quirks && c == '<') {
            if (match("<?php")) {
                i_ += 5;
                return;
            }
            if (match("<?=") || match("<?")) {
                i_ += match("<?=") ? 3 : 2;
                return;
            }
            if (match("<<<")) {
                start_php_heredoc();
                return;
            }
        }
        if (prof_.php_quirks && c == '?' && peek() == '>') {
            i_ += 2;
            return;
        }
        if (prof_.shell_quirks && c == '<' && peek() == '<') {
            start_shell_heredoc();
            return;
        }

        if (c == '"') {
            if (prof_.triple_dq && match("\"\"\"")) {
                skip_until_after("\"\"\"", 3);
            } else {
                skip_quoted('"');
            }
            return;
        }
        if (c == '\'') {
            handle_single_quote();
            return;
        }
        if (c == '`') {
            if (prof_.backtick_go || prof_.backtick_string) {
                ++i_;
                while (i_ < src_.size() && src_[i_] != '`') ++i_;
                if (i_ < src_.size()) ++i_;
            } else if (prof_.backtick_template) {
                skip_template();
            } else {
                ++i_;
            }
            return;
        }
        if (prof_.ruby_quirks && c == '%' && is_ruby_percent_literal()) {
            skip_ruby_percent_literal();
            return;
        }
        if (prof_.csharp_quirks && (c == '@' || c == '$')) {
            if (handle_csharp_string_sigils()) return;
        }
        if ((prof_.shell_quirks || prof_.php_quirks) && c == '$') {
            handle_dollar_variable();
            return;
        }

        if (ident_start(static_cast<unsigned char>(c), prof_)) {
            scan_identifier();
            return;
        }
        if (c >= '0' && c <= '9') {
            skip_number();
            return;
        }
        ++i_;
    }

    void skip_block(std::string_view open, std::string_view close) {
        i_ += open.size();
        int depth = 1;
        while (i_ < src_.size() && depth > 0) {
            if (prof_.nested_block && match(open)) {
                ++depth;
                i_ += open.size();
            } else if (match(close)) {
                --depth;
                i_ += close.size();
            } else {
                ++i_;
            }
        }
    }

    void skip_ruby_block_comment() {
        skip_to_eol();
        while (i_ < src_.size()) {
            if (i_ < src_.size() && src_[i_] == '\n') ++i_;
            if (match("=end")) {
                skip_to_eol();
                return;
            }
            skip_to_eol();
        }
    }

    void handle_c_preprocessor() {
        ++i_;  // '#'
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t')) ++i_;
        std::size_t start = i_;
        while (i_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::string_view directive = src_.substr(start, i_ - start);
        // Header names in include directives are not identifiers; the rest of
        // a directive (macro names, conditions) is lexed normally.
        if (directive == "include" || directive == "import" || directive == "error" ||
            directive == "warning") {
            skip_to_eol();
        }
        line_start_ = false;
    }

    // Plain single-line string; stops at an unescaped closing quote or EOL.
    void skip_quoted(char quote) {
        bool emit_shell_vars = prof_.shell_quirks && quote == '"';
        bool ruby_interp = prof_.ruby_quirks && quote == '"';
        ++i_;
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '\\' && i_ + 1 < src_.size()) {
                i_ += 2;
                continue;
            }
            if (c == quote) {
                ++i_;
                return;
            }
            if (c == '\n') {
                if (!emit_shell_vars) return;
                newline();
                continue;
            }
            if (emit_shell_vars && c == '$') {
                handle_dollar_variable();
                continue;
            }
            if (ruby_interp && c == '#' && peek() == '{') {
                i_ += 2;
                skip_balanced('{', '}');
                continue;
            }
            ++i_;
        }
    }

    void skip_until_after(std::string_view close, std::size_t open_len) {
        i_ += open_len;
        while (i_ < src_.size() && !match(close)) {
            if (src_[i_] == '\\' && i_ + 1 < src_.size())
                i_ += 2;
            else
                ++i_;
        }
        if (i_ < src_.size()) i_ += close.size();
    }

    void skip_balanced(char open, char close) {
        int depth = 1;
        while (i_ < src_.size() && depth > 0) {
            char c = src_[i_];
            if (c == '\\' && i_ + 1 < src_.size()) {
                i_ += 2;
                continue;
            }
            if (c == open) ++depth;
            if (c == close) --depth;
            ++i_;
        }
    }

    void skip_template() {
        ++i_;  // '`'
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '\\' && i_ + 1 < src_.size()) {
                i_ += 2;
                continue;
            }
            if (c == '`') {
                ++i_;
                return;
            }
            if (c == '$' && peek() == '{') {
                i_ += 2;
                skip_balanced('{', '}');
                continue;
            }
            ++i_;
        }
    }

    void handle_single_quote() {
        if (prof_.rust_quirks) {
            // 'a followed by another ' is a char literal; otherwise a lifetime.
            char n1 = peek(1);
            if ((std::isalpha(static_cast<unsigned char>(n1)) || n1 == '_') && peek(2) != '\'') {
                ++i_;
                while (i_ < src_.size() && ident_cont(static_cast<unsigned char>(src_[i_]), prof_)) ++i_;
                return;
            }
            skip_char_literal();
            return;
        }
        if (prof_.triple_sq && match("'''")) {
            skip_until_after("'''", 3);
            return;
        }
        if (prof_.sq_string) {
            if (prof_.shell_quirks) {
                // No escapes inside shell single quotes.
                ++i_;
                while (i_ < src_.size() && src_[i_] != '\'') ++i_;
                if (i_ < src_.size()) ++i_;
                return;
            }
            skip_quoted('\'');
            return;
        }
        if (prof_.sq_char) {
            skip_char_literal();
            return;
        }
        ++i_;
    }

    void skip_char_literal() {
        ++i_;
        std::size_t limit = i_ + 16;  // escapes like '\u{1F600}' stay short
        while (i_ < src_.size() && i_ < limit) {
            char c = src_[i_];
            if (c == '\\' && i_ + 1 < src_.size()) {
                i_ += 2;
                continue;
            }
            if (c == '\'') {
                ++i_;
                return;
            }
            if (c == '\n') return;
            ++i_;
        }
    }

    bool is_ruby_percent_literal() const {
        char n1 = peek(1);
        if (std::isalpha(static_cast<unsigned char>(n1))) {
            static constexpr std::string_view kinds = "wWiIqQrsx";
            if (kinds.find(n1) == std::string_view::npos) return false;
            char delim = peek(2);
            return delim != '\0' && !std::isalnum(static_cast<unsigned char>(delim)) &&
                   delim != ' ' && delim != '=';
        }
        return n1 == '(' || n1 == '[' || n1 == '{' || n1 == '<';
    }

    void skip_ruby_percent_literal() {
        ++i_;  // '%'
        if (std::isalpha(static_cast<unsigned char>(cur()))) ++i_;
        char open = cur();
        char close = open;
        if (open == '(') close = ')';
        if (open == '[') close = ']';
        if (open == '{') close = '}';
        if (open == '<') close = '>';
        ++i_;
        int depth = 1;
        while (i_ < src_.size() && depth > 0) {
            char c = src_[i_];
            if (c == '\\' && i_ + 1 < src_.size()) {
                i_ += 2;
                continue;
            }
            if (c == open && open != close) ++depth;
            if (c == close) --depth;
            ++i_;
        }
    }

    bool handle_csharp_string_sigils() {
        // @"...", $"...", $@"...", @$"..." — verbatim and interpolated strings.
        std::size_t j = i_;
        bool verbatim = false;
        while (j < src_.size() && (src_[j] == '@' || src_[j] == '$')) {
            if (src_[j] == '@') verbatim = true;
            ++j;
        }
        if (j >= src_.size() || src_[j] != '"') return false;
        i_ = j + 1;
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (verbatim) {
                if (c == '"' && peek() == '"') {
                    i_ += 2;
                    continue;
                }
                if (c == '"') {
                    ++i_;
                    return true;
                }
                ++i_;
            } else {
                if (c == '\\' && i_ + 1 < src_.size()) {
                    i_ += 2;
                    continue;
                }
                if (c == '"') {
                    ++i_;
                    return true;
                }
                if (c == '\n') return true;
                ++i_;
            }
        }
        return true;
    }

    void handle_dollar_variable() {
        ++i_;  // '$'
        if (i_ < src_.size() && src_[i_] == '{') {
            ++i_;
            std::size_t start = i_;
            while (i_ < src_.size() && ident_cont(static_cast<unsigned char>(src_[i_]), prof_)) ++i_;
            emit(std::string(src_.substr(start, i_ - start)));
            while (i_ < src_.size() && src_[i_] != '}' && src_[i_] != '\n') ++i_;
            if (i_ < src_.size() && src_[i_] == '}') ++i_;
            return;
        }
        if (i_ < src_.size() && ident_start(static_cast<unsigned char>(src_[i_]), prof_)) {
            std::size_t start = i_;
            while (i_ < src_.size() && ident_cont(static_cast<unsigned char>(src_[i_]), prof_)) ++i_;
            emit(std::string(src_.substr(start, i_ - start)));
        }
        // $?, $!, positional $1 and friends carry no name.
    }

    void start_shell_heredoc() {
        if (match("<<<")) {
            i_ += 3;
            return;  // herestring; the word after lexes normally
        }
        i_ += 2;
        if (i_ < src_.size() && src_[i_] == '-') ++i_;
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t')) ++i_;
        char quote = '\0';
        if (i_ < src_.size() && (src_[i_] == '\'' || src_[i_] == '"')) quote = src_[i_++];
        std::size_t start = i_;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
            ++i_;
        std::string tag(src_.substr(start, i_ - start));
        if (quote != '\0' && i_ < src_.size() && src_[i_] == quote) ++i_;
        if (!tag.empty()) pending_heredocs_.push_back(tag);
    }

    void start_php_heredoc() {
        i_ += 3;
        while (i_ < src_.size() && (src_[i_] == ' ' || src_[i_] == '\t')) ++i_;
        char quote = '\0';
        if (i_ < src_.size() && (src_[i_] == '\'' || src_[i_] == '"')) quote = src_[i_++];
        std::size_t start = i_;
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
            ++i_;
        std::string tag(src_.substr(start, i_ - start));
        if (quote != '\0' && i_ < src_.size() && src_[i_] == quote) ++i_;
        if (!tag.empty()) pending_heredocs_.push_back(tag);
    }

    // Called right after a newline while heredoc bodies are pending.
    void consume_heredocs() {
        while (!pending_heredocs_.empty() && i_ < src_.size()) {
            const std::string& tag = pending_heredocs_.front();
            bool closed = false;
            while (i_ < src_.size()) {
                std::size_t line_begin = i_;
                std::string_view line = rest_of_line();
                std::size_t ws = 0;
                while (ws < line.size() && (line[ws] == ' ' || line[ws] == '\t')) ++ws;
                std::string_view body = line.substr(ws);
                i_ = line_begin + line.size();
                if (i_ < src_.size()) ++i_;  // consume '\n'
                if (body.starts_with(tag)) {
                    std::string_view tail = body.substr(tag.size());
                    if (tail.empty() || tail[0] == ';' || tail[0] == ',' || tail[0] == ')' ||
                        tail[0] == ' ' || tail[0] == '\t' || tail[0] == '\r') {
                        closed = true;
                        break;
                    }
                }
            }
            pending_heredocs_.erase(pending_heredocs_.begin());
            if (!closed) return;
        }
        line_start_ = true;
    }

    void scan_identifier() {
        std::size_t start = i_;
        while (i_ < src_.size() && ident_cont(static_cast<unsigned char>(src_[i_]), prof_)) ++i_;
        std::string id(src_.substr(start, i_ - start));
        char next = i_ < src_.size() ? src_[i_] : '\0';

        if (prof_.py_prefixes && (next == '"' || next == '\'') && is_py_string_prefix(id)) {
            return;  // string prefix, not a name; the quote is handled next
        }
        if (prof_.cpp_prefixes && next == '"' &&
            (id == "R" || id == "LR" || id == "uR" || id == "u8R" || id == "UR")) {
            skip_cpp_raw_string();
            return;
        }
        if (prof_.cpp_prefixes && (next == '"' || next == '\'') &&
            (id == "L" || id == "u" || id == "u8" || id == "U")) {
            return;  // encoding prefix; quote handled next
        }
        if (prof_.rust_quirks && (id == "r" || id == "br") && (next == '"' || next == '#')) {
            if (skip_rust_raw_string()) return;
        }
        if (prof_.rust_quirks && (id == "b") && (next == '"' || next == '\'')) {
            return;  // byte string / byte char prefix
        }
        if (prof_.interp_prefix_any && next == '"') {
            return;  // string interpolator prefix (s"...", f"...", raw"...")
        }
        emit(std::move(id));
    }

    void skip_cpp_raw_string() {
        // R"delim( ... )delim"
        ++i_;  // '"'
        std::size_t dstart = i_;
        while (i_ < src_.size() && src_[i_] != '(' && src_[i_] != '\n') ++i_;
        if (i_ >= src_.size() || src_[i_] != '(') return;
        std::string close = ")" + std::string(src_.substr(dstart, i_ - dstart)) + "\"";
        ++i_;
        while (i_ < src_.size() && !match(close)) ++i_;
        if (i_ < src_.size()) i_ += close.size();
    }

    bool skip_rust_raw_string() {
        std::size_t j = i_;
        std::size_t hashes = 0;
        while (j < src_.size() && src_[j] == '#') {
            ++hashes;
            ++j;
        }
        if (j >= src_.size() || src_[j] != '"') return false;
        i_ = j + 1;
        std::string close = "\"" + std::string(hashes, '#');
        while (i_ < src_.size() && !match(close)) ++i_;
        if (i_ < src_.size()) i_ += close.size();
        return true;
    }

    void skip_number() {
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                if ((c == 'e' || c == 'E' || c == 'p' || c == 'P') &&
                    (peek() == '+' || peek() == '-')) {
                    i_ += 2;
                    continue;
                }
                ++i_;
                continue;
            }
            if (c == '.' && std::isdigit(static_cast<unsigned char>(peek()))) {
                i_ += 2;
                continue;
            }
            if (c == '\'' && prof_.cpp_prefixes &&
                std::isdigit(static_cast<unsigned char>(peek()))) {
                i_ += 2;  // digit separator
                continue;
            }
            break;
        }
    }

    void emit(std::string id) {
        if (id.empty()) return;
        if (prof_.php_quirks && !id.empty() && id[0] == '$') id.erase(0, 1);
        if (id.empty()) return;
        if (prof_.keywords_ci) {
            std::string lower = id;
            std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
                return static_cast<char>(std::tolower(c));
            });
            if (keywords_.contains(lower)) return;
        } else if (keywords_.contains(id)) {
            return;
        }
        out_.push_back(std::move(id));
    }
};

}  // namespace

std::vector<std::string> extract_identifiers(std::string_view contents, LanguageTag language) {
    if (language == LanguageTag::Unknown)
        throw UnsupportedLanguage("cannot extract identifiers from unsupported language");
    Profile prof = profile_for(language);
    Scanner scanner(contents, prof, language_keywords(language));
    return scanner.run();
}

std::vector<std::string> extract_identifiers(const SourceFile& file) {
    return extract_identifiers(file.contents, file.language);
}

}  // namespace reposim
