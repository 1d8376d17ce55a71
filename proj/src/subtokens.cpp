#include "reposim/subtokens.hpp"

#include <cctype>

#include "reposim/stemmer.hpp"

namespace reposim {

namespace {

enum class CharClass { separator, lower, upper, digit, caseless };

CharClass classify(unsigned char c) {
    if (c >= 0x80) return CharClass::caseless;
    if (c >= 'a' && c <= 'z') return CharClass::lower;
    if (c >= 'A' && c <= 'Z') return CharClass::upper;
    if (c >= '0' && c <= '9') return CharClass::digit;
    return CharClass::separator;
}

char to_lower_ascii(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

}  // namespace

std::vector<std::string> split_subtokens(std::string_view token) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    };
    const std::size_t n = token.size();
    for (std::size_t i = 0; i < n; ++i) {
        CharClass cls = classify(static_cast<unsigned char>(token[i]));
        if (cls == CharClass::separator) {
            flush();
            continue;
        }
        if (!cur.empty() && cls == CharClass::upper) {
            CharClass prev = classify(static_cast<unsigned char>(token[i - 1]));
            if (prev == CharClass::lower || prev == CharClass::digit) {
                flush();
            } else if (prev == CharClass::upper && i + 1 < n &&
                       classify(static_cast<unsigned char>(token[i + 1])) == CharClass::lower) {
                // Last uppercase of a run followed by lowercase starts the
                // next segment.
                flush();
            }
        }
        cur += to_lower_ascii(token[i]);
    }
    flush();
    return out;
}

std::vector<std::string> merge_short(const std::vector<std::string>& subtokens) {
    constexpr std::size_t kMin = 3;
    bool any_long = false;
    for (const auto& s : subtokens)
        if (s.size() >= kMin) any_long = true;

    if (!any_long) {
        std::string all;
        for (const auto& s : subtokens) all += s;
        if (all.empty()) return {};
        return {all};
    }

    std::vector<std::string> out;
    std::string pending;
    for (const auto& s : subtokens) {
        if (s.size() >= kMin) {
            if (!pending.empty() && out.empty()) {
                out.push_back(pending + s);
            } else if (!pending.empty()) {
                out.back() += pending;
                out.push_back(s);
            } else {
                out.push_back(s);
            }
            pending.clear();
        } else {
            pending += s;
        }
    }
    if (!pending.empty()) out.back() += pending;
    return out;
}

std::vector<std::string> process_identifier(std::string_view token) {
    std::vector<std::string> merged = merge_short(split_subtokens(token));
    for (auto& s : merged) s = stem_subtoken(s);
    return merged;
}

}  // namespace reposim
