// The English (Porter2) stemming algorithm as published by the Snowball
// project: http://snowballstem.org/algorithms/english/stemmer.html
//
// Words are processed with y-marking (consonant y becomes an internal 'Y'),
// R1/R2 region tracking, and the suffix steps 0 through 5. Each step searches
// for the longest matching suffix of its set and commits to it: a failed
// region or context condition ends the step without trying shorter suffixes.

#include "reposim/stemmer.hpp"

#include <algorithm>
#include <array>
#include <cstddef>

namespace reposim {

namespace {

bool is_v(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool ends_with(const std::string& w, std::string_view suf) {
    return w.size() >= suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

// Suffix lies in the region starting at p (R1 or R2).
bool in_region(const std::string& w, std::size_t suf_len, std::size_t p) {
    return w.size() - suf_len >= p;
}

bool contains_vowel(const std::string& w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end && i < w.size(); ++i)
        if (is_v(w[i])) return true;
    return false;
}

bool starts_with(const std::string& w, std::string_view pre) {
    return w.size() >= pre.size() && w.compare(0, pre.size(), pre) == 0;
}

// Marks consonant y's as 'Y': word-initial y and y following a vowel.
void mark_consonant_y(std::string& w) {
    if (!w.empty() && w[0] == 'y') w[0] = 'Y';
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] == 'y' && is_v(w[i - 1])) w[i] = 'Y';
}

// R1 is the region after the first non-vowel following a vowel (with the
// gener/commun/arsen prefix exceptions); R2 repeats the rule inside R1.
void mark_regions(const std::string& w, std::size_t& p1, std::size_t& p2) {
    const std::size_t n = w.size();
    p1 = p2 = n;
    std::size_t i = 0;
    if (starts_with(w, "gener") || starts_with(w, "arsen")) {
        p1 = 5;
    } else if (starts_with(w, "commun")) {
        p1 = 6;
    } else {
        while (i < n && !is_v(w[i])) ++i;
        if (i == n) return;
        ++i;
        while (i < n && is_v(w[i])) ++i;
        if (i == n) return;
        p1 = ++i;
    }
    i = p1;
    while (i < n && !is_v(w[i])) ++i;
    if (i == n) return;
    ++i;
    while (i < n && is_v(w[i])) ++i;
    if (i == n) return;
    p2 = i + 1;
}

// Short-syllable test at exclusive end position e: either vowel + non-vowel
// (other than w/x/Y) preceded by a non-vowel, or vowel + non-vowel forming
// the whole word.
bool short_syllable_at(const std::string& w, std::size_t e) {
    if (e >= 3 && !is_v(w[e - 1]) && w[e - 1] != 'w' && w[e - 1] != 'x' && w[e - 1] != 'Y' &&
        is_v(w[e - 2]) && !is_v(w[e - 3]))
        return true;
    if (e == 2 && !is_v(w[e - 1]) && is_v(w[e - 2])) return true;
    return false;
}

bool ends_in_double(const std::string& w) {
    static constexpr std::string_view doubles = "bdfgmnprt";
    std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && doubles.find(w[n - 1]) != std::string_view::npos;
}

bool valid_li_ending(char c) {
    static constexpr std::string_view li = "cdeghkmnrt";
    return li.find(c) != std::string_view::npos;
}

void step0(std::string& w) {
    for (std::string_view suf : {"'s'", "'s", "'"}) {
        if (ends_with(w, suf)) {
            w.resize(w.size() - suf.size());
            return;
        }
    }
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
        return;
    }
    if (ends_with(w, "ied") || ends_with(w, "ies")) {
        // "i" when preceded by more than one letter, otherwise "ie".
        w.resize(w.size() - (w.size() > 4 ? 2 : 1));
        return;
    }
    if (ends_with(w, "us") || ends_with(w, "ss")) return;
    if (ends_with(w, "s")) {
        // Delete when a vowel appears before the letter preceding the s.
        if (w.size() >= 2 && contains_vowel(w, 0, w.size() - 2)) w.pop_back();
    }
}

void step1b(std::string& w, std::size_t p1) {
    struct Rule {
        std::string_view suf;
        bool eed;
    };
    static constexpr std::array<Rule, 6> rules{{{"eedly", true},
                                                {"ingly", false},
                                                {"edly", false},
                                                {"eed", true},
                                                {"ing", false},
                                                {"ed", false}}};
    for (const Rule& r : rules) {
        if (!ends_with(w, r.suf)) continue;
        if (r.eed) {
            if (in_region(w, r.suf.size(), p1)) {
                w.resize(w.size() - r.suf.size());
                w += "ee";
            }
            return;
        }
        if (!contains_vowel(w, 0, w.size() - r.suf.size())) return;
        w.resize(w.size() - r.suf.size());
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
            w += 'e';
        } else if (ends_in_double(w)) {
            w.pop_back();
        } else if (w.size() == p1 && short_syllable_at(w, w.size())) {
            w += 'e';
        }
        return;
    }
}

void step1c(std::string& w) {
    std::size_t n = w.size();
    if (n > 2 && (w[n - 1] == 'y' || w[n - 1] == 'Y') && !is_v(w[n - 2])) w[n - 1] = 'i';
}

void step2(std::string& w, std::size_t p1) {
    struct Sub {
        std::string_view suf;
        std::string_view rep;
    };
    static constexpr std::array<Sub, 24> subs{{
        {"ational", "ate"}, {"fulness", "ful"}, {"iveness", "ive"}, {"ization", "ize"},
        {"ousness", "ous"}, {"biliti", "ble"},  {"lessli", "less"}, {"tional", "tion"},
        {"alism", "al"},    {"aliti", "al"},    {"ation", "ate"},   {"entli", "ent"},
        {"fulli", "ful"},   {"iviti", "ive"},   {"ousli", "ous"},   {"abli", "able"},
        {"alli", "al"},     {"anci", "ance"},   {"ator", "ate"},    {"enci", "ence"},
        {"izer", "ize"},    {"bli", "ble"},     {"ogi", "og"},      {"li", ""},
    }};
    for (const Sub& s : subs) {
        if (!ends_with(w, s.suf)) continue;
        if (!in_region(w, s.suf.size(), p1)) return;
        if (s.suf == "ogi") {
            if (w.size() >= 4 && w[w.size() - 4] == 'l') {
                w.resize(w.size() - 3);
                w += "og";
            }
        } else if (s.suf == "li") {
            if (w.size() >= 3 && valid_li_ending(w[w.size() - 3])) w.resize(w.size() - 2);
        } else {
            w.resize(w.size() - s.suf.size());
            w += s.rep;
        }
        return;
    }
}

void step3(std::string& w, std::size_t p1, std::size_t p2) {
    struct Sub {
        std::string_view suf;
        std::string_view rep;
    };
    static constexpr std::array<Sub, 9> subs{{
        {"ational", "ate"}, {"tional", "tion"}, {"alize", "al"}, {"icate", "ic"},
        {"iciti", "ic"},    {"ative", ""},      {"ical", "ic"},  {"ness", ""},
        {"ful", ""},
    }};
    for (const Sub& s : subs) {
        if (!ends_with(w, s.suf)) continue;
        if (!in_region(w, s.suf.size(), p1)) return;
        if (s.suf == "ative") {
            if (in_region(w, s.suf.size(), p2)) w.resize(w.size() - s.suf.size());
        } else {
            w.resize(w.size() - s.suf.size());
            w += s.rep;
        }
        return;
    }
}

void step4(std::string& w, std::size_t p2) {
    static constexpr std::array<std::string_view, 18> subs{{
        "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism", "ate",
        "iti", "ous", "ive", "ize", "ion", "al", "er", "ic",
    }};
    for (std::string_view suf : subs) {
        if (!ends_with(w, suf)) continue;
        if (!in_region(w, suf.size(), p2)) return;
        if (suf == "ion") {
            char prev = w.size() >= 4 ? w[w.size() - 4] : '\0';
            if (prev == 's' || prev == 't') w.resize(w.size() - 3);
        } else {
            w.resize(w.size() - suf.size());
        }
        return;
    }
}

void step5(std::string& w, std::size_t p1, std::size_t p2) {
    std::size_t n = w.size();
    if (n == 0) return;
    if (w[n - 1] == 'e') {
        if (n - 1 >= p2 || (n - 1 >= p1 && !short_syllable_at(w, n - 1))) w.pop_back();
    } else if (w[n - 1] == 'l') {
        if (n - 1 >= p2 && n >= 2 && w[n - 2] == 'l') w.pop_back();
    }
}

struct Exception {
    std::string_view from;
    std::string_view to;
};

constexpr std::array<Exception, 18> kExceptions{{
    {"skis", "ski"},     {"skies", "sky"},   {"dying", "die"},   {"lying", "lie"},
    {"tying", "tie"},    {"idly", "idl"},    {"gently", "gentl"}, {"ugly", "ugli"},
    {"early", "earli"},  {"only", "onli"},   {"singly", "singl"}, {"sky", "sky"},
    {"news", "news"},    {"howe", "howe"},   {"atlas", "atlas"},  {"cosmos", "cosmos"},
    {"bias", "bias"},    {"andes", "andes"},
}};

constexpr std::array<std::string_view, 8> kPostStep1aInvariants{{
    "inning", "outing", "canning", "herring", "earring", "proceed", "exceed", "succeed",
}};

}  // namespace

std::string snowball_english(std::string_view word) {
    std::string w(word);
    for (const Exception& e : kExceptions)
        if (w == e.from) return std::string(e.to);
    if (w.size() <= 2) return w;

    if (w[0] == '\'') w.erase(0, 1);
    mark_consonant_y(w);
    std::size_t p1 = 0, p2 = 0;
    mark_regions(w, p1, p2);

    step0(w);
    step1a(w);
    for (std::string_view inv : kPostStep1aInvariants) {
        if (w == inv) return w;
    }
    step1b(w, p1);
    step1c(w);
    step2(w, p1);
    step3(w, p1, p2);
    step4(w, p2);
    step5(w, p1, p2);

    std::replace(w.begin(), w.end(), 'Y', 'y');
    return w;
}

std::string stem_subtoken(std::string_view subtoken) {
    if (subtoken.size() <= 6) return std::string(subtoken);
    for (unsigned char c : subtoken)
        if (c >= 0x80) return std::string(subtoken);
    return snowball_english(subtoken);
}

}  // namespace reposim
