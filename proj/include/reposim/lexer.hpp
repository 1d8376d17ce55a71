#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "reposim/language.hpp"

namespace reposim {

struct SourceFile {
    std::filesystem::path path;
    LanguageTag language = LanguageTag::Unknown;
    std::string contents;
};

// Returns the identifier-class tokens of the file in source order, excluding
// keywords, literals, and comments. The scanners are lexical (string- and
// comment-aware) rather than full parsers; rare constructs may misclassify.
// Throws UnsupportedLanguage for LanguageTag::Unknown.
std::vector<std::string> extract_identifiers(const SourceFile& file);

std::vector<std::string> extract_identifiers(std::string_view contents, LanguageTag language);

}  // namespace reposim
