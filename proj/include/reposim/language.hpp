#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace reposim {

// The 16 supported languages. Detection is purely name-based; ambiguous
// extensions (.h) map to C.
enum class LanguageTag {
    C,
    CSharp,
    Cpp,
    Go,
    Haskell,
    Java,
    JavaScript,
    Kotlin,
    Php,
    Python,
    Ruby,
    Rust,
    Scala,
    Shell,
    Swift,
    TypeScript,
    Unknown,
};

inline constexpr int kSupportedLanguageCount = 16;

std::string_view language_name(LanguageTag tag);

LanguageTag detect_language(const std::filesystem::path& path);

// Reserved words filtered out of identifier extraction; exposed so tests can
// assert no keyword ever leaks through.
const std::unordered_set<std::string>& language_keywords(LanguageTag tag);

}  // namespace reposim
