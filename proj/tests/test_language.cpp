#include <doctest.h>

#include "reposim/language.hpp"

using namespace reposim;

TEST_CASE("extension mapping") {
    CHECK(detect_language("src/main.rs") == LanguageTag::Rust);
    CHECK(detect_language("lib/util.py") == LanguageTag::Python);
    CHECK(detect_language("README.md") == LanguageTag::Unknown);
    CHECK(detect_language("a/b/c.go") == LanguageTag::Go);
    CHECK(detect_language("Widget.java") == LanguageTag::Java);
    CHECK(detect_language("app.js") == LanguageTag::JavaScript);
    CHECK(detect_language("app.jsx") == LanguageTag::JavaScript);
    CHECK(detect_language("app.ts") == LanguageTag::TypeScript);
    CHECK(detect_language("Main.kt") == LanguageTag::Kotlin);
    CHECK(detect_language("index.php") == LanguageTag::Php);
    CHECK(detect_language("tool.rb") == LanguageTag::Ruby);
    CHECK(detect_language("Build.scala") == LanguageTag::Scala);
    CHECK(detect_language("setup.sh") == LanguageTag::Shell);
    CHECK(detect_language("App.swift") == LanguageTag::Swift);
    CHECK(detect_language("prog.hs") == LanguageTag::Haskell);
    CHECK(detect_language("Service.cs") == LanguageTag::CSharp);
    CHECK(detect_language("core.c") == LanguageTag::C);
    CHECK(detect_language("core.cpp") == LanguageTag::Cpp);
    CHECK(detect_language("core.cc") == LanguageTag::Cpp);
    CHECK(detect_language("core.hpp") == LanguageTag::Cpp);
}

TEST_CASE("ambiguous .h maps to C") {
    CHECK(detect_language("include/api.h") == LanguageTag::C);
}

TEST_CASE("case-insensitive extensions") {
    CHECK(detect_language("MAIN.PY") == LanguageTag::Python);
    CHECK(detect_language("Thing.Java") == LanguageTag::Java);
}

TEST_CASE("paths without extension") {
    CHECK(detect_language("Makefile") == LanguageTag::Unknown);
    CHECK(detect_language("LICENSE") == LanguageTag::Unknown);
    CHECK(detect_language("Rakefile") == LanguageTag::Ruby);
}

TEST_CASE("language names cover the sixteen languages") {
    CHECK(language_name(LanguageTag::C) == "C");
    CHECK(language_name(LanguageTag::CSharp) == "C#");
    CHECK(language_name(LanguageTag::Unknown) == "Unknown");
    CHECK(kSupportedLanguageCount == 16);
}

TEST_CASE("keyword tables are populated for every supported language") {
    for (int t = 0; t < kSupportedLanguageCount; ++t) {
        auto tag = static_cast<LanguageTag>(t);
        CHECK_FALSE(language_keywords(tag).empty());
    }
    CHECK(language_keywords(LanguageTag::Unknown).empty());
    CHECK(language_keywords(LanguageTag::Python).contains("def"));
    CHECK(language_keywords(LanguageTag::Go).contains("func"));
    CHECK(language_keywords(LanguageTag::Rust).contains("impl"));
}
