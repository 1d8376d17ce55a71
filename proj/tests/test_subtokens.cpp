#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "reposim/rng.hpp"
#include "reposim/subtokens.hpp"

using namespace reposim;

namespace {
std::string concat(const std::vector<std::string>& parts) {
    std::string all;
    for (const auto& p : parts) all += p;
    return all;
}
}  // namespace

TEST_CASE("split: snake case") {
    CHECK(split_subtokens("snake_case_name") ==
          std::vector<std::string>{"snake", "case", "name"});
    CHECK(split_subtokens("__dunder__") == std::vector<std::string>{"dunder"});
    CHECK(split_subtokens("_") == std::vector<std::string>{});
}

TEST_CASE("split: camel case") {
    CHECK(split_subtokens("getValue") == std::vector<std::string>{"get", "value"});
    CHECK(split_subtokens("parseHTTPRequest") ==
          std::vector<std::string>{"parse", "http", "request"});
    CHECK(split_subtokens("HTTPServer") == std::vector<std::string>{"http", "server"});
    CHECK(split_subtokens("XMLHttpRequest") ==
          std::vector<std::string>{"xml", "http", "request"});
    CHECK(split_subtokens("Simple") == std::vector<std::string>{"simple"});
    CHECK(split_subtokens("ALLCAPS") == std::vector<std::string>{"allcaps"});
}

TEST_CASE("split: digits attach to the preceding segment") {
    CHECK(split_subtokens("utf8Decoder") == std::vector<std::string>{"utf8", "decoder"});
    CHECK(split_subtokens("base64encode") == std::vector<std::string>{"base64encode"});
    CHECK(split_subtokens("sha256Sum") == std::vector<std::string>{"sha256", "sum"});
    CHECK(split_subtokens("vec2d") == std::vector<std::string>{"vec2d"});
    CHECK(split_subtokens("HTTP2Server") == std::vector<std::string>{"http2", "server"});
}

TEST_CASE("split: mixed separators and unicode bytes") {
    CHECK(split_subtokens("foo-bar.baz") == std::vector<std::string>{"foo", "bar", "baz"});
    CHECK(split_subtokens("$jquery") == std::vector<std::string>{"jquery"});
    // multi-byte sequences are caseless letters: no boundary inside them, and
    // none between a caseless byte and an uppercase letter
    CHECK(split_subtokens("caf\xc3\xa9Shop") == std::vector<std::string>{"caf\xc3\xa9shop"});
}

TEST_CASE("merge: short appended to preceding longer") {
    CHECK(merge_short({"user", "id"}) == std::vector<std::string>{"userid"});
    CHECK(merge_short({"value", "id", "string"}) ==
          std::vector<std::string>{"valueid", "string"});
}

TEST_CASE("merge: short appended to following when nothing precedes") {
    CHECK(merge_short({"to", "string"}) == std::vector<std::string>{"tostring"});
    CHECK(merge_short({"x", "ab", "value"}) == std::vector<std::string>{"xabvalue"});
}

TEST_CASE("merge: all-short folds into one") {
    CHECK(merge_short({"a", "b"}) == std::vector<std::string>{"ab"});
    CHECK(merge_short({"is", "a"}) == std::vector<std::string>{"isa"});
    CHECK(merge_short({"x"}) == std::vector<std::string>{"x"});
}

TEST_CASE("merge: nothing short") {
    CHECK(merge_short({"value"}) == std::vector<std::string>{"value"});
    CHECK(merge_short({"parse", "http", "request"}) ==
          std::vector<std::string>{"parse", "http", "request"});
    CHECK(merge_short({}) == std::vector<std::string>{});
}

TEST_CASE("pipeline examples") {
    CHECK(process_identifier("getValue") == std::vector<std::string>{"get", "value"});
    CHECK(process_identifier("userId") == std::vector<std::string>{"userid"});
    CHECK(process_identifier("parseHTTPRequest") ==
          std::vector<std::string>{"parse", "http", "request"});
    CHECK(process_identifier("generateResponse") ==
          std::vector<std::string>{"generat", "respons"});
    CHECK(process_identifier("a") == std::vector<std::string>{"a"});
}

TEST_CASE("property: merge preserves concatenation and never yields empties") {
    std::mt19937_64 gen(99);
    const std::string alphabet = "abcdefgh";
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<std::string> segments;
        std::size_t n = 1 + rng::uniform_index(gen, 6);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t len = 1 + rng::uniform_index(gen, 6);
            std::string seg;
            for (std::size_t j = 0; j < len; ++j)
                seg += alphabet[rng::uniform_index(gen, alphabet.size())];
            segments.push_back(seg);
        }
        auto merged = merge_short(segments);
        CAPTURE(concat(segments));
        CHECK(concat(merged) == concat(segments));
        for (const auto& m : merged) CHECK_FALSE(m.empty());
    }
}

TEST_CASE("property: split output is lowercase, nonempty, concatenation-preserving") {
    std::mt19937_64 gen(12345);
    const std::string alphabet = "abcXYZ_09$-";
    for (int trial = 0; trial < 500; ++trial) {
        std::string token;
        std::size_t len = 1 + rng::uniform_index(gen, 12);
        for (std::size_t j = 0; j < len; ++j)
            token += alphabet[rng::uniform_index(gen, alphabet.size())];
        auto parts = split_subtokens(token);
        std::string lowered;
        for (char c : token) {
            if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))
                lowered += c;
            else if (c >= 'A' && c <= 'Z')
                lowered += static_cast<char>(c - 'A' + 'a');
        }
        CAPTURE(token);
        CHECK(concat(parts) == lowered);
        for (const auto& p : parts) {
            CHECK_FALSE(p.empty());
            for (char c : p) CHECK_FALSE((c >= 'A' && c <= 'Z'));
        }
    }
}
