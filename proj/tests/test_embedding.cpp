#include <doctest.h>

#include <algorithm>

#include "reposim/embedding.hpp"
#include "reposim/errors.hpp"
#include "reposim/io_util.hpp"

using namespace reposim;

namespace {

const char* kFixtureModel =
    "4 3 3 3 2\n"
    "alpha 1 0 0 0\n"
    "beta 0 1 0 0\n"
    "gamma 0 0 1 0\n"
    "#<ab 0.5 0 0.5 0\n"
    "#ab> 0 0.5 0 0.5\n";

}  // namespace

TEST_CASE("load well-formed model") {
    EmbeddingModel m = load_embedding_model(kFixtureModel, "fixture");
    CHECK(m.dim == 4);
    CHECK(m.min_n == 3);
    CHECK(m.max_n == 3);
    CHECK(m.vocab.size() == 3);
    CHECK(m.ngrams.size() == 2);
    CHECK(m.buckets == 0);
}

TEST_CASE("load errors carry line numbers") {
    CHECK_THROWS_AS(load_embedding_model("", "empty"), FormatError);
    CHECK_THROWS_WITH_AS(load_embedding_model("4 3 3 1 0\ntok 1 2 3\n", "short"),
                         doctest::Contains("short:2"), DimensionMismatch);
    CHECK_THROWS_AS(load_embedding_model("4 3 3 1 0\ntok 1 2 nan_oops 4\n", "bad"), FormatError);
    CHECK_THROWS_AS(load_embedding_model("0 3 3 0 0\n", "zerodim"), FormatError);
    CHECK_THROWS_AS(load_embedding_model("4 5 3 0 0\n", "range"), FormatError);
    CHECK_THROWS_AS(load_embedding_model("4 3 3 2 0\nonly 1 2 3 4\n", "trunc"), FormatError);
}

TEST_CASE("in-vocab lookup returns the stored vector exactly") {
    EmbeddingModel m = load_embedding_model(kFixtureModel, "fixture");
    auto v = embed(m, "beta");
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<double>{0, 1, 0, 0});
}

TEST_CASE("in-vocab lookup never touches the n-gram table") {
    EmbeddingModel m = load_embedding_model(kFixtureModel, "fixture");
    // poison every n-gram of "<alpha>"; the vocab vector must still win
    for (auto& [key, vec] : m.ngrams) vec.assign(4, 1e9);
    std::string marked = "<alpha>";
    for (std::size_t start = 0; start + 3 <= marked.size(); ++start)
        m.ngrams[marked.substr(start, 3)] = std::vector<double>(4, 1e9);
    auto v = embed(m, "alpha");
    REQUIRE(v.has_value());
    CHECK(*v == std::vector<double>{1, 0, 0, 0});
}

TEST_CASE("oov composition averages the stored n-grams of <token>") {
    EmbeddingModel m = load_embedding_model(kFixtureModel, "fixture");
    // "<ab>" has 3-grams {"<ab", "ab>"}; both stored
    auto v = embed(m, "ab");
    REQUIRE(v.has_value());
    CHECK((*v)[0] == doctest::Approx(0.25));
    CHECK((*v)[1] == doctest::Approx(0.25));
    CHECK((*v)[2] == doctest::Approx(0.25));
    CHECK((*v)[3] == doctest::Approx(0.25));
}

TEST_CASE("oov with no stored n-gram is absent") {
    EmbeddingModel m = load_embedding_model(kFixtureModel, "fixture");
    CHECK_FALSE(embed(m, "zz").has_value());
}

TEST_CASE("bucketed n-gram keys use fnv1a64 mod buckets") {
    const std::uint64_t b1 = io::fnv1a64("<ab") % 16;
    const std::uint64_t b2 = io::fnv1a64("ab>") % 16;
    EmbeddingModel m;
    m.dim = 2;
    m.min_n = 3;
    m.max_n = 3;
    m.buckets = 16;
    m.ngram_buckets[b1] = {1.0, 0.0};
    m.ngram_buckets[b2] = {0.0, 1.0};

    auto v = embed(m, "ab");
    REQUIRE(v.has_value());
    if (b1 != b2) {
        CHECK((*v)[0] == doctest::Approx(0.5));
        CHECK((*v)[1] == doctest::Approx(0.5));
    }

    std::string text = write_embedding_model(m);
    EmbeddingModel back = load_embedding_model(text, "roundtrip");
    CHECK(back.buckets == 16);
    CHECK(back.ngram_buckets == m.ngram_buckets);

    CHECK_THROWS_AS(load_embedding_model("2 3 3 0 1 4\n#notanint 1 2\n", "badbucket"),
                    FormatError);
    CHECK_THROWS_AS(load_embedding_model("2 3 3 0 1 4\n#9 1 2\n", "oob"), FormatError);
}

TEST_CASE("model write/read round-trip") {
    EmbeddingModel m = load_embedding_model(kFixtureModel, "fixture");
    std::string text = write_embedding_model(m);
    EmbeddingModel back = load_embedding_model(text, "roundtrip");
    CHECK(back.vocab == m.vocab);
    CHECK(back.ngrams == m.ngrams);
    CHECK(back.dim == m.dim);
}

TEST_CASE("multiplicity: repeated n-grams count per occurrence") {
    EmbeddingModel m;
    m.dim = 1;
    m.min_n = 3;
    m.max_n = 3;
    m.ngrams["aaa"] = {3.0};
    m.ngrams["<aa"] = {0.0};
    // "<aaaa>" 3-grams: <aa, aaa, aaa, aa> ; "aa>" missing
    auto v = embed(m, "aaaa");
    REQUIRE(v.has_value());
    CHECK((*v)[0] == doctest::Approx(2.0));  // (0 + 3 + 3) / 3
}
