#include <doctest.h>

#include <fstream>

#include "reposim/errors.hpp"
#include "reposim/stemmer.hpp"
#include "reposim/token_stats.hpp"
#include "testutil.hpp"

using namespace reposim;
using testutil::TempDir;
using testutil::write_file;

TEST_CASE("tokenize_project composes the pipeline stages") {
    TempDir tmp("tok-basic");
    write_file(tmp.path / "proj" / "main.py", "def get_value(): pass\n");
    TokenStats stats = tokenize_project(tmp.path / "proj", "proj");
    CHECK(stats.project_id == "proj");
    CHECK(stats.total == 2);
    REQUIRE(stats.counts.size() == 2);
    CHECK(stats.counts.at("get") == 1);
    CHECK(stats.counts.at("value") == 1);
}

TEST_CASE("unsupported-only directory raises EmptyProject") {
    TempDir tmp("tok-empty");
    write_file(tmp.path / "proj" / "README.md", "# just docs\n");
    CHECK_THROWS_AS(tokenize_project(tmp.path / "proj", "proj"), EmptyProject);
}

TEST_CASE("missing root raises IoError") {
    CHECK_THROWS_AS(tokenize_project("/no/such/dir/anywhere", "x"), IoError);
}

TEST_CASE("determinism across runs") {
    TempDir tmp("tok-deter");
    write_file(tmp.path / "p" / "a.py", "alpha_value = beta_count\n");
    write_file(tmp.path / "p" / "b.go", "package p\nvar gammaTotal int\n");
    TokenStats first = tokenize_project(tmp.path / "p", "p");
    TokenStats second = tokenize_project(tmp.path / "p", "p");
    CHECK(first.counts == second.counts);
    CHECK(first.total == second.total);
}

TEST_CASE("merge_counts is commutative") {
    TokenStats a{"x", {{"foo", 2}, {"bar", 1}}, 3};
    TokenStats b{"x", {{"bar", 4}, {"baz", 5}}, 9};
    TokenStats ab = a;
    merge_counts(ab, b);
    TokenStats ba = b;
    merge_counts(ba, a);
    CHECK(ab.counts == ba.counts);
    CHECK(ab.total == ba.total);
    CHECK(ab.total == 12);
}

TEST_CASE("skip rules: hidden dirs, ignore list, size cap, binary") {
    TempDir tmp("tok-skip");
    write_file(tmp.path / "p" / "keep.py", "kept_name = 1\n");
    write_file(tmp.path / "p" / ".hidden" / "skipme.py", "hidden_name = 1\n");
    write_file(tmp.path / "p" / "node_modules" / "dep.js", "var depName = 1;\n");
    write_file(tmp.path / "p" / "custom" / "extra.py", "extra_name = 1\n");
    std::string big = "big_name = 1\n";
    big.append(3000, '#');
    write_file(tmp.path / "p" / "big.py", big);
    write_file(tmp.path / "p" / "binary.py", std::string("bin\0name", 8));

    TokenizeOptions opt;
    opt.max_file_size = 1024;
    opt.ignore_dirs.push_back("custom");
    TokenStats stats = tokenize_project(tmp.path / "p", "p", opt);
    CHECK(stats.counts.count("kept") == 1);
    CHECK(stats.counts.count("hidden") == 0);
    CHECK(stats.counts.count("dep") == 0);
    CHECK(stats.counts.count("extra") == 0);
    CHECK(stats.counts.count("big") == 0);
    CHECK(stats.counts.count("bin") == 0);
}

TEST_CASE("symlinks are not followed") {
    TempDir tmp("tok-link");
    write_file(tmp.path / "outside" / "loop.py", "outside_name = 1\n");
    write_file(tmp.path / "p" / "real.py", "real_name = 1\n");
    std::error_code ec;
    std::filesystem::create_directory_symlink(tmp.path / "outside", tmp.path / "p" / "link", ec);
    if (ec) {
        MESSAGE("symlink creation unsupported here; skipping");
        return;
    }
    TokenStats stats = tokenize_project(tmp.path / "p", "p");
    CHECK(stats.counts.count("real") == 1);
    CHECK(stats.counts.count("outside") == 0);
    CHECK(stats.counts.count("outsid") == 0);
}

TEST_CASE("token stats io round-trip and format errors") {
    TokenStats a{"alpha", {{"foo", 2}, {"bar", 1}}, 3};
    TokenStats b{"beta", {{"baz", 7}}, 7};
    std::string text = write_token_stats({a, b});
    auto back = read_token_stats(text, "test");
    REQUIRE(back.size() == 2);
    CHECK(back[0].project_id == "alpha");
    CHECK(back[0].counts == a.counts);
    CHECK(back[1].total == 7);

    CHECK_THROWS_AS(read_token_stats("onlyone 1\n", "x"), FormatError);
    CHECK_THROWS_AS(read_token_stats("p 3 1 foo 2\n", "x"), FormatError);     // total mismatch
    CHECK_THROWS_AS(read_token_stats("p 2 1 foo 2 bar 1\n", "x"), FormatError);  // field count
    CHECK_THROWS_AS(read_token_stats("p 0 1 foo 0\n", "x"), FormatError);     // zero count
}

TEST_CASE("emitted keys are lowercase and counts sum to the total") {
    // Note: emitted keys are stems, but stems are not re-stemming fixpoints
    // (Snowball maps "response" to "respons" and "respons" to "respon"), so
    // only single-pass stemming at build time is asserted, via the pipeline
    // tests in test_subtokens.cpp.
    for (const TokenStats& stats : testutil::corpus_token_stats()) {
        std::uint64_t sum = 0;
        for (const auto& [key, count] : stats.counts) {
            CAPTURE(key);
            CHECK(count >= 1);
            CHECK_FALSE(key.empty());
            sum += count;
            for (char c : key) CHECK_FALSE((c >= 'A' && c <= 'Z'));
        }
        CHECK(sum == stats.total);
    }
}
