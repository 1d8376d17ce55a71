#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "reposim/errors.hpp"
#include "reposim/rng.hpp"
#include "reposim/search_index.hpp"
#include "testutil.hpp"

using namespace reposim;

namespace {

DistributionSet random_set(std::size_t n, std::size_t k, std::uint64_t seed) {
    DistributionSet set;
    set.k = k;
    set.model_checksum = "fixture";
    for (std::size_t i = 0; i < n; ++i) {
        ProjectDistribution d;
        d.project_id = "ref" + std::to_string(1000 + i);
        d.probs = testutil::random_distribution(k, rng::mix_seed(seed, i));
        d.covered = 100;
        set.items.push_back(std::move(d));
    }
    return set;
}

// Brute-force oracle: sort by D_KL ascending with id tie-break, computed
// term by term without the index machinery.
std::vector<std::string> kl_oracle_ranking(const ProjectDistribution& q,
                                           const DistributionSet& refs, double eps) {
    const std::size_t k = refs.k;
    auto smooth_vec = [&](const std::vector<double>& p) {
        std::vector<double> out(k);
        for (std::size_t c = 0; c < k; ++c) out[c] = (p[c] + eps) / (1.0 + k * eps);
        return out;
    };
    std::vector<double> qs = smooth_vec(q.probs);
    std::vector<std::pair<double, std::string>> ranked;
    for (const auto& r : refs.items) {
        std::vector<double> rs = smooth_vec(r.probs);
        double div = 0.0;
        for (std::size_t c = 0; c < k; ++c)
            if (qs[c] > 0.0) div += qs[c] * std::log(qs[c] / rs[c]);
        ranked.emplace_back(div, r.project_id);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<std::string> ids;
    for (auto& [_, id] : ranked) ids.push_back(id);
    return ids;
}

}  // namespace

TEST_CASE("kl_divergence: hand values and edge cases") {
    std::vector<double> half{0.5, 0.5};
    CHECK(kl_divergence(half, half) == doctest::Approx(0.0).epsilon(1e-15));

    std::vector<double> onehot{1.0, 0.0};
    std::vector<double> r1{0.75, 0.25};
    CHECK(kl_divergence(onehot, r1) == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-12));

    std::vector<double> r2{0.25, 0.75};
    CHECK(kl_divergence(half, r2) ==
          doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0)).epsilon(1e-12));

    std::vector<double> bad{0.5, 0.0};
    CHECK_THROWS_AS(kl_divergence(half, bad), DomainError);
    std::vector<double> three{0.2, 0.3, 0.5};
    CHECK_THROWS_AS(kl_divergence(half, three), DimensionMismatch);
}

TEST_CASE("gibbs inequality on random smoothed pairs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto p = testutil::random_distribution(8, seed);
        auto r = testutil::random_distribution(8, seed + 1000);
        CHECK(kl_divergence(p, r) >= -1e-12);
    }
    auto p = testutil::random_distribution(8, 7);
    CHECK(kl_divergence(p, p) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("build_index: cosine rows are normalized") {
    DistributionSet set;
    set.k = 2;
    set.model_checksum = "c";
    set.items.push_back({"only", {0.5, 0.5}, 2, 0});
    SearchIndex idx = build_index(set, SimilarityMode::cosine, 1e-6);
    CHECK(idx.rows[0][0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(idx.rows[0][1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("build_index: kl rows are logs of the smoothed distribution") {
    DistributionSet set;
    set.k = 2;
    set.model_checksum = "c";
    set.items.push_back({"onehot", {1.0, 0.0}, 2, 0});
    SearchIndex idx = build_index(set, SimilarityMode::kl, 0.5);
    CHECK(idx.rows[0][0] == doctest::Approx(std::log(0.75)).epsilon(1e-12));
    CHECK(idx.rows[0][1] == doctest::Approx(std::log(0.25)).epsilon(1e-12));
}

TEST_CASE("build_index errors") {
    DistributionSet empty;
    empty.k = 2;
    CHECK_THROWS_AS(build_index(empty, SimilarityMode::kl, 1e-6), EmptyIndex);

    DistributionSet mixed;
    mixed.k = 2;
    mixed.items.push_back({"a", {1.0, 0.0}, 1, 0});
    mixed.items.push_back({"b", {0.5, 0.25, 0.25}, 1, 0});
    CHECK_THROWS_AS(build_index(mixed, SimilarityMode::kl, 1e-6), DimensionMismatch);
}

TEST_CASE("self-query ranks itself first in both modes") {
    DistributionSet set = random_set(20, 6, 99);
    const ProjectDistribution& target = set.items[7];

    SearchIndex cos = build_index(set, SimilarityMode::cosine, 1e-6);
    auto r1 = query(cos, target, set.items.size());
    REQUIRE(!r1.empty());
    CHECK(r1[0].project_id == target.project_id);
    CHECK(r1[0].score == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1[0].rank == 1);
    for (const auto& r : r1) {  // nonnegative vectors keep cosine in [0, 1]
        CHECK(r.score >= 0.0);
        CHECK(r.score <= 1.0 + 1e-12);
    }

    SearchIndex kl = build_index(set, SimilarityMode::kl, 1e-6);
    auto r2 = query(kl, target, 3);
    CHECK(r2[0].project_id == target.project_id);
    // D_KL(q'||q') = sum q' log q' - score = 0
    std::vector<double> qs = prepare_query_vector(kl, target, 1e-6);
    double entropy = 0.0;
    for (double p : qs) entropy += p * std::log(p);
    CHECK(entropy - r2[0].score == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("kl-mode ranking equals the brute-force divergence ranking") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        DistributionSet set = random_set(60, 12, seed);
        SearchIndex idx = build_index(set, SimilarityMode::kl, 1e-6);
        ProjectDistribution q{"query", testutil::random_distribution(12, seed * 77), 10, 0};

        auto results = query(idx, q, set.items.size());
        auto oracle = kl_oracle_ranking(q, set, 1e-6);
        REQUIRE(results.size() == oracle.size());
        for (std::size_t i = 0; i < results.size(); ++i) {
            CAPTURE(seed);
            CAPTURE(i);
            CHECK(results[i].project_id == oracle[i]);
        }
    }
}

TEST_CASE("tie-break on equal scores is id-ascending") {
    DistributionSet set;
    set.k = 2;
    set.model_checksum = "c";
    set.items.push_back({"zeta", {0.5, 0.5}, 1, 0});
    set.items.push_back({"alpha", {0.5, 0.5}, 1, 0});
    SearchIndex idx = build_index(set, SimilarityMode::cosine, 1e-6);
    ProjectDistribution q{"q", {0.5, 0.5}, 1, 0};
    auto results = query(idx, q, 2);
    CHECK(results[0].project_id == "alpha");
    CHECK(results[1].project_id == "zeta");
    CHECK(results[0].rank == 1);
    CHECK(results[1].rank == 2);
}

TEST_CASE("query dimension mismatch") {
    DistributionSet set = random_set(4, 5, 2);
    SearchIndex idx = build_index(set, SimilarityMode::cosine, 1e-6);
    ProjectDistribution q{"q", {0.5, 0.5}, 1, 0};
    CHECK_THROWS_AS(query(idx, q, 2), DimensionMismatch);
}

TEST_CASE("adding references never reorders existing ones") {
    DistributionSet small = random_set(15, 6, 5);
    DistributionSet grown = small;
    DistributionSet extra = random_set(10, 6, 777);
    for (auto& d : extra.items) {
        d.project_id = "zzz_new_" + d.project_id;
        grown.items.push_back(d);
    }
    ProjectDistribution q{"q", testutil::random_distribution(6, 31), 10, 0};

    for (auto mode : {SimilarityMode::kl, SimilarityMode::cosine}) {
        auto before = query(build_index(small, mode, 1e-6), q, small.items.size());
        auto after = query(build_index(grown, mode, 1e-6), q, grown.items.size());
        std::vector<std::string> before_ids, after_filtered;
        for (const auto& r : before) before_ids.push_back(r.project_id);
        for (const auto& r : after)
            if (!r.project_id.starts_with("zzz_new_")) after_filtered.push_back(r.project_id);
        CHECK(before_ids == after_filtered);
    }
}

TEST_CASE("index io round-trip") {
    DistributionSet set = random_set(6, 4, 12);
    for (auto mode : {SimilarityMode::kl, SimilarityMode::cosine}) {
        SearchIndex idx = build_index(set, mode, 1e-4);
        std::string text = write_index(idx);
        SearchIndex back = read_index(text, "rt");
        CHECK(back.mode == idx.mode);
        CHECK(back.k == idx.k);
        CHECK(back.epsilon == idx.epsilon);
        CHECK(back.model_checksum == idx.model_checksum);
        CHECK(back.ids == idx.ids);
        CHECK(back.rows == idx.rows);
    }
    CHECK_THROWS_AS(read_index("", "x"), FormatError);
    CHECK_THROWS_AS(read_index("kl 2 1 0.5 c\np 0.5 -1\n", "x"), FormatError);  // positive log
}

TEST_CASE("coarse partition: probing everything reproduces the exact scan") {
    DistributionSet set = random_set(80, 8, 3);
    for (auto mode : {SimilarityMode::kl, SimilarityMode::cosine}) {
        SearchIndex idx = build_index(set, mode, 1e-6);
        build_coarse_partition(idx, 17);
        REQUIRE(idx.coarse.has_value());
        std::size_t cells = idx.coarse->cell_centroids.size();

        ProjectDistribution q{"q", testutil::random_distribution(8, 55), 10, 0};
        auto exact = query(idx, q, 10);
        auto full_probe = query_approx(idx, q, 10, 1e-6, cells);
        REQUIRE(exact.size() == full_probe.size());
        for (std::size_t i = 0; i < exact.size(); ++i) {
            CHECK(exact[i].project_id == full_probe[i].project_id);
            CHECK(exact[i].score == full_probe[i].score);
        }
    }
}

TEST_CASE("coarse partition recall is monotone in probes") {
    DistributionSet set = random_set(100, 8, 21);
    SearchIndex idx = build_index(set, SimilarityMode::cosine, 1e-6);
    build_coarse_partition(idx, 17);
    std::size_t cells = idx.coarse->cell_centroids.size();
    ProjectDistribution q{"q", testutil::random_distribution(8, 91), 10, 0};

    auto exact = query(idx, q, 10);
    std::vector<std::string> truth;
    for (const auto& r : exact) truth.push_back(r.project_id);

    double last_recall = 0.0;
    for (std::size_t probes = 1; probes <= cells; ++probes) {
        auto approx = query_approx(idx, q, 10, 1e-6, probes);
        std::size_t hits = 0;
        for (const auto& r : approx)
            if (std::find(truth.begin(), truth.end(), r.project_id) != truth.end()) ++hits;
        double recall = static_cast<double>(hits) / static_cast<double>(truth.size());
        CHECK(recall >= last_recall - 1e-12);
        last_recall = recall;
    }
    CHECK(last_recall == doctest::Approx(1.0));
}
