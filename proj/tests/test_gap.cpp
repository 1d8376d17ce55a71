#include <doctest.h>

#include <random>

#include "reposim/clustering.hpp"
#include "reposim/errors.hpp"
#include "reposim/kernels.hpp"
#include "reposim/rng.hpp"
#include "testutil.hpp"

using namespace reposim;

namespace {

std::vector<std::vector<double>> uniform_sphere(std::size_t n, std::size_t dim,
                                                std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<std::vector<double>> pts(n);
    for (auto& p : pts) {
        p = rng::gaussian_vector(gen, dim);
        kernels::normalize(p);
    }
    return pts;
}

}  // namespace

TEST_CASE("single candidate yields a single entry") {
    auto pts = uniform_sphere(30, 4, 3);
    auto gaps = gap_statistic(pts, {2}, 3, 11);
    CHECK(gaps.size() == 1);
    CHECK(gaps.count(2) == 1);
    CHECK(select_k(gaps) == 2);

    auto k1 = gap_statistic(pts, {1}, 3, 11);
    CHECK(k1.size() == 1);
    CHECK(k1.count(1) == 1);
}

TEST_CASE("errors propagate") {
    CHECK_THROWS_AS(gap_statistic({}, {}, 3, 1), InsufficientPoints);
    auto pts = uniform_sphere(5, 4, 3);
    CHECK_THROWS_AS(gap_statistic(pts, {2}, 0, 1), InsufficientPoints);
    CHECK_THROWS_AS(gap_statistic(pts, {9}, 2, 1), InsufficientPoints);  // n < k
}

TEST_CASE("planted structure selects the planted k") {
    std::vector<std::uint32_t> truth;
    auto pts = testutil::planted_clusters(4, 50, 8, 0.08, 42, &truth);
    std::vector<std::size_t> candidates{2, 3, 4, 5, 6, 7, 8};
    auto gaps = gap_statistic(pts, candidates, 10, 42);
    CHECK(select_k(gaps) == 4);
}

TEST_CASE("structureless data keeps gaps near zero") {
    auto pts = uniform_sphere(120, 6, 2024);
    std::vector<std::size_t> candidates{2, 3, 4, 5, 6};
    auto gaps = gap_statistic(pts, candidates, 10, 7);
    for (const auto& [k, g] : gaps) {
        CAPTURE(k);
        CHECK(std::abs(g.gap) < 3.0 * g.se);
    }
}

TEST_CASE("gap results are seeded-deterministic") {
    auto pts = uniform_sphere(40, 5, 9);
    auto a = gap_statistic(pts, {2, 3}, 4, 123);
    auto b = gap_statistic(pts, {2, 3}, 4, 123);
    for (const auto& [k, g] : a) {
        CHECK(b.at(k).gap == g.gap);
        CHECK(b.at(k).se == g.se);
    }
}

TEST_CASE("select_k applies the one-standard-error rule") {
    std::map<std::size_t, GapPoint> gaps;
    gaps[2] = {0.10, 0.01};
    gaps[3] = {0.30, 0.01};
    gaps[4] = {0.31, 0.05};
    // gap(2) < gap(3)-se(3): move on; gap(3) >= gap(4)-se(4): pick 3
    CHECK(select_k(gaps) == 3);

    std::map<std::size_t, GapPoint> increasing;
    increasing[2] = {0.1, 0.001};
    increasing[3] = {0.5, 0.001};
    increasing[4] = {0.9, 0.001};
    CHECK(select_k(increasing) == 4);  // falls back to the largest candidate
}
