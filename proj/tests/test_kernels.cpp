#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "reposim/kernels.hpp"
#include "reposim/rng.hpp"

using namespace reposim;

namespace {

std::vector<double> random_vec(std::mt19937_64& gen, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng::gaussian(gen);
    return v;
}

}  // namespace

TEST_CASE("dot and squared_norm basics") {
    std::vector<double> a{1.0, 2.0, 3.0};
    std::vector<double> b{4.0, 5.0, 6.0};
    CHECK(kernels::dot(a, b) == doctest::Approx(32.0));
    CHECK(kernels::squared_norm(a) == doctest::Approx(14.0));
    CHECK(kernels::dot(a, a) == doctest::Approx(kernels::squared_norm(a)));

    std::vector<double> empty;
    CHECK(kernels::dot(empty, empty) == 0.0);
}

TEST_CASE("normalize") {
    std::vector<double> v{3.0, 4.0};
    REQUIRE(kernels::normalize(v));
    CHECK(v[0] == doctest::Approx(0.6));
    CHECK(v[1] == doctest::Approx(0.8));
    CHECK(kernels::norm(v) == doctest::Approx(1.0));

    std::vector<double> zero{0.0, 0.0};
    CHECK_FALSE(kernels::normalize(zero));
    CHECK(zero[0] == 0.0);
}

TEST_CASE("scalar and simd backends agree") {
    const kernels::Backend original = kernels::active_backend();
    if (!kernels::set_backend(kernels::Backend::avx2)) {
        MESSAGE("avx2 backend unavailable on this CPU; skipping equivalence");
        return;
    }

    std::mt19937_64 gen(7);
    for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 16u, 100u, 255u, 256u}) {
        std::vector<double> a = random_vec(gen, n);
        std::vector<double> b = random_vec(gen, n);

        kernels::set_backend(kernels::Backend::avx2);
        double dot_simd = kernels::dot(a, b);
        double sq_simd = kernels::squared_norm(a);
        std::vector<double> add_simd = a;
        kernels::add(add_simd, b);
        std::vector<double> scale_simd = a;
        kernels::scale(scale_simd, 3.25);

        kernels::set_backend(kernels::Backend::scalar);
        double dot_ref = kernels::dot(a, b);
        double sq_ref = kernels::squared_norm(a);
        std::vector<double> add_ref = a;
        kernels::add(add_ref, b);
        std::vector<double> scale_ref = a;
        kernels::scale(scale_ref, 3.25);

        CHECK(dot_simd == doctest::Approx(dot_ref).epsilon(1e-12));
        CHECK(sq_simd == doctest::Approx(sq_ref).epsilon(1e-12));
        for (std::size_t i = 0; i < n; ++i) {
            // add and scale are elementwise; the variants must agree bitwise
            CHECK(add_simd[i] == add_ref[i]);
            CHECK(scale_simd[i] == scale_ref[i]);
        }
    }
    kernels::set_backend(original);
}

TEST_CASE("backend forcing is sticky and reset restores detection") {
    const kernels::Backend detected = kernels::active_backend();
    REQUIRE(kernels::set_backend(kernels::Backend::scalar));
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    kernels::reset_backend();
    CHECK(kernels::active_backend() == detected);
}

TEST_CASE("backend name strings") {
    CHECK(kernels::backend_name(kernels::Backend::scalar) == "scalar");
    CHECK(kernels::backend_name(kernels::Backend::avx2) == "avx2");
}
