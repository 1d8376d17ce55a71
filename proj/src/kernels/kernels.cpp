#include "reposim/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace reposim::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double squared_norm_scalar(const double* v, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * v[i];
    return s;
}

void add_scalar(double* acc, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

void scale_scalar(double* v, double s, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) v[i] *= s;
}

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    double (*squared_norm)(const double*, std::size_t);
    void (*add)(double*, const double*, std::size_t);
    void (*scale)(double*, double, std::size_t);
};

constexpr Ops kScalarOps{dot_scalar, squared_norm_scalar, add_scalar, scale_scalar};

bool avx2_supported() {
#if defined(REPOSIM_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

// REPOSIM_KERNEL=scalar|avx2 overrides detection (ignored if unsupported).
Backend detect_backend() {
    const char* env = std::getenv("REPOSIM_KERNEL");
    if (env && std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (env && std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::avx2;
    return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Ops ops_for(Backend b);

Backend g_backend = detect_backend();
Ops g_ops = ops_for(g_backend);

}  // namespace

#if defined(REPOSIM_HAVE_AVX2)
namespace detail {
double dot_avx2(const double* a, const double* b, std::size_t n);
double squared_norm_avx2(const double* v, std::size_t n);
void add_avx2(double* acc, const double* x, std::size_t n);
void scale_avx2(double* v, double s, std::size_t n);
}  // namespace detail
#endif

namespace {
Ops ops_for(Backend b) {
#if defined(REPOSIM_HAVE_AVX2)
    if (b == Backend::avx2)
        return Ops{detail::dot_avx2, detail::squared_norm_avx2, detail::add_avx2,
                   detail::scale_avx2};
#else
    (void)b;
#endif
    return kScalarOps;
}
}  // namespace

Backend active_backend() { return g_backend; }

std::string_view backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

bool set_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_supported()) return false;
    g_backend = b;
    g_ops = ops_for(b);
    return true;
}

void reset_backend() {
    g_backend = detect_backend();
    g_ops = ops_for(g_backend);
}

double dot(const double* a, const double* b, std::size_t n) { return g_ops.dot(a, b, n); }
double squared_norm(const double* v, std::size_t n) { return g_ops.squared_norm(v, n); }
void add(double* acc, const double* x, std::size_t n) { g_ops.add(acc, x, n); }
void scale(double* v, double s, std::size_t n) { g_ops.scale(v, s, n); }

double norm(std::span<const double> v) { return std::sqrt(squared_norm(v)); }

bool normalize(std::span<double> v) {
    double n = norm(v);
    if (n == 0.0) return false;
    scale(v, 1.0 / n);
    return true;
}

}  // namespace reposim::kernels
