#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Dense double-precision kernels used by the clustering and search inner
// loops. A scalar reference implementation is always available; an AVX2/FMA
// variant is selected at runtime when the CPU supports it. The two variants
// are equivalence-tested against each other (summation order differs, so
// results agree to rounding, not bitwise).

namespace reposim::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string_view backend_name(Backend b);

// Force a specific backend (used by tests and the --kernel flag).
// Returns false and leaves the selection unchanged if the CPU cannot run it.
bool set_backend(Backend b);

// Restore the auto-detected default.
void reset_backend();

double dot(const double* a, const double* b, std::size_t n);
double squared_norm(const double* v, std::size_t n);
void add(double* acc, const double* x, std::size_t n);
void scale(double* v, double s, std::size_t n);

inline double dot(std::span<const double> a, std::span<const double> b) {
    return dot(a.data(), b.data(), a.size());
}
inline double squared_norm(std::span<const double> v) {
    return squared_norm(v.data(), v.size());
}
inline void add(std::span<double> acc, std::span<const double> x) {
    add(acc.data(), x.data(), acc.size());
}
inline void scale(std::span<double> v, double s) { scale(v.data(), s, v.size()); }

double norm(std::span<const double> v);

// In-place L2 normalization. Returns false (vector untouched) on zero norm.
bool normalize(std::span<double> v);

inline double cosine(std::span<const double> a, std::span<const double> b) {
    return dot(a, b) / (norm(a) * norm(b));
}

}  // namespace reposim::kernels
