#pragma once

#include <cstddef>
#include <span>
#include <string>

// Small dense float kernels used by the profile sampling / realization paths.
// Scalar reference implementations and an AVX2 variant; the active variant is
// chosen once at startup (override with PROFILE_LAB_SIMD=scalar|avx2|auto).
// All exact counting is integer arithmetic elsewhere and never touches these.

namespace plab::kernels {

// out[j-1] = sum_i x[i]^j for j = 1..lmax.  lmax <= 16.
using PowerSumsFn = void (*)(const double* x, std::size_t n, int lmax, double* out);
// plain sum of n doubles
using SumFn = double (*)(const double* x, std::size_t n);
// max_i |a[i] - b[i]|
using MaxAbsDiffFn = double (*)(const double* a, const double* b, std::size_t n);

struct Kernels {
    PowerSumsFn power_sums;
    SumFn sum;
    MaxAbsDiffFn max_abs_diff;
    const char* name;
};

// Reference implementations (always available, used as equivalence oracle).
void power_sums_scalar(const double* x, std::size_t n, int lmax, double* out);
double sum_scalar(const double* x, std::size_t n);
double max_abs_diff_scalar(const double* a, const double* b, std::size_t n);

// Active dispatch table.
const Kernels& active();

// Convenience wrappers over the active table.
inline void power_sums(std::span<const double> x, int lmax, double* out) {
    active().power_sums(x.data(), x.size(), lmax, out);
}
inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    return active().max_abs_diff(a.data(), b.data(), a.size());
}

} // namespace plab::kernels
