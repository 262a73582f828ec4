#include "profile_lab/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#define PLAB_X86 1
#include <immintrin.h>
#else
#define PLAB_X86 0
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define PLAB_NEON 1
#include <arm_neon.h>
#else
#define PLAB_NEON 0
#endif

namespace plab::kernels {

// ---------------------------------------------------------------------------
// scalar reference kernels
// ---------------------------------------------------------------------------

void power_sums_scalar(const double* x, std::size_t n, int lmax, double* out) {
    for (int j = 0; j < lmax; ++j) out[j] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double p = x[i];
        for (int j = 0; j < lmax; ++j) {
            out[j] += p;
            p *= x[i];
        }
    }
}

double sum_scalar(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double max_abs_diff_scalar(const double* a, const double* b, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > m) m = d;
    }
    return m;
}

// ---------------------------------------------------------------------------
// AVX2 kernels (x86-64). Compiled with target attributes so no special
// per-file flags are needed; only called after a cpuid check.
// ---------------------------------------------------------------------------

#if PLAB_X86

__attribute__((target("avx2,fma")))
static void power_sums_avx2(const double* x, std::size_t n, int lmax, double* out) {
    __m256d acc[16];
    for (int j = 0; j < lmax; ++j) acc[j] = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(&x[i]);
        __m256d p = v;
        for (int j = 0; j < lmax; ++j) {
            acc[j] = _mm256_add_pd(acc[j], p);
            p = _mm256_mul_pd(p, v);
        }
    }
    for (int j = 0; j < lmax; ++j) {
        alignas(32) double lane[4];
        _mm256_store_pd(lane, acc[j]);
        out[j] = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    }
    // remainder
    for (; i < n; ++i) {
        double p = x[i];
        for (int j = 0; j < lmax; ++j) {
            out[j] += p;
            p *= x[i];
        }
    }
}

__attribute__((target("avx2")))
static double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(&x[i]));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double s = (lane[0] + lane[1]) + (lane[2] + lane[3]);
    for (; i < n; ++i) s += x[i];
    return s;
}

__attribute__((target("avx2")))
static double max_abs_diff_avx2(const double* a, const double* b, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i]));
        m = _mm256_max_pd(m, _mm256_andnot_pd(signmask, d));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, m);
    double r = lane[0];
    if (lane[1] > r) r = lane[1];
    if (lane[2] > r) r = lane[2];
    if (lane[3] > r) r = lane[3];
    for (; i < n; ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > r) r = d;
    }
    return r;
}

#endif // PLAB_X86

// ---------------------------------------------------------------------------
// NEON kernels (aarch64)
// ---------------------------------------------------------------------------

#if PLAB_NEON

static void power_sums_neon(const double* x, std::size_t n, int lmax, double* out) {
    float64x2_t acc[16];
    for (int j = 0; j < lmax; ++j) acc[j] = vdupq_n_f64(0.0);

    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(&x[i]);
        float64x2_t p = v;
        for (int j = 0; j < lmax; ++j) {
            acc[j] = vaddq_f64(acc[j], p);
            p = vmulq_f64(p, v);
        }
    }
    for (int j = 0; j < lmax; ++j) out[j] = vgetq_lane_f64(acc[j], 0) + vgetq_lane_f64(acc[j], 1);
    for (; i < n; ++i) {
        double p = x[i];
        for (int j = 0; j < lmax; ++j) {
            out[j] += p;
            p *= x[i];
        }
    }
}

static double sum_neon(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(&x[i]));
    double s = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) s += x[i];
    return s;
}

static double max_abs_diff_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t m = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vabdq_f64(vld1q_f64(&a[i]), vld1q_f64(&b[i]));
        m = vmaxq_f64(m, d);
    }
    double r = vgetq_lane_f64(m, 0);
    if (vgetq_lane_f64(m, 1) > r) r = vgetq_lane_f64(m, 1);
    for (; i < n; ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > r) r = d;
    }
    return r;
}

#endif // PLAB_NEON

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

static const Kernels kScalar{power_sums_scalar, sum_scalar, max_abs_diff_scalar, "scalar"};
#if PLAB_X86
static const Kernels kAvx2{power_sums_avx2, sum_avx2, max_abs_diff_avx2, "avx2"};
#endif
#if PLAB_NEON
static const Kernels kNeon{power_sums_neon, sum_neon, max_abs_diff_neon, "neon"};
#endif

static Kernels select() {
    const char* env = std::getenv("PROFILE_LAB_SIMD");
    std::string want = env ? env : "auto";
    if (want == "scalar") return kScalar;
#if PLAB_X86
    if (want == "avx2") return kAvx2;
    if (want == "auto" && __builtin_cpu_supports("avx2")) return kAvx2;
#endif
#if PLAB_NEON
    if (want == "neon" || want == "auto") return kNeon;
#endif
    return kScalar;
}

const Kernels& active() {
    static const Kernels k = select();
    return k;
}

} // namespace plab::kernels
