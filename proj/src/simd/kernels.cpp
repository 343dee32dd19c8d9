#include "mmqrl/simd/kernels.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace mmqrl::simd {

namespace scalar {

float dot(const float* a, const float* b, std::size_t n) {
    float s = 0.0f;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

float squared_distance(const float* a, const float* b, std::size_t n) {
    float s = 0.0f;
    for (std::size_t i = 0; i < n; ++i) {
        const float d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void axpy(float alpha, const float* x, float* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void gemv(const float* w, const float* x, const float* bias, float* y, std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        float s = bias ? bias[i] : 0.0f;
        const float* row = w + i * n;
        for (std::size_t j = 0; j < n; ++j) s += row[j] * x[j];
        y[i] = s;
    }
}

void relu(float* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

void relu_backward(const float* pre, float* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(pre[i] > 0.0f)) g[i] = 0.0f;
    }
}

}  // namespace scalar

#if defined(__x86_64__)

namespace avx2 {

bool compiled() { return true; }

namespace {

__attribute__((target("avx2,fma"))) inline float hsum256(__m256 v) {
    __m128 lo = _mm256_castps256_ps128(v);
    __m128 hi = _mm256_extractf128_ps(v, 1);
    lo = _mm_add_ps(lo, hi);
    lo = _mm_hadd_ps(lo, lo);
    lo = _mm_hadd_ps(lo, lo);
    return _mm_cvtss_f32(lo);
}

}  // namespace

__attribute__((target("avx2,fma"))) float dot(const float* a, const float* b, std::size_t n) {
    __m256 acc0 = _mm256_setzero_ps();
    __m256 acc1 = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
        acc1 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8), acc1);
    }
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i), acc0);
    }
    float s = hsum256(_mm256_add_ps(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

__attribute__((target("avx2,fma"))) float squared_distance(const float* a, const float* b, std::size_t n) {
    __m256 acc0 = _mm256_setzero_ps();
    __m256 acc1 = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256 d0 = _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i));
        const __m256 d1 = _mm256_sub_ps(_mm256_loadu_ps(a + i + 8), _mm256_loadu_ps(b + i + 8));
        acc0 = _mm256_fmadd_ps(d0, d0, acc0);
        acc1 = _mm256_fmadd_ps(d1, d1, acc1);
    }
    for (; i + 8 <= n; i += 8) {
        const __m256 d = _mm256_sub_ps(_mm256_loadu_ps(a + i), _mm256_loadu_ps(b + i));
        acc0 = _mm256_fmadd_ps(d, d, acc0);
    }
    float s = hsum256(_mm256_add_ps(acc0, acc1));
    for (; i < n; ++i) {
        const float d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

__attribute__((target("avx2,fma"))) void axpy(float alpha, const float* x, float* y, std::size_t n) {
    const __m256 va = _mm256_set1_ps(alpha);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(y + i, _mm256_fmadd_ps(va, _mm256_loadu_ps(x + i), _mm256_loadu_ps(y + i)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

__attribute__((target("avx2,fma"))) void gemv(const float* w, const float* x, const float* bias,
                                              float* y, std::size_t m, std::size_t n) {
    std::size_t i = 0;
    // Two rows per pass reuses the loaded x vector.
    for (; i + 2 <= m; i += 2) {
        const float* r0 = w + i * n;
        const float* r1 = r0 + n;
        __m256 a0 = _mm256_setzero_ps();
        __m256 a1 = _mm256_setzero_ps();
        std::size_t j = 0;
        for (; j + 8 <= n; j += 8) {
            const __m256 xv = _mm256_loadu_ps(x + j);
            a0 = _mm256_fmadd_ps(_mm256_loadu_ps(r0 + j), xv, a0);
            a1 = _mm256_fmadd_ps(_mm256_loadu_ps(r1 + j), xv, a1);
        }
        float s0 = hsum256(a0);
        float s1 = hsum256(a1);
        for (; j < n; ++j) {
            s0 += r0[j] * x[j];
            s1 += r1[j] * x[j];
        }
        y[i] = s0 + (bias ? bias[i] : 0.0f);
        y[i + 1] = s1 + (bias ? bias[i + 1] : 0.0f);
    }
    if (i < m) {
        float s = dot(w + i * n, x, n);
        y[i] = s + (bias ? bias[i] : 0.0f);
    }
}

__attribute__((target("avx2,fma"))) void relu(float* x, std::size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_ps(x + i, _mm256_max_ps(_mm256_loadu_ps(x + i), zero));
    }
    for (; i < n; ++i) x[i] = x[i] > 0.0f ? x[i] : 0.0f;
}

__attribute__((target("avx2,fma"))) void relu_backward(const float* pre, float* g, std::size_t n) {
    const __m256 zero = _mm256_setzero_ps();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256 mask = _mm256_cmp_ps(_mm256_loadu_ps(pre + i), zero, _CMP_GT_OQ);
        _mm256_storeu_ps(g + i, _mm256_and_ps(_mm256_loadu_ps(g + i), mask));
    }
    for (; i < n; ++i) {
        if (!(pre[i] > 0.0f)) g[i] = 0.0f;
    }
}

}  // namespace avx2

#else  // !__x86_64__

namespace avx2 {
bool compiled() { return false; }
float dot(const float* a, const float* b, std::size_t n) { return scalar::dot(a, b, n); }
float squared_distance(const float* a, const float* b, std::size_t n) {
    return scalar::squared_distance(a, b, n);
}
void axpy(float alpha, const float* x, float* y, std::size_t n) { scalar::axpy(alpha, x, y, n); }
void gemv(const float* w, const float* x, const float* bias, float* y, std::size_t m, std::size_t n) {
    scalar::gemv(w, x, bias, y, m, n);
}
void relu(float* x, std::size_t n) { scalar::relu(x, n); }
void relu_backward(const float* pre, float* g, std::size_t n) { scalar::relu_backward(pre, g, n); }
}  // namespace avx2

#endif

namespace {

bool runtime_has_avx2() {
#if defined(__x86_64__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const bool g_use_avx2 = avx2::compiled() && runtime_has_avx2();

}  // namespace

float (*dot)(const float*, const float*, std::size_t) = g_use_avx2 ? avx2::dot : scalar::dot;
float (*squared_distance)(const float*, const float*, std::size_t) =
    g_use_avx2 ? avx2::squared_distance : scalar::squared_distance;
void (*axpy)(float, const float*, float*, std::size_t) = g_use_avx2 ? avx2::axpy : scalar::axpy;
void (*gemv)(const float*, const float*, const float*, float*, std::size_t, std::size_t) =
    g_use_avx2 ? avx2::gemv : scalar::gemv;
void (*relu)(float*, std::size_t) = g_use_avx2 ? avx2::relu : scalar::relu;
void (*relu_backward)(const float*, float*, std::size_t) =
    g_use_avx2 ? avx2::relu_backward : scalar::relu_backward;

const char* active_isa() { return g_use_avx2 ? "avx2" : "scalar"; }

}  // namespace mmqrl::simd
