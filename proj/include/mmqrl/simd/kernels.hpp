#pragma once

#include <cstddef>

// Data-parallel inner loops used by the feature search and the networks.
// Scalar reference kernels always exist; AVX2+FMA variants are selected at
// runtime when the CPU supports them. Both variants are exported so the
// equivalence tests can compare them directly.

namespace mmqrl::simd {

namespace scalar {
float dot(const float* a, const float* b, std::size_t n);
float squared_distance(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
// y = W x + bias; W is row-major m x n; bias may be null.
void gemv(const float* w, const float* x, const float* bias, float* y, std::size_t m, std::size_t n);
void relu(float* x, std::size_t n);
// g *= (pre > 0)
void relu_backward(const float* pre, float* g, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool compiled();  // true when this build carries AVX2 variants
float dot(const float* a, const float* b, std::size_t n);
float squared_distance(const float* a, const float* b, std::size_t n);
void axpy(float alpha, const float* x, float* y, std::size_t n);
void gemv(const float* w, const float* x, const float* bias, float* y, std::size_t m, std::size_t n);
void relu(float* x, std::size_t n);
void relu_backward(const float* pre, float* g, std::size_t n);
}  // namespace avx2

// Runtime-dispatched entry points (resolved once at startup).
extern float (*dot)(const float*, const float*, std::size_t);
extern float (*squared_distance)(const float*, const float*, std::size_t);
extern void (*axpy)(float, const float*, float*, std::size_t);
extern void (*gemv)(const float*, const float*, const float*, float*, std::size_t, std::size_t);
extern void (*relu)(float*, std::size_t);
extern void (*relu_backward)(const float*, float*, std::size_t);

// "avx2" or "scalar".
const char* active_isa();

// Generic helpers so double-precision code paths (gradient checks) share the
// same call sites; the float specialization routes through the dispatcher.
template <typename T>
inline T k_dot(const T* a, const T* b, std::size_t n) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}
template <>
inline float k_dot<float>(const float* a, const float* b, std::size_t n) {
    return dot(a, b, n);
}

template <typename T>
inline void k_axpy(T alpha, const T* x, T* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}
template <>
inline void k_axpy<float>(float alpha, const float* x, float* y, std::size_t n) {
    axpy(alpha, x, y, n);
}

template <typename T>
inline void k_gemv(const T* w, const T* x, const T* bias, T* y, std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        T s = bias ? bias[i] : T{};
        s += k_dot(w + i * n, x, n);
        y[i] = s;
    }
}
template <>
inline void k_gemv<float>(const float* w, const float* x, const float* bias, float* y,
                          std::size_t m, std::size_t n) {
    gemv(w, x, bias, y, m, n);
}

template <typename T>
inline void k_relu(T* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] = x[i] > T{} ? x[i] : T{};
}
template <>
inline void k_relu<float>(float* x, std::size_t n) {
    relu(x, n);
}

template <typename T>
inline void k_relu_backward(const T* pre, T* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(pre[i] > T{})) g[i] = T{};
    }
}
template <>
inline void k_relu_backward<float>(const float* pre, float* g, std::size_t n) {
    relu_backward(pre, g, n);
}

}  // namespace mmqrl::simd
