#pragma once

#include <cstdint>
#include <string>

namespace ganext::kernels {

// Inner loops of the float32 hot path. Every primitive has a scalar reference
// implementation and an AVX2/FMA variant; the active variant is picked once at
// startup from cpuid and can be pinned for equivalence testing. The double
// overloads always use the scalar reference path (they exist for the float64
// gradient-check instantiation, not for speed).

enum class Backend { Scalar, Avx2 };

bool avx2_supported();
Backend active_backend();
void set_backend(Backend b);  // Scalar is always accepted; Avx2 requires support
std::string backend_name(Backend b);

struct Table {
    // dst[i] += a * x[i]
    void (*axpy)(float* dst, const float* x, float a, std::int64_t n);
    // dst[i] = a * x[i] + b * y[i]
    void (*axpby)(float* dst, const float* x, float a, const float* y, float b, std::int64_t n);
    // sum_i x[i] * y[i]
    float (*dot)(const float* x, const float* y, std::int64_t n);
    // sum_i x[i]
    float (*sum)(const float* x, std::int64_t n);
    // sum_i x[i]^2
    float (*sum_sq)(const float* x, std::int64_t n);
    // dst[i] *= a
    void (*scale)(float* dst, float a, std::int64_t n);
    // dst[i] = x[i] + y[i] ; dst may alias x
    void (*vadd)(float* dst, const float* x, const float* y, std::int64_t n);
    void (*vsub)(float* dst, const float* x, const float* y, std::int64_t n);
    void (*vmul)(float* dst, const float* x, const float* y, std::int64_t n);
    // sum_i |x[i] - y[i]|
    float (*l1_dist)(const float* x, const float* y, std::int64_t n);
};

const Table& table();

// Dispatched float primitives.
inline void axpy(float* dst, const float* x, float a, std::int64_t n) { table().axpy(dst, x, a, n); }
inline void axpby(float* dst, const float* x, float a, const float* y, float b, std::int64_t n) {
    table().axpby(dst, x, a, y, b, n);
}
inline float dot(const float* x, const float* y, std::int64_t n) { return table().dot(x, y, n); }
inline float sum(const float* x, std::int64_t n) { return table().sum(x, n); }
inline float sum_sq(const float* x, std::int64_t n) { return table().sum_sq(x, n); }
inline void scale(float* dst, float a, std::int64_t n) { table().scale(dst, a, n); }
inline void vadd(float* dst, const float* x, const float* y, std::int64_t n) { table().vadd(dst, x, y, n); }
inline void vsub(float* dst, const float* x, const float* y, std::int64_t n) { table().vsub(dst, x, y, n); }
inline void vmul(float* dst, const float* x, const float* y, std::int64_t n) { table().vmul(dst, x, y, n); }
inline float l1_dist(const float* x, const float* y, std::int64_t n) { return table().l1_dist(x, y, n); }

// Scalar reference templates; the double instantiation of the engine lands here.
template <typename T>
void axpy(T* dst, const T* x, T a, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) dst[i] += a * x[i];
}
template <typename T>
void axpby(T* dst, const T* x, T a, const T* y, T b, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) dst[i] = a * x[i] + b * y[i];
}
template <typename T>
T dot(const T* x, const T* y, std::int64_t n) {
    T acc = 0;
    for (std::int64_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}
template <typename T>
T sum(const T* x, std::int64_t n) {
    T acc = 0;
    for (std::int64_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}
template <typename T>
T sum_sq(const T* x, std::int64_t n) {
    T acc = 0;
    for (std::int64_t i = 0; i < n; ++i) acc += x[i] * x[i];
    return acc;
}
template <typename T>
void scale(T* dst, T a, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) dst[i] *= a;
}
template <typename T>
void vadd(T* dst, const T* x, const T* y, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) dst[i] = x[i] + y[i];
}
template <typename T>
void vsub(T* dst, const T* x, const T* y, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) dst[i] = x[i] - y[i];
}
template <typename T>
void vmul(T* dst, const T* x, const T* y, std::int64_t n) {
    for (std::int64_t i = 0; i < n; ++i) dst[i] = x[i] * y[i];
}
template <typename T>
T l1_dist(const T* x, const T* y, std::int64_t n) {
    T acc = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        const T d = x[i] - y[i];
        acc += d < 0 ? -d : d;
    }
    return acc;
}

namespace detail {
extern const Table scalar_table;
extern const Table avx2_table;  // valid only when avx2_supported()
}  // namespace detail

}  // namespace ganext::kernels
