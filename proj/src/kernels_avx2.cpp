#include "peik/kernels.hpp"

#ifdef __AVX2__

#include <immintrin.h>

namespace peik::kernels::avx2 {

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

// Lane l of acc holds the partial sum over indices j == l (mod 4); combining
// as ((a0+a1)+a2)+a3 reproduces the scalar reference bit for bit.
inline double combine(__m256d acc) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

inline double combine_with_tail(__m256d acc, const double* lane_tail) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (int l = 0; l < 4; ++l) lanes[l] += lane_tail[l];
    return ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
}

}  // namespace

double dist2(const double* a, const double* b, int d) {
    __m256d acc = _mm256_setzero_pd();
    int c = 0;
    for (; c + 4 <= d; c += 4) {
        __m256d va = _mm256_loadu_pd(a + c);
        __m256d vb = _mm256_loadu_pd(b + c);
        __m256d diff = _mm256_sub_pd(va, vb);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
    }
    double tail[4] = {0.0, 0.0, 0.0, 0.0};
    for (; c < d; ++c) {
        double diff = a[c] - b[c];
        tail[c & 3] += diff * diff;
    }
    return combine_with_tail(acc, tail);
}

void dist2_batch(const double* pts, int64_t n, int d, const double* q, double* out) {
    for (int64_t i = 0; i < n; ++i) {
        out[i] = dist2(q, pts + static_cast<size_t>(i) * d, d);
    }
}

double upwind_sum_p1(const double* w, const double* s, int64_t m, double t) {
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    int64_t j = 0;
    for (; j + 4 <= m; j += 4) {
        __m256d pos = _mm256_max_pd(_mm256_sub_pd(vt, _mm256_loadu_pd(s + j)), zero);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + j), pos));
    }
    double tail[4] = {0.0, 0.0, 0.0, 0.0};
    for (; j < m; ++j) {
        double diff = t - s[j];
        double pos = diff > 0.0 ? diff : 0.0;
        tail[j & 3] += w[j] * pos;
    }
    return combine_with_tail(acc, tail);
}

double upwind_sum_p2(const double* w, const double* s, int64_t m, double t) {
    const __m256d vt = _mm256_set1_pd(t);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    int64_t j = 0;
    for (; j + 4 <= m; j += 4) {
        __m256d pos = _mm256_max_pd(_mm256_sub_pd(vt, _mm256_loadu_pd(s + j)), zero);
        __m256d sq = _mm256_mul_pd(pos, pos);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(w + j), sq));
    }
    double tail[4] = {0.0, 0.0, 0.0, 0.0};
    for (; j < m; ++j) {
        double diff = t - s[j];
        double pos = diff > 0.0 ? diff : 0.0;
        tail[j & 3] += w[j] * (pos * pos);
    }
    return combine_with_tail(acc, tail);
}

}  // namespace peik::kernels::avx2

#else  // !__AVX2__

#include <cstdlib>

namespace peik::kernels::avx2 {

bool supported() { return false; }

double dist2(const double*, const double*, int) { std::abort(); }
void dist2_batch(const double*, int64_t, int, const double*, double*) { std::abort(); }
double upwind_sum_p1(const double*, const double*, int64_t, double) { std::abort(); }
double upwind_sum_p2(const double*, const double*, int64_t, double) { std::abort(); }

}  // namespace peik::kernels::avx2

#endif
