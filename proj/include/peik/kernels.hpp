#pragma once

#include <cstdint>

// Data-parallel inner loops: squared distances and upwind positive-part sums.
// A scalar reference implementation and an AVX2 variant are provided; the
// active variant is selected at runtime from CPU features. Both share the
// same lane-structured accumulation order (partial sums over index mod 4,
// combined as ((a0+a1)+a2)+a3), so results are bit-identical across variants.
namespace peik::kernels {

enum class Level { scalar, avx2 };

Level active_level();
bool level_supported(Level level);
// Force a variant (used by equivalence tests and the CLI --simd flag).
// Throws ParameterError if the requested level is unsupported on this CPU.
void set_level(Level level);

// Squared Euclidean distance between two d-vectors.
double dist2(const double* a, const double* b, int d);

// out[i] = squared distance from q to row i of pts (n x d, row major).
void dist2_batch(const double* pts, int64_t n, int d, const double* q, double* out);

// sum_j w[j] * max(t - s[j], 0)
double upwind_sum_p1(const double* w, const double* s, int64_t m, double t);

// sum_j w[j] * max(t - s[j], 0)^2
double upwind_sum_p2(const double* w, const double* s, int64_t m, double t);

// sum_j w[j] * max(t - s[j], 0)^p for general p (scalar on every level).
double upwind_sum_pow(const double* w, const double* s, int64_t m, double t, double p);

namespace scalar {
double dist2(const double* a, const double* b, int d);
void dist2_batch(const double* pts, int64_t n, int d, const double* q, double* out);
double upwind_sum_p1(const double* w, const double* s, int64_t m, double t);
double upwind_sum_p2(const double* w, const double* s, int64_t m, double t);
}  // namespace scalar

namespace avx2 {
bool supported();
double dist2(const double* a, const double* b, int d);
void dist2_batch(const double* pts, int64_t n, int d, const double* q, double* out);
double upwind_sum_p1(const double* w, const double* s, int64_t m, double t);
double upwind_sum_p2(const double* w, const double* s, int64_t m, double t);
}  // namespace avx2

}  // namespace peik::kernels
