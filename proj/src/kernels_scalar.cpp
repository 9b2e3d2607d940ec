#include "peik/kernels.hpp"

#include <cmath>

namespace peik::kernels::scalar {

double dist2(const double* a, const double* b, int d) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (int c = 0; c < d; ++c) {
        double diff = a[c] - b[c];
        acc[c & 3] += diff * diff;
    }
    return ((acc[0] + acc[1]) + acc[2]) + acc[3];
}

void dist2_batch(const double* pts, int64_t n, int d, const double* q, double* out) {
    for (int64_t i = 0; i < n; ++i) {
        out[i] = dist2(q, pts + static_cast<size_t>(i) * d, d);
    }
}

double upwind_sum_p1(const double* w, const double* s, int64_t m, double t) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (int64_t j = 0; j < m; ++j) {
        double diff = t - s[j];
        double pos = diff > 0.0 ? diff : 0.0;
        acc[j & 3] += w[j] * pos;
    }
    return ((acc[0] + acc[1]) + acc[2]) + acc[3];
}

double upwind_sum_p2(const double* w, const double* s, int64_t m, double t) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (int64_t j = 0; j < m; ++j) {
        double diff = t - s[j];
        double pos = diff > 0.0 ? diff : 0.0;
        acc[j & 3] += w[j] * (pos * pos);
    }
    return ((acc[0] + acc[1]) + acc[2]) + acc[3];
}

}  // namespace peik::kernels::scalar
