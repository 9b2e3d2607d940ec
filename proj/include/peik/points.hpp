#pragma once

#include <cstdint>
#include <vector>

namespace peik {

// Dense n x d point set, row major.
struct Points {
    int64_t n = 0;
    int d = 0;
    std::vector<double> a;

    Points() = default;
    Points(int64_t n_, int d_) : n(n_), d(d_), a(static_cast<size_t>(n_) * d_, 0.0) {}

    double* row(int64_t i) { return a.data() + static_cast<size_t>(i) * d; }
    const double* row(int64_t i) const { return a.data() + static_cast<size_t>(i) * d; }

    double& at(int64_t i, int c) { return a[static_cast<size_t>(i) * d + c]; }
    double at(int64_t i, int c) const { return a[static_cast<size_t>(i) * d + c]; }
};

struct LabeledPointCloud {
    Points points;
    std::vector<int32_t> labels;  // empty when unlabeled

    bool has_labels() const { return !labels.empty(); }
};

}  // namespace peik
