#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace peik {

// Seedable generator with cross-platform-stable output. The raw stream is
// std::mt19937_64 (its sequence is pinned by the standard); all variate
// transforms are hand-rolled here because the std distributions are
// implementation-defined and would break run-to-run stability across stdlibs.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t u64() { return gen_(); }

    // Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform() { return (static_cast<double>(u64() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller (cosine branch; two draws per variate).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Uniform integer in [0, bound), rejection-sampled to avoid modulo bias.
    uint64_t below(uint64_t bound) {
        uint64_t min = (0 - bound) % bound;
        for (;;) {
            uint64_t r = u64();
            if (r >= min) return r % bound;
        }
    }

    // m distinct indices from [0, n), by partial Fisher-Yates; order is the draw order.
    std::vector<int64_t> sample_without_replacement(int64_t n, int64_t m) {
        std::vector<int64_t> pool(n);
        for (int64_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<int64_t> out(m);
        for (int64_t i = 0; i < m; ++i) {
            int64_t j = i + static_cast<int64_t>(below(static_cast<uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
            out[i] = pool[i];
        }
        return out;
    }

    // Derive an independent stream seed, for per-task splitting from a master seed.
    static uint64_t split(uint64_t seed, uint64_t stream) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace peik
