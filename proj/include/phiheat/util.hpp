#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace phiheat {

using Rng = std::mt19937_64;

// Deterministic sub-stream seeding: one master seed, named streams.
inline uint64_t stream_seed(uint64_t master, uint64_t stream_id) {
    uint64_t h = master ^ (0x9e3779b97f4a7c15ULL + stream_id);
    h ^= h >> 30; h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 27; h *= 0x94d049bb133111ebULL;
    h ^= h >> 31;
    return h;
}

// FNV-1a, used for manifest checksums.
inline uint64_t fnv1a(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) { h ^= c; h *= 0x100000001b3ULL; }
    return h;
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

inline LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 matching samples");
    double n = double(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
    }
    double den = n * sxx - sx * sx;
    if (den == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

// Static partition of [0,n) over worker threads. Deterministic: each index is
// written by exactly one worker and reductions happen in index order afterwards.
inline void parallel_for(size_t n, const std::function<void(size_t, size_t)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = hw == 0 ? 1 : hw;
    if (workers > n) workers = n == 0 ? 1 : n;
    if (workers <= 1 || n < 64) { body(0, n); return; }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    size_t chunk = (n + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        size_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace phiheat
