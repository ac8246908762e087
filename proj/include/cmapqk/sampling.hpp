#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cmapqk/geometry.hpp"

namespace cmapqk {

// Sampling box: |X| <= x_radius, |w_k| <= w_radius, |phi| <= phi_bound, rho in [rho_min, rho_max].
struct SampleBounds {
    double x_radius = 0.9;
    double w_radius = 2.0;
    double phi_bound = 2.0;
    double rho_min = 0.5;
    double rho_max = 4.0;
};

// Deterministic across platforms: draws use the raw 64-bit engine output only.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed, SampleBounds bounds = {}) : eng_(seed), bounds_(bounds) {}

    double uniform(double lo, double hi);  // [lo, hi)
    std::int64_t integer(std::int64_t lo, std::int64_t hi);  // [lo, hi]
    PointBarN point(int n);
    std::vector<PointBarN> points(int n, int count);

private:
    std::mt19937_64 eng_;
    SampleBounds bounds_;
};

}  // namespace cmapqk
