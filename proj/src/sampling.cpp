#include "cmapqk/sampling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cmapqk {

double PointSampler::uniform(double lo, double hi) {
    // top 53 bits -> [0, 1)
    const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

std::int64_t PointSampler::integer(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("PointSampler::integer: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(eng_());
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do r = eng_();
    while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

PointBarN PointSampler::point(int n) {
    if (n < 1) throw std::invalid_argument("PointSampler::point: n must be >= 1");
    PointBarN p;
    if (n > 1) {
        // uniform direction from a box draw, radius uniform in [0, x_radius)
        std::vector<double> d(static_cast<std::size_t>(2 * (n - 1)));
        double norm = 0.0;
        do {
            norm = 0.0;
            for (auto& x : d) {
                x = uniform(-1.0, 1.0);
                norm += x * x;
            }
        } while (norm < 1e-6 || norm > 1.0);
        norm = std::sqrt(norm);
        const double r = uniform(0.0, bounds_.x_radius);
        for (int a = 0; a < n - 1; ++a)
            p.X.emplace_back(r * d[2 * a] / norm, r * d[2 * a + 1] / norm);
    }
    for (int k = 0; k < n; ++k) {
        const double m = uniform(0.0, bounds_.w_radius);
        const double t = uniform(0.0, 2.0 * std::numbers::pi);
        p.w.push_back(std::polar(m, t));
    }
    p.phi = uniform(-bounds_.phi_bound, bounds_.phi_bound);
    p.rho = uniform(bounds_.rho_min, bounds_.rho_max);
    return p;
}

std::vector<PointBarN> PointSampler::points(int n, int count) {
    if (count < 0) throw std::invalid_argument("PointSampler::points: count must be non-negative");
    std::vector<PointBarN> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(point(n));
    return out;
}

}  // namespace cmapqk
