#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace testsupport {

inline constexpr std::uint64_t kSeed = 42;

inline double max_abs(const Eigen::MatrixXd& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

inline double rel_err(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

}  // namespace testsupport
