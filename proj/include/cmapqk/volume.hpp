#pragma once

#include <cstdint>
#include <vector>

#include "cmapqk/geometry.hpp"

namespace cmapqk {

// Coefficients p_0..p_n of P(x) = (1+x)^{n-1} (1+2x).
using VolumePolynomial = std::vector<std::int64_t>;

VolumePolynomial poly_P(int n);
double eval_P(const VolumePolynomial& P, double x);

// f / f_inv = rho^{-(n+2)} P(c/rho)
double density(double rho, const ModelParams& params);

double slab_closed(double rho1, double rho0, const ModelParams& params, double V_D);
double tail_closed(double rho0, const ModelParams& params, double V_D);

// Adaptive Gauss-Kronrod integration of V_D * density.
double slab_quadrature(double rho1, double rho0, const ModelParams& params, double V_D, double rel_tol = 1e-12);
double tail_quadrature(double rho0, const ModelParams& params, double V_D, double rel_tol = 1e-12);

// k = V_D/(n+1): rho0^{n+1} tail -> k
double far_constant(const ModelParams& params, double V_D);
// k1 = (2 c^n/(2n+1)) * V_D/(n+1)
double near_zero_constant(const ModelParams& params, double V_D);
// lim_{rho1 -> 0} rho1^{2n+1} slab(rho1, rho0) = p_n c^n V_D/(2n+1)
double near_zero_limit(const ModelParams& params, double V_D);

struct BoundsResult {
    bool lower;  // f/f_inv >= rho^{-(n+2)}
    bool upper;  // f/f_inv <= C(rho_floor) rho^{-(n+2)} for rho >= rho_floor
};
double bound_constant(double rho_floor, const ModelParams& params);  // (1+c/rho0)^{n-1}(1+2c/rho0)
BoundsResult bounds_check(double rho, double rho_floor, const ModelParams& params);

}  // namespace cmapqk
