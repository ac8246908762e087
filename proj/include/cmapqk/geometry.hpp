#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace cmapqk {

using cplx = std::complex<double>;

struct ModelParams {
    int n = 1;
    double c = 0.0;

    void validate() const;
};

// Point of the 4n-manifold in global coordinates (X, w, phi~, rho).
struct PointBarN {
    std::vector<cplx> X;  // length n-1
    std::vector<cplx> w;  // length n
    double phi = 0.0;
    double rho = 1.0;

    static PointBarN base(int n, double rho = 1.0);  // X = 0, w = 0, phi = 0
    void validate(int n) const;
};

// Raised when a computed Gram matrix fails Cholesky although the input was valid.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Real chart: [rho, x1, y1, ..., x_{n-1}, y_{n-1}, u0, v0, ..., u_{n-1}, v_{n-1}, phi]
namespace chart {
inline int dim(int n) { return 4 * n; }
inline int rho() { return 0; }
inline int x(int a) { return 2 * a - 1; }          // a = 1..n-1
inline int y(int a) { return 2 * a; }
inline int u(int n, int k) { return 2 * n - 1 + 2 * k; }  // k = 0..n-1
inline int v(int n, int k) { return 2 * n + 2 * k; }
inline int phi(int n) { return 4 * n - 1; }

Eigen::VectorXd to_coords(const PointBarN& p, int n);
PointBarN from_coords(const Eigen::VectorXd& q, int n);
}  // namespace chart

// Gram matrix of the Bergman metric on the unit ball B^{n-1} in (x1, y1, ...).
// For n = 1 this is the 0x0 matrix.
Eigen::MatrixXd bergman_gram(const std::vector<cplx>& X, int n);

Eigen::MatrixXd metric_gram(const PointBarN& p, const ModelParams& params);

// Closed-form det of the Gram matrix at X = 0, w = 0.
double gram_det_p0(double rho, const ModelParams& params);

struct DensitySplit {
    double rho_factor;
    double f_inv;
};
DensitySplit fiber_density_split(const PointBarN& p, const ModelParams& params);

// Chart-coordinate derivative of the Gram matrix by central differences.
// Step is scaled per coordinate: h_i = step * max(1, |q_i|).
std::vector<Eigen::MatrixXd> metric_derivatives(const PointBarN& p, const ModelParams& params, double step);

Eigen::MatrixXd ricci_fd(const PointBarN& p, const ModelParams& params, double step = 1e-3);

struct EinsteinResidual {
    double lambda;    // trace(g^-1 Ric) / 4n
    double residual;  // max |Ric - lambda g|
    double g_norm;    // max |g_ij|
};
EinsteinResidual einstein_residual(const PointBarN& p, const ModelParams& params, double step = 1e-3);

// Induced metric on {X = 0, rho = rho0} in order (u0, v0, ..., phi).
Eigen::MatrixXd metric_on_fiber_H(const std::vector<cplx>& w, double phi, double rho0, const ModelParams& params);

}  // namespace cmapqk
