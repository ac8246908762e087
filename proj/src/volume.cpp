#include "cmapqk/volume.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace cmapqk {

VolumePolynomial poly_P(int n) {
    if (n < 1) throw std::invalid_argument("poly_P: n must be >= 1");
    VolumePolynomial P{1};
    for (int j = 0; j < n - 1; ++j) {  // multiply by (1 + x)
        P.push_back(0);
        for (std::size_t k = P.size() - 1; k > 0; --k) P[k] += P[k - 1];
    }
    P.push_back(0);  // multiply by (1 + 2x)
    for (std::size_t k = P.size() - 1; k > 0; --k) P[k] += 2 * P[k - 1];
    return P;
}

double eval_P(const VolumePolynomial& P, double x) {
    double s = 0.0;
    for (auto it = P.rbegin(); it != P.rend(); ++it) s = s * x + static_cast<double>(*it);
    return s;
}

double density(double rho, const ModelParams& params) {
    params.validate();
    if (!(rho > 0.0)) throw std::domain_error("density: rho must be positive");
    return std::pow(rho, -(params.n + 2)) * eval_P(poly_P(params.n), params.c / rho);
}

namespace {

void check_VD(double V_D) {
    if (!(V_D > 0.0)) throw std::invalid_argument("V_D must be positive");
}

}  // namespace

double slab_closed(double rho1, double rho0, const ModelParams& params, double V_D) {
    params.validate();
    check_VD(V_D);
    if (!(rho1 > 0.0) || !(rho1 < rho0)) throw std::invalid_argument("slab_closed: need 0 < rho1 < rho0");
    const auto P = poly_P(params.n);
    double s = 0.0;
    for (std::size_t k = 0; k < P.size(); ++k) {
        const int e = params.n + 1 + static_cast<int>(k);
        s += static_cast<double>(P[k]) * std::pow(params.c, static_cast<int>(k)) / e *
             (std::pow(rho1, -e) - std::pow(rho0, -e));
    }
    return V_D * s;
}

double tail_closed(double rho0, const ModelParams& params, double V_D) {
    params.validate();
    check_VD(V_D);
    if (!(rho0 > 0.0)) throw std::domain_error("tail_closed: rho0 must be positive");
    const auto P = poly_P(params.n);
    double s = 0.0;
    for (std::size_t k = 0; k < P.size(); ++k) {
        const int e = params.n + 1 + static_cast<int>(k);
        s += static_cast<double>(P[k]) * std::pow(params.c, static_cast<int>(k)) / e * std::pow(rho0, -e);
    }
    return V_D * s;
}

double slab_quadrature(double rho1, double rho0, const ModelParams& params, double V_D, double rel_tol) {
    params.validate();
    check_VD(V_D);
    if (!(rho1 > 0.0) || !(rho1 < rho0)) throw std::invalid_argument("slab_quadrature: need 0 < rho1 < rho0");
    auto f = [&](double r) { return density(r, params); };
    // integrate in log rho so that steep power laws near rho1 are resolved uniformly
    auto g = [&](double s) {
        const double r = std::exp(s);
        return f(r) * r;
    };
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        g, std::log(rho1), std::log(rho0), 20, rel_tol, &err);
    return V_D * v;
}

double tail_quadrature(double rho0, const ModelParams& params, double V_D, double rel_tol) {
    params.validate();
    check_VD(V_D);
    if (!(rho0 > 0.0)) throw std::domain_error("tail_quadrature: rho0 must be positive");
    // rho = rho0 / x maps (0, 1] onto [rho0, inf)
    auto g = [&](double x) { return x <= 0.0 ? 0.0 : density(rho0 / x, params) * rho0 / (x * x); };
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, 0.0, 1.0, 20, rel_tol, &err);
    return V_D * v;
}

double far_constant(const ModelParams& params, double V_D) {
    params.validate();
    check_VD(V_D);
    return V_D / (params.n + 1);
}

double near_zero_constant(const ModelParams& params, double V_D) {
    params.validate();
    check_VD(V_D);
    if (!(params.c > 0.0))
        throw std::domain_error("near_zero_constant: c = 0 has the rho1^{-(n+1)} growth regime, use far_constant");
    const int n = params.n;
    return 2.0 * std::pow(params.c, n) / (2 * n + 1) * V_D / (n + 1);
}

double near_zero_limit(const ModelParams& params, double V_D) {
    params.validate();
    check_VD(V_D);
    if (!(params.c > 0.0)) throw std::domain_error("near_zero_limit: requires c > 0");
    const int n = params.n;
    const auto P = poly_P(n);
    return static_cast<double>(P.back()) * std::pow(params.c, n) * V_D / (2 * n + 1);
}

double bound_constant(double rho_floor, const ModelParams& params) {
    params.validate();
    if (!(rho_floor > 0.0)) throw std::domain_error("bound_constant: rho_floor must be positive");
    return std::pow(1.0 + params.c / rho_floor, params.n - 1) * (1.0 + 2.0 * params.c / rho_floor);
}

BoundsResult bounds_check(double rho, double rho_floor, const ModelParams& params) {
    if (!(rho > 0.0)) throw std::domain_error("bounds_check: rho must be positive");
    const double f = density(rho, params);
    const double base = std::pow(rho, -(params.n + 2));
    BoundsResult r;
    r.lower = f >= base;
    r.upper = rho < rho_floor ? true : f <= bound_constant(rho_floor, params) * base;
    return r;
}

}  // namespace cmapqk
