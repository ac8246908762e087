#include "cmapqk/geometry.hpp"

#include <cmath>
#include <string>

namespace cmapqk {

namespace {

double norm2(const std::vector<cplx>& X) {
    double s = 0.0;
    for (const auto& z : X) s += std::norm(z);
    return s;
}

// Gram matrix of |alpha|^2 for a complex covector alpha: Re(alpha_i conj(alpha_j)).
Eigen::MatrixXd abs2(const Eigen::VectorXcd& alpha) {
    return (alpha * alpha.adjoint()).real();
}

Eigen::MatrixXd sq(const Eigen::VectorXd& beta) { return beta * beta.transpose(); }

}  // namespace

void ModelParams::validate() const {
    if (n < 1) throw std::invalid_argument("ModelParams: n must be >= 1, got " + std::to_string(n));
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("ModelParams: c must be finite and >= 0");
}

PointBarN PointBarN::base(int n, double rho) {
    PointBarN p;
    p.X.assign(static_cast<std::size_t>(n - 1), cplx(0.0));
    p.w.assign(static_cast<std::size_t>(n), cplx(0.0));
    p.rho = rho;
    return p;
}

void PointBarN::validate(int n) const {
    if (X.size() != static_cast<std::size_t>(n - 1) || w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("PointBarN: coordinate lengths do not match n = " + std::to_string(n));
    if (!(rho > 0.0)) throw std::domain_error("PointBarN: rho must be positive");
    if (!(norm2(X) < 1.0)) throw std::domain_error("PointBarN: |X| must be < 1");
}

namespace chart {

Eigen::VectorXd to_coords(const PointBarN& p, int n) {
    Eigen::VectorXd q(dim(n));
    q(rho()) = p.rho;
    for (int a = 1; a < n; ++a) {
        q(x(a)) = p.X[a - 1].real();
        q(y(a)) = p.X[a - 1].imag();
    }
    for (int k = 0; k < n; ++k) {
        q(u(n, k)) = p.w[k].real();
        q(v(n, k)) = p.w[k].imag();
    }
    q(phi(n)) = p.phi;
    return q;
}

PointBarN from_coords(const Eigen::VectorXd& q, int n) {
    PointBarN p;
    p.rho = q(rho());
    for (int a = 1; a < n; ++a) p.X.emplace_back(q(x(a)), q(y(a)));
    for (int k = 0; k < n; ++k) p.w.emplace_back(q(u(n, k)), q(v(n, k)));
    p.phi = q(phi(n));
    return p;
}

}  // namespace chart

Eigen::MatrixXd bergman_gram(const std::vector<cplx>& X, int n) {
    if (n < 1) throw std::invalid_argument("bergman_gram: n must be >= 1");
    if (X.size() != static_cast<std::size_t>(n - 1)) throw std::invalid_argument("bergman_gram: X must have length n-1");
    const double r2 = norm2(X);
    if (!(r2 < 1.0)) throw std::domain_error("bergman_gram: X outside the unit ball");
    const int m = 2 * (n - 1);
    if (m == 0) return Eigen::MatrixXd(0, 0);

    const double s = 1.0 - r2;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(m, m);
    Eigen::VectorXcd xbar_dx = Eigen::VectorXcd::Zero(m);
    for (int a = 0; a < n - 1; ++a) {
        Eigen::VectorXcd dX = Eigen::VectorXcd::Zero(m);
        dX(2 * a) = 1.0;
        dX(2 * a + 1) = cplx(0.0, 1.0);
        G += abs2(dX);
        xbar_dx += std::conj(X[a]) * dX;
    }
    G += abs2(xbar_dx) / s;
    return G / s;
}

Eigen::MatrixXd metric_gram(const PointBarN& p, const ModelParams& params) {
    params.validate();
    const int n = params.n;
    p.validate(n);
    const double c = params.c, rho = p.rho;
    const int D = chart::dim(n);
    const double s = 1.0 - norm2(p.X);
    const cplx I(0.0, 1.0);

    auto dX = [&](int a) {  // a = 1..n-1
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(D);
        e(chart::x(a)) = 1.0;
        e(chart::y(a)) = I;
        return e;
    };
    auto dw = [&](int k) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(D);
        e(chart::u(n, k)) = 1.0;
        e(chart::v(n, k)) = I;
        return e;
    };

    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(D, D);

    // Bergman part, embedded at the X coordinates
    const Eigen::MatrixXd GB = bergman_gram(p.X, n);
    G.block(1, 1, GB.rows(), GB.cols()) += ((rho + c) / rho) * GB;

    G(chart::rho(), chart::rho()) += (1.0 / (4.0 * rho * rho)) * (rho + 2.0 * c) / (rho + c);

    // theta = dphi - 4 Im(w0bar dw0 - sum wabar dwa) + (2c/s) Im(sum Xabar dXa)
    Eigen::VectorXcd wdw = std::conj(p.w[0]) * dw(0);
    for (int a = 1; a < n; ++a) wdw -= std::conj(p.w[a]) * dw(a);
    Eigen::VectorXcd xdx = Eigen::VectorXcd::Zero(D);
    for (int a = 1; a < n; ++a) xdx += std::conj(p.X[a - 1]) * dX(a);
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(D);
    theta(chart::phi(n)) = 1.0;
    theta += -4.0 * wdw.imag() + (2.0 * c / s) * xdx.imag();
    G += (1.0 / (4.0 * rho * rho)) * ((rho + c) / (rho + 2.0 * c)) * sq(theta);

    Eigen::MatrixXd flat = abs2(dw(0));
    for (int a = 1; a < n; ++a) flat -= abs2(dw(a));
    G += (-2.0 / rho) * flat;

    Eigen::VectorXcd beta = dw(0);
    for (int a = 1; a < n; ++a) beta += p.X[a - 1] * dw(a);
    G += ((rho + c) / (rho * rho)) * (4.0 / s) * abs2(beta);

    G = 0.5 * (G + G.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success) throw ConsistencyError("metric_gram: Gram matrix is not positive definite");
    return G;
}

double gram_det_p0(double rho, const ModelParams& params) {
    params.validate();
    if (!(rho > 0.0)) throw std::domain_error("gram_det_p0: rho must be positive");
    const int n = params.n;
    const double c = params.c;
    return std::pow(2.0, 2 * n - 4) / std::pow(rho, 2 * n + 4) * std::pow((rho + c) / rho, 2 * n - 2) *
           std::pow((rho + 2.0 * c) / rho, 2);
}

DensitySplit fiber_density_split(const PointBarN& p, const ModelParams& params) {
    const Eigen::MatrixXd G = metric_gram(p, params);
    const int n = params.n;
    const double rho = p.rho, c = params.c;
    const double rho_factor =
        std::pow(rho, -(n + 2)) * std::pow((rho + c) / rho, n - 1) * ((rho + 2.0 * c) / rho);
    // det via Cholesky: product of squared diagonal entries
    Eigen::LLT<Eigen::MatrixXd> llt(G);
    double sqrt_det = 1.0;
    for (int i = 0; i < G.rows(); ++i) sqrt_det *= llt.matrixL()(i, i);
    return {rho_factor, sqrt_det / rho_factor};
}

std::vector<Eigen::MatrixXd> metric_derivatives(const PointBarN& p, const ModelParams& params, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("metric_derivatives: step must be positive");
    const int n = params.n;
    const Eigen::VectorXd q = chart::to_coords(p, n);
    std::vector<Eigen::MatrixXd> dG;
    dG.reserve(static_cast<std::size_t>(q.size()));
    for (int i = 0; i < q.size(); ++i) {
        const double h = step * std::max(1.0, std::abs(q(i)));
        Eigen::VectorXd qp = q, qm = q;
        qp(i) += h;
        qm(i) -= h;
        try {
            dG.push_back((metric_gram(chart::from_coords(qp, n), params) -
                          metric_gram(chart::from_coords(qm, n), params)) /
                         (2.0 * h));
        } catch (const std::domain_error& e) {
            throw std::out_of_range(std::string("finite-difference stencil leaves the chart: ") + e.what());
        }
    }
    return dG;
}

namespace {

// Gamma[k](i, j) = Gamma^k_ij
std::vector<Eigen::MatrixXd> christoffel(const PointBarN& p, const ModelParams& params, double step) {
    const Eigen::MatrixXd G = metric_gram(p, params);
    const Eigen::MatrixXd Ginv = G.inverse();
    const auto dG = metric_derivatives(p, params, step);
    const int D = static_cast<int>(G.rows());
    // lowered: L[l](i, j) = 1/2 (d_i g_lj + d_j g_li - d_l g_ij)
    std::vector<Eigen::MatrixXd> L(D, Eigen::MatrixXd::Zero(D, D));
    for (int l = 0; l < D; ++l)
        for (int i = 0; i < D; ++i)
            for (int j = 0; j < D; ++j) L[l](i, j) = 0.5 * (dG[i](l, j) + dG[j](l, i) - dG[l](i, j));
    std::vector<Eigen::MatrixXd> Gam(D, Eigen::MatrixXd::Zero(D, D));
    for (int k = 0; k < D; ++k)
        for (int l = 0; l < D; ++l) Gam[k] += Ginv(k, l) * L[l];
    return Gam;
}

}  // namespace

Eigen::MatrixXd ricci_fd(const PointBarN& p, const ModelParams& params, double step) {
    params.validate();
    p.validate(params.n);
    const int n = params.n;
    const int D = chart::dim(n);
    const Eigen::VectorXd q = chart::to_coords(p, n);
    const auto Gam = christoffel(p, params, step);

    // dGam[m][k](i, j) = d_m Gamma^k_ij
    std::vector<std::vector<Eigen::MatrixXd>> dGam(D);
    for (int m = 0; m < D; ++m) {
        const double h = step * std::max(1.0, std::abs(q(m)));
        Eigen::VectorXd qp = q, qm = q;
        qp(m) += h;
        qm(m) -= h;
        std::vector<Eigen::MatrixXd> Gp, Gm;
        try {
            Gp = christoffel(chart::from_coords(qp, n), params, step);
            Gm = christoffel(chart::from_coords(qm, n), params, step);
        } catch (const std::domain_error& e) {
            throw std::out_of_range(std::string("finite-difference stencil leaves the chart: ") + e.what());
        }
        dGam[m].resize(D);
        for (int k = 0; k < D; ++k) dGam[m][k] = (Gp[k] - Gm[k]) / (2.0 * h);
    }

    Eigen::MatrixXd Ric = Eigen::MatrixXd::Zero(D, D);
    for (int i = 0; i < D; ++i) {
        for (int j = 0; j < D; ++j) {
            double r = 0.0;
            for (int k = 0; k < D; ++k) {
                r += dGam[k][k](i, j) - dGam[j][k](i, k);
                for (int l = 0; l < D; ++l) r += Gam[k](k, l) * Gam[l](i, j) - Gam[k](j, l) * Gam[l](i, k);
            }
            Ric(i, j) = r;
        }
    }
    return 0.5 * (Ric + Ric.transpose());
}

EinsteinResidual einstein_residual(const PointBarN& p, const ModelParams& params, double step) {
    const Eigen::MatrixXd G = metric_gram(p, params);
    const Eigen::MatrixXd Ric = ricci_fd(p, params, step);
    const double lambda = (G.inverse() * Ric).trace() / static_cast<double>(G.rows());
    return {lambda, (Ric - lambda * G).cwiseAbs().maxCoeff(), G.cwiseAbs().maxCoeff()};
}

Eigen::MatrixXd metric_on_fiber_H(const std::vector<cplx>& w, double phi, double rho0, const ModelParams& params) {
    params.validate();
    if (!(rho0 > 0.0)) throw std::domain_error("metric_on_fiber_H: rho0 must be positive");
    PointBarN p = PointBarN::base(params.n, rho0);
    p.w = w;
    p.phi = phi;
    const Eigen::MatrixXd G = metric_gram(p, params);
    const int start = chart::u(params.n, 0);
    const int m = 2 * params.n + 1;
    return G.block(start, start, m, m);
}

}  // namespace cmapqk
