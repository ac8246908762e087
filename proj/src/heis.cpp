#include "cmapqk/heis.hpp"

#include <stdexcept>

namespace cmapqk {

namespace {

void check_square(const SurdMatrix& A) {
    for (const auto& row : A)
        if (row.size() != A.size()) throw std::invalid_argument("SurdMatrix: not square");
}

SurdVector unit_vector(int n, int j, const Surd& s) {
    SurdVector v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(j)] = s;
    return v;
}

}  // namespace

SurdMatrix surd_identity(int n) {
    SurdMatrix I(static_cast<std::size_t>(n), SurdVector(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) I[i][i] = Surd(1);
    return I;
}

SurdMatrix surd_mul(const SurdMatrix& A, const SurdMatrix& B) {
    check_square(A);
    check_square(B);
    const std::size_t n = A.size();
    if (B.size() != n) throw std::invalid_argument("surd_mul: shape mismatch");
    SurdMatrix R(n, SurdVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (A[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) R[i][j] += A[i][k] * B[k][j];
        }
    return R;
}

SurdVector surd_apply(const SurdMatrix& A, const SurdVector& v) {
    if (A.size() != v.size()) throw std::invalid_argument("surd_apply: shape mismatch");
    SurdVector r(v.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
    return r;
}

SurdMatrix surd_adjoint(const SurdMatrix& A) {
    check_square(A);
    const std::size_t n = A.size();
    SurdMatrix R(n, SurdVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R[j][i] = A[i][j].conj();
    return R;
}

SurdMatrix surd_add(const SurdMatrix& A, const SurdMatrix& B) {
    SurdMatrix R = A;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j) R[i][j] += B.at(i).at(j);
    return R;
}

SurdMatrix surd_scale(const Surd& s, const SurdMatrix& A) {
    SurdMatrix R = A;
    for (auto& row : R)
        for (auto& x : row) x = s * x;
    return R;
}

bool surd_is_zero(const SurdMatrix& A) {
    for (const auto& row : A)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

Eigen::MatrixXcd surd_to_complex(const SurdMatrix& A) {
    const auto n = static_cast<Eigen::Index>(A.size());
    Eigen::MatrixXcd M(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) M(i, j) = A[i][j].to_complex();
    return M;
}

Surd herm(const SurdVector& v, const SurdVector& w) {
    if (v.size() != w.size()) throw std::invalid_argument("herm: dimension mismatch");
    Surd s;
    for (std::size_t j = 0; j < v.size(); ++j) {
        const Surd term = v[j].conj() * w[j];
        if (j == 0) s += term;
        else s -= term;
    }
    return s;
}

Surd omega(const SurdVector& v, const SurdVector& w) { return herm(v, w).imag_part(); }

std::complex<double> herm(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w) {
    if (v.size() != w.size()) throw std::invalid_argument("herm: dimension mismatch");
    std::complex<double> s = 0.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) s += (j == 0 ? 1.0 : -1.0) * std::conj(v(j)) * w(j);
    return s;
}

double omega(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w) { return herm(v, w).imag(); }

SurdMatrix eta(int n) {
    SurdMatrix E = surd_identity(n);
    for (int j = 1; j < n; ++j) E[j][j] = Surd(-1);
    return E;
}

HeisPoint heis_identity(int n) { return {SurdVector(static_cast<std::size_t>(n)), Surd()}; }

HeisPoint heis_mul(const HeisPoint& x, const HeisPoint& y) {
    if (x.v.size() != y.v.size()) throw std::invalid_argument("heis_mul: dimension mismatch");
    HeisPoint r;
    r.v.resize(x.v.size());
    for (std::size_t j = 0; j < x.v.size(); ++j) r.v[j] = x.v[j] + y.v[j];
    r.t = x.t + y.t + omega(x.v, y.v) * Surd(Rational(1, 2));
    return r;
}

HeisPoint heis_inverse(const HeisPoint& x) {
    HeisPoint r;
    for (const auto& z : x.v) r.v.push_back(-z);
    r.t = -x.t;
    return r;
}

HeisPointF heis_mul(const HeisPointF& x, const HeisPointF& y) {
    if (x.v.size() != y.v.size()) throw std::invalid_argument("heis_mul: dimension mismatch");
    return {x.v + y.v, x.t + y.t + 0.5 * omega(x.v, y.v)};
}

HeisLattice lattice_Ld(int n, std::int64_t d) {
    if (n < 1) throw std::invalid_argument("lattice_Ld: n must be >= 1");
    if (d < 1 || !is_squarefree(d)) throw std::invalid_argument("lattice_Ld: d must be a positive squarefree integer");
    if (d % 4 == 3) throw std::invalid_argument("lattice_Ld: d = 3 mod 4 is not supported (ring of integers is not Z[i sqrt d])");
    std::vector<SurdVector> basis;
    for (int j = 0; j < n; ++j) basis.push_back(unit_vector(n, j, Surd(1)));
    const Surd s = Surd::sqrt(d) * Surd::I();  // sqrt(d) f_j = sqrt(d) i e_j
    for (int j = 0; j < n; ++j) basis.push_back(unit_vector(n, j, s));
    return lattice_from_basis(std::move(basis));
}

HeisLattice lattice_from_basis(std::vector<SurdVector> basis) {
    if (basis.empty()) throw std::invalid_argument("lattice_from_basis: empty basis");
    HeisLattice L;
    L.n = static_cast<int>(basis.front().size());
    L.basis = std::move(basis);
    L.r = omega_generator(L);
    return L;
}

std::vector<std::vector<Surd>> omega_table(const HeisLattice& L) {
    const std::size_t m = L.basis.size();
    std::vector<std::vector<Surd>> T(m, std::vector<Surd>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) T[i][j] = omega(L.basis[i], L.basis[j]);
    return T;
}

Surd omega_generator(const HeisLattice& L) {
    std::int64_t radicand = 0;
    Rational g(0);
    for (const auto& row : omega_table(L)) {
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            if (x.terms().size() != 1)
                throw std::invalid_argument("omega_generator: omega values are not multiples of a single radical");
            const auto& [k, q] = *x.terms().begin();
            if (radicand != 0 && k != radicand)
                throw std::invalid_argument("omega_generator: omega values involve different radicals");
            radicand = k;
            g = rational_gcd(g, q.re);
        }
    }
    if (radicand == 0) return Surd();
    Surd r = Surd::sqrt(radicand);
    r *= CRational(g);
    return r;
}

Surd center_generator(const HeisLattice& L) { return L.r * Surd(Rational(1, 2)); }

std::optional<std::vector<Integer>> lattice_coords(const HeisLattice& L, const SurdVector& v) {
    if (static_cast<int>(v.size()) != L.n) throw std::invalid_argument("lattice_coords: dimension mismatch");
    const auto x = solve_rational_coords(L.basis, v);
    if (!x) return std::nullopt;
    std::vector<Integer> out;
    for (const auto& q : *x) {
        if (q.get_den() != 1) return std::nullopt;
        out.push_back(q.get_num());
    }
    // the basis is independent, so the rational solution is unique; confirm it reproduces v
    SurdVector back(v.size());
    for (std::size_t j = 0; j < out.size(); ++j)
        for (std::size_t i = 0; i < v.size(); ++i) back[i] += L.basis[j][i] * Surd(Rational(out[j]));
    if (back != v) return std::nullopt;
    return out;
}

bool lattice_contains(const HeisLattice& L, const HeisPoint& p) {
    if (!lattice_coords(L, p.v)) return false;
    const Surd half_r = center_generator(L);
    if (half_r.is_zero()) return p.t.is_zero();
    const auto k = solve_rational_coords({SurdVector{half_r}}, SurdVector{p.t});
    return k && (*k)[0].get_den() == 1;
}

bool lattice_contains(const HeisLattice&, const HeisPointF&) {
    throw std::invalid_argument("lattice_contains: floating-point input cannot be decided exactly");
}

bool maps_lattice_into(const SurdMatrix& g, const HeisLattice& L) {
    for (const auto& b : L.basis)
        if (!lattice_coords(L, surd_apply(g, b))) return false;
    return true;
}

bool preserves_h(const SurdMatrix& g) {
    const int n = static_cast<int>(g.size());
    const SurdMatrix E = eta(n);
    return surd_mul(surd_adjoint(g), surd_mul(E, g)) == E;
}

bool preserves_h(const Eigen::MatrixXcd& g, double tol) {
    const Eigen::Index n = g.rows();
    Eigen::MatrixXcd E = -Eigen::MatrixXcd::Identity(n, n);
    E(0, 0) = 1.0;
    return (g.adjoint() * E * g - E).cwiseAbs().maxCoeff() <= tol;
}

HeisPoint su_action(const SurdMatrix& g, const HeisPoint& p) {
    if (!preserves_h(g)) throw std::invalid_argument("su_action: matrix does not preserve h");
    return {surd_apply(g, p.v), p.t};
}

HeisPointF su_action(const Eigen::MatrixXcd& g, const HeisPointF& p, double tol) {
    if (!preserves_h(g, tol)) throw std::invalid_argument("su_action: matrix does not preserve h within tolerance");
    return {g * p.v, p.t};
}

UnipotentWitness unipotent_witness(int n, std::int64_t d) {
    if (n < 2) throw std::invalid_argument("unipotent_witness: n must be >= 2");
    lattice_Ld(n, d);  // validates d
    SurdVector v(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    v[0] = v[1] = Surd(1);
    const Surd s = Surd::sqrt(d) * Surd::I();
    w[0] = w[1] = s;
    // A x = h(v, x) w - h(w, x) v, complex-linear in x
    SurdMatrix A(static_cast<std::size_t>(n), SurdVector(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
        const SurdVector e = unit_vector(n, j, Surd(1));
        const Surd hv = herm(v, e), hw = herm(w, e);
        for (int i = 0; i < n; ++i) A[i][j] = hv * w[i] - hw * v[i];
    }
    UnipotentWitness W;
    W.A = A;
    W.g = surd_add(surd_identity(n), A);
    W.g_inv = surd_add(surd_identity(n), surd_scale(Surd(-1), A));
    return W;
}

}  // namespace cmapqk
