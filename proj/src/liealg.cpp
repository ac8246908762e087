#include "cmapqk/liealg.hpp"

#include <map>
#include <stdexcept>

namespace cmapqk {

// ---------------------------------------------------------------- MatGl

MatGl::MatGl(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {
    if (n < 1) throw std::invalid_argument("MatGl: n must be >= 1");
}

MatGl MatGl::identity(int n) {
    MatGl M(n);
    for (int i = 0; i < n; ++i) M(i, i) = CRational(1);
    return M;
}

MatGl MatGl::unit(int n, int i, int j) {
    MatGl M(n);
    M(i, j) = CRational(1);
    return M;
}

bool MatGl::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

MatGl MatGl::transpose() const {
    MatGl T(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

MatGl MatGl::conj() const {
    MatGl C(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) C.a_[k] = a_[k].conj();
    return C;
}

MatGl& MatGl::operator+=(const MatGl& o) {
    if (o.n_ != n_) throw std::invalid_argument("MatGl: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

MatGl& MatGl::operator-=(const MatGl& o) {
    if (o.n_ != n_) throw std::invalid_argument("MatGl: shape mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

MatGl& MatGl::operator*=(const CRational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

MatGl operator*(const MatGl& a, const MatGl& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("MatGl: shape mismatch");
    MatGl R(a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int k = 0; k < a.n_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (int j = 0; j < a.n_; ++j) R(i, j) += a(i, k) * b(k, j);
        }
    return R;
}

MatGl commutator(const MatGl& A, const MatGl& B) { return A * B - B * A; }

namespace {

MatGl mat_I(int n) {
    MatGl M = MatGl::identity(n);
    M(0, 0) = CRational(-1);
    return M;
}

}  // namespace

MatGl sigma(const MatGl& A) {
    const MatGl I = mat_I(A.n());
    return CRational(-1) * (I * A.conj().transpose() * I);
}

std::pair<MatGl, MatGl> re_im_sigma(const MatGl& A) {
    const MatGl S = sigma(A);
    return {CRational(Rational(1, 2)) * (A + S), CRational(Rational(0), Rational(-1, 2)) * (A - S)};
}

MatGl mat_C(int n) { return CRational::I() * MatGl::identity(n); }

MatGl mat_Cprime(int n) {
    MatGl M = MatGl::identity(n);
    M(0, 0) = CRational(1 - n);
    return CRational(Rational(0), Rational(1, n)) * M;
}

MatGl mat_U(int n, int a) {
    if (a < 1 || a >= n) throw std::out_of_range("mat_U: index out of range");
    return MatGl::unit(n, 0, a);
}

MatGl mat_Usigma(int n, int a) { return sigma(mat_U(n, a)); }

// ---------------------------------------------------------------- semidirect product

SemiDirectElement::SemiDirectElement(int n)
    : A(n), p(static_cast<std::size_t>(n)), q(static_cast<std::size_t>(n)) {}

SemiDirectElement SemiDirectElement::matrix(const MatGl& A) {
    SemiDirectElement x(A.n());
    x.A = A;
    return x;
}

SemiDirectElement SemiDirectElement::E(int n, int k) {
    SemiDirectElement x(n);
    x.p.at(static_cast<std::size_t>(k)) = CRational(1);
    return x;
}

SemiDirectElement SemiDirectElement::Ebar(int n, int k) {
    SemiDirectElement x(n);
    x.q.at(static_cast<std::size_t>(k)) = CRational(1);
    return x;
}

SemiDirectElement SemiDirectElement::T(int n) {
    SemiDirectElement x(n);
    x.t = CPoly(CRational(1));
    return x;
}

SemiDirectElement SemiDirectElement::e(int n, int k) {
    return CPoly(CRational(Rational(1, 2))) * (E(n, k) + Ebar(n, k));
}

SemiDirectElement SemiDirectElement::f(int n, int k) {
    return CPoly(CRational(Rational(0), Rational(1, 2))) * (E(n, k) - Ebar(n, k));
}

SemiDirectElement& SemiDirectElement::operator+=(const SemiDirectElement& o) {
    A += o.A;
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] += o.p[k];
        q[k] += o.q[k];
    }
    t += o.t;
    return *this;
}

SemiDirectElement& SemiDirectElement::operator*=(const CPoly& s) {
    if (s.degree() > 0) {
        // only the center coefficient may carry c
        if (!A.is_zero()) throw std::invalid_argument("SemiDirectElement: c-dependent scalar on matrix part");
        for (std::size_t k = 0; k < p.size(); ++k)
            if (!p[k].is_zero() || !q[k].is_zero())
                throw std::invalid_argument("SemiDirectElement: c-dependent scalar on heis part");
        t = t * s;
        return *this;
    }
    const CRational r = s[0];
    A *= r;
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] *= r;
        q[k] *= r;
    }
    t = t * s;
    return *this;
}

namespace {

// -A^T v
std::vector<CRational> act_E(const MatGl& A, const std::vector<CRational>& v) {
    const int n = A.n();
    std::vector<CRational> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) r[k] -= A(l, k) * v[l];
    return r;
}

// I A I v
std::vector<CRational> act_Ebar(const MatGl& A, const std::vector<CRational>& v) {
    const int n = A.n();
    std::vector<CRational> r(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const bool flip = (k == 0) != (l == 0);
            r[k] += (flip ? -A(k, l) : A(k, l)) * v[l];
        }
    return r;
}

}  // namespace

SemiDirectElement semidirect_bracket(const SemiDirectElement& x, const SemiDirectElement& y) {
    const int n = x.n();
    if (y.n() != n) throw std::invalid_argument("semidirect_bracket: dimension mismatch");
    SemiDirectElement r(n);
    r.A = commutator(x.A, y.A);
    const auto a1 = act_E(x.A, y.p), a2 = act_E(y.A, x.p);
    const auto b1 = act_Ebar(x.A, y.q), b2 = act_Ebar(y.A, x.q);
    for (int k = 0; k < n; ++k) {
        r.p[k] = a1[k] - a2[k];
        r.q[k] = b1[k] - b2[k];
    }
    // [E_k, Ebar_l] = 4i s_k delta_kl T with s_0 = 1, s_a = -1
    CRational omega;
    for (int k = 0; k < n; ++k) {
        const CRational s = CRational(k == 0 ? 4 : -4) * CRational::I();
        omega += s * (x.p[k] * y.q[k] - y.p[k] * x.q[k]);
    }
    r.t = CPoly(omega);
    return r;
}

std::vector<std::pair<std::string, SemiDirectElement>> algebra_basis(int n) {
    std::vector<std::pair<std::string, SemiDirectElement>> B;
    B.emplace_back("C", SemiDirectElement::matrix(mat_C(n)));
    for (int a = 1; a < n; ++a) B.emplace_back("U_" + std::to_string(a), SemiDirectElement::matrix(mat_U(n, a)));
    for (int a = 1; a < n; ++a)
        B.emplace_back("U_" + std::to_string(a) + "^s", SemiDirectElement::matrix(mat_Usigma(n, a)));
    for (int a = 1; a < n; ++a)
        for (int b = 1; b < n; ++b)
            B.emplace_back("[U_" + std::to_string(a) + ",U_" + std::to_string(b) + "^s]",
                           SemiDirectElement::matrix(commutator(mat_U(n, a), mat_Usigma(n, b))));
    for (int k = 0; k < n; ++k) B.emplace_back("E_" + std::to_string(k), SemiDirectElement::E(n, k));
    for (int k = 0; k < n; ++k) B.emplace_back("Ebar_" + std::to_string(k), SemiDirectElement::Ebar(n, k));
    B.emplace_back("T", SemiDirectElement::T(n));
    return B;
}

// ---------------------------------------------------------------- alpha

PolyVectorField alpha_gl(const MatGl& A) {
    // Fundamental field of z -> Az, w -> -A^T w on the cone, pushed to (X, w, phi)
    // with the twist d(arg z0)(X_A) Z_P. The antiholomorphic half uses
    // B = conj(A^sigma) = -I A^T I, which keeps alpha complex-linear.
    const int n = A.n();
    const FieldLayout L{n};
    const MatGl B = sigma(A).conj();
    const CRational I = CRational::I();
    PolyVectorField F(n);

    for (int a = 1; a < n; ++a) {
        // dX^a/dt = A_a0 + A_ab X^b - X^a (A_00 + A_0b X^b)
        F.add(L.X(a), CPoly(A(a, 0)));
        F.add(L.Xbar(a), CPoly(B(a, 0)));
        for (int b = 1; b < n; ++b) {
            F.add(L.X(a), CPoly(A(a, b)), {L.X(b)});
            F.add(L.Xbar(a), CPoly(B(a, b)), {L.Xbar(b)});
            F.add(L.X(a), CPoly(-A(0, b)), {L.X(a), L.X(b)});
            F.add(L.Xbar(a), CPoly(-B(0, b)), {L.Xbar(a), L.Xbar(b)});
        }
        F.add(L.X(a), CPoly(-A(0, 0)), {L.X(a)});
        F.add(L.Xbar(a), CPoly(-B(0, 0)), {L.Xbar(a)});
    }
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            F.add(L.w(k), CPoly(-A(l, k)), {L.w(l)});
            F.add(L.wbar(k), CPoly(-B(l, k)), {L.wbar(l)});
        }
    }
    // phi: i c [(A_00 + A_0b X^b) - (B_00 + B_0b Xbar^b)]
    F.add(L.phi(), CPoly::c_times(I * (A(0, 0) - B(0, 0))));
    for (int b = 1; b < n; ++b) {
        F.add(L.phi(), CPoly::c_times(I * A(0, b)), {L.X(b)});
        F.add(L.phi(), CPoly::c_times(-I * B(0, b)), {L.Xbar(b)});
    }
    return F;
}

PolyVectorField alpha(const SemiDirectElement& x, const CRational& t_scale) {
    const int n = x.n();
    const ModelParams params{n, 0.0};
    PolyVectorField F = alpha_gl(x.A);
    for (int k = 0; k < n; ++k) {
        if (!x.p[k].is_zero()) F += CPoly(x.p[k]) * generator(GeneratorName::Vk(k), params);
        if (!x.q[k].is_zero()) F += CPoly(x.q[k]) * generator(GeneratorName::VkBar(k), params);
    }
    if (!x.t.is_zero()) F += (x.t * CPoly(t_scale)) * generator(GeneratorName::T(), params);
    return F;
}

StructureReport structure_check(const ModelParams& params, const CRational& t_scale) {
    params.validate();
    const auto basis = algebra_basis(params.n);
    std::vector<PolyVectorField> images;
    images.reserve(basis.size());
    for (const auto& [name, x] : basis) images.push_back(alpha(x, t_scale));

    StructureReport rep;
    rep.n = params.n;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            ++rep.pairs_checked;
            const PolyVectorField lhs = bracket(images[i], images[j]);
            const PolyVectorField rhs = -alpha(semidirect_bracket(basis[i].second, basis[j].second), t_scale);
            if (lhs != rhs) rep.mismatches.push_back("[" + basis[i].first + "," + basis[j].first + "]");
        }
    }
    return rep;
}

// ---------------------------------------------------------------- center lattice

namespace {

std::string pi_multiple(const Rational& r, const std::string& unit) {
    // r * unit, e.g. r = 1/2, unit = "pi" -> "pi/2"
    if (sgn(r) == 0) return "0";
    Rational c = r;
    c.canonicalize();
    std::string s;
    const Integer num = c.get_num(), den = c.get_den();
    if (num == -1) s = "-";
    else if (num != 1) s = num.get_str();
    s += unit;
    if (den != 1) s += "/" + den.get_str();
    return s;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw std::logic_error("expected an integer, got " + to_string(q));
    return q.get_num();
}

CRational div_i(const CRational& z) { return z * CRational(Rational(0), Rational(-1)); }

Rational require_real(const CRational& z, const char* what) {
    if (sgn(z.im) != 0) throw std::logic_error(std::string(what) + ": expected a real value");
    return z.re;
}

// Rotation rates r_j (field coefficient -i r_j on z_j d/dz_j) of a diagonal field,
// for the holomorphic variables X^a, w^k in layout order, plus the constant phi part.
struct DiagonalField {
    std::vector<Rational> rates;  // X^1..X^{n-1}, w^0..w^{n-1}
    CPoly phi;
};

DiagonalField diagonal_field(const PolyVectorField& F) {
    const FieldLayout& L = F.layout();
    DiagonalField D;
    for (int var = 0; var < L.nvars(); ++var) {
        const Poly& P = F.component(var);
        CRational coeff;
        for (const auto& [m, q] : P) {
            int deg = 0, pos = -1;
            for (int v = 0; v < L.nvars(); ++v) {
                deg += m[v];
                if (m[v]) pos = v;
            }
            if (deg != 1 || pos != var || q.degree() > 0)
                throw std::invalid_argument("diagonal_field: field is not a diagonal rotation");
            coeff = q[0];
        }
        const bool holo = var < L.Xbar(1) || (var >= L.w(0) && var < L.wbar(0));
        if (holo) D.rates.push_back(require_real(CRational(Rational(0), Rational(1)) * coeff, "rotation rate"));
    }
    D.phi = F.component(L.phi()).empty() ? CPoly() : F.component(L.phi()).begin()->second;
    for (const auto& [m, q] : F.component(L.phi())) {
        for (auto e : m)
            if (e) throw std::invalid_argument("diagonal_field: phi component is not constant");
    }
    return D;
}

// Primitive integer solution (x, y) of A x + B y = 0 for rationals A, B, not both zero.
std::pair<Integer, Integer> primitive_kernel(const Rational& A, const Rational& B) {
    const Rational g = rational_gcd(A, B);
    if (sgn(g) == 0) throw std::logic_error("primitive_kernel: both coefficients vanish");
    return {to_integer(B / g), to_integer(-A / g)};
}

CenterVector normalized(CenterVector v) {
    const int s = sgn(v.m) != 0 ? sgn(v.m) : (sgn(v.u) != 0 ? sgn(v.u) : sgn(v.z));
    if (s < 0) v = Integer(-1) * v;
    return v;
}

}  // namespace

std::string CenterVector::pretty() const {
    return "(" + pi_multiple(2 * u, "π") + "," + pi_multiple(Rational(2 * m), "π") + "," +
           pi_multiple(4 * z, "πc") + ")";
}

CentralCoords central_coords(const SemiDirectElement& Z) {
    const int n = Z.n();
    for (int k = 0; k < n; ++k)
        if (!Z.p[k].is_zero() || !Z.q[k].is_zero()) throw std::invalid_argument("central_coords: element has heis part");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !Z.A(i, j).is_zero()) throw std::invalid_argument("central_coords: matrix is not diagonal");
    for (int i = 2; i < n; ++i)
        if (Z.A(i, i) != Z.A(1, 1)) throw std::invalid_argument("central_coords: matrix is not of the form xC + yC'");
    if (Z.t.degree() > 1 || !Z.t[0].is_zero())
        throw std::invalid_argument("central_coords: T coefficient must be a multiple of c");

    CentralCoords cc;
    cc.tau1 = require_real(Z.t[1], "central_coords");
    const Rational d0 = require_real(div_i(Z.A(0, 0)), "central_coords");
    if (n == 1) {
        cc.x = d0;
        cc.y = 0;
        return cc;
    }
    // d0 = x + y (1-n)/n, d1 = x + y/n
    const Rational d1 = require_real(div_i(Z.A(1, 1)), "central_coords");
    cc.y = d1 - d0;
    cc.x = d1 - cc.y / n;
    return cc;
}

Rational rotation_period_turns(const PolyVectorField& F) {
    const DiagonalField D = diagonal_field(F);
    Rational g(0);
    for (const auto& r : D.rates) g = rational_gcd(g, r);
    if (sgn(g) == 0) throw std::invalid_argument("rotation_period_turns: field does not rotate");
    return 1 / g;
}

namespace {

CenterVector integrate_central(const SemiDirectElement& Z, const Rational& turns, CBranch branch) {
    const CentralCoords cc = central_coords(Z);
    CenterVector v;
    v.u = turns * cc.x;
    v.m = to_integer(turns * cc.y);
    // theta_3 = 2 pi turns tau1 c = 4 pi c (turns tau1 / 2)
    v.z = branch == CBranch::Positive ? Rational(turns * cc.tau1 / 2) : Rational(0);
    return v;
}

void check_alpha_matches(const SemiDirectElement& Z, const PolyVectorField& F, const char* what) {
    // alpha is an anti-homomorphism with alpha(Re_sigma A) = Re alpha(A), so the
    // preimage must reproduce the field exactly.
    if (alpha(Z) != F) throw std::logic_error(std::string(what) + ": abstract preimage does not match the field");
}

}  // namespace

std::array<CenterVector, 2> kernel_generators(int n, CBranch branch) {
    if (n < 1) throw std::invalid_argument("kernel_generators: n must be >= 1");
    if (n == 1) throw std::invalid_argument("kernel_generators: n = 1 has a single generator, use kernel_generator_n1");
    const ModelParams params{n, 0.0};

    // C1 = Y_C + 2c T  <->  C + 2c T
    SemiDirectElement C1 = SemiDirectElement::matrix(mat_C(n));
    C1.t = CPoly::c_times(CRational(2));
    check_alpha_matches(C1, generator(GeneratorName::C1(), params), "C1");

    // C2 := sum_a Im[Y_a, Ybar_a] + 2(n-1)c T - C1. Since alpha([U_a, U_a^s]) = -[Y_a, Ybar_a]
    // the preimage is -sum_a Im_s[U_a, U_a^s] + 2(n-1)c T - C1.
    SemiDirectElement C2(n);
    PolyVectorField C2_field = CPoly::c_times(CRational(2 * (n - 1))) * generator(GeneratorName::T(), params) -
                               generator(GeneratorName::C1(), params);
    for (int a = 1; a < n; ++a) {
        const auto im = re_im_sigma(commutator(mat_U(n, a), mat_Usigma(n, a))).second;
        C2 += SemiDirectElement::matrix(CRational(-1) * im);
        C2_field += half_im(generator(GeneratorName::CommYaYbBar(a, a), params));
    }
    C2.t = CPoly::c_times(CRational(2 * (n - 1)));
    C2 = C2 - C1;
    check_alpha_matches(C2, C2_field, "C2");

    // Periods: 2 pi for C1; for C2 the period of its rotation form (X and w0 with rate n).
    const Rational p1 = rotation_period_turns(generator(GeneratorName::C1(), params));
    const Rational p2 = rotation_period_turns(generator(GeneratorName::C2(), params));
    return {integrate_central(C1, p1, branch), integrate_central(C2, p2, branch)};
}

CenterVector kernel_generator_n1(CBranch branch) {
    const ModelParams params{1, 0.0};
    SemiDirectElement C1 = SemiDirectElement::matrix(mat_C(1));
    C1.t = CPoly::c_times(CRational(2));
    check_alpha_matches(C1, generator(GeneratorName::C1(), params), "C1");
    return integrate_central(C1, rotation_period_turns(generator(GeneratorName::C1(), params)), branch);
}

CenterVector ker_cap_su(int n) {
    if (n < 2) throw std::invalid_argument("ker_cap_su: n must be >= 2");
    const auto g = kernel_generators(n, CBranch::Positive);
    // x g1 + y g2 with vanishing Heisenberg component
    const auto [x, y] = primitive_kernel(g[0].z, g[1].z);
    return normalized(x * g[0] + y * g[1]);
}

CenterVector f_generator(int n, CBranch branch) {
    if (n < 2) throw std::invalid_argument("f_generator: n must be >= 2 (use f_generator_n1)");
    if (branch == CBranch::Zero) return {};
    // lambda = -(x z1 + y z2) over Z^2: the subgroup generated by z1, z2
    const auto g = kernel_generators(n, branch);
    CenterVector v;
    v.z = rational_gcd(g[0].z, g[1].z);
    return v;
}

CenterVector f_generator_n1(CBranch branch) {
    if (branch == CBranch::Zero) return {};
    CenterVector v;
    v.z = abs(kernel_generator_n1(branch).z);
    return v;
}

CenterVector fprime_generator(int n, CBranch branch) {
    if (n < 2) throw std::invalid_argument("fprime_generator: n must be >= 2");
    if (branch == CBranch::Zero) return {};
    // kernel elements with no R-component lie in the center of the derived group
    const auto g = kernel_generators(n, branch);
    const auto [x, y] = primitive_kernel(g[0].u, g[1].u);
    const CenterVector k = x * g[0] + y * g[1];
    CenterVector v;
    v.z = abs(k.z);
    return v;
}

std::vector<CenterVector> kernel_from_flows(int n) {
    if (n < 1) throw std::invalid_argument("kernel_from_flows: n must be >= 1");
    const DiagonalField dc = diagonal_field(alpha_gl(mat_C(n)));
    const std::size_t nr = dc.rates.size();
    const Rational kc = require_real(dc.phi[1], "phi rate of C");
    if (n == 1) {
        Rational g(0);
        for (const auto& r : dc.rates) g = rational_gcd(g, r);
        CenterVector v;
        v.u = 1 / g;
        // 2 pi u kc c + 4 pi c z = 0
        v.z = -v.u * kc / 2;
        return {normalized(v)};
    }
    const DiagonalField dp = diagonal_field(alpha_gl(mat_Cprime(n)));
    const Rational kp = require_real(dp.phi[1], "phi rate of C'");

    // phases: u rc_j + m rp_j in Z for every coordinate j
    Rational g(0);
    for (const auto& r : dc.rates) g = rational_gcd(g, r);
    if (sgn(g) == 0) throw std::logic_error("kernel_from_flows: C acts trivially");
    const Rational L = 1 / g;  // u-period at m = 0

    auto solve_u = [&](const Integer& m) -> std::optional<Rational> {
        std::size_t j0 = 0;
        while (j0 < nr && sgn(dc.rates[j0]) == 0) ++j0;
        for (std::size_t j = 0; j < nr; ++j)
            if (sgn(dc.rates[j]) == 0 && !is_integer(m * dp.rates[j])) return std::nullopt;
        // candidates u = (k - m rp)/rc in [0, L)
        const Rational rc = dc.rates[j0], rp = dp.rates[j0];
        const Integer count = to_integer(abs(L * rc));
        for (Integer k = 0; k < count; ++k) {
            Rational u = (Rational(k) - m * rp) / rc;
            // bring into [0, L)
            Rational t = u / L;
            Integer fl = t.get_num() / t.get_den();
            if (t < 0 && Rational(fl) != t) fl -= 1;
            u -= Rational(fl) * L;
            bool ok = true;
            for (std::size_t j = 0; j < nr && ok; ++j) ok = is_integer(u * dc.rates[j] + m * dp.rates[j]);
            if (ok) return u;
        }
        return std::nullopt;
    };

    for (Integer m = 1; m <= 10000; ++m) {
        if (auto u = solve_u(m)) {
            CenterVector a, b;
            a.u = L;
            a.z = -a.u * kc / 2;
            b.u = *u;
            b.m = m;
            b.z = -(b.u * kc + Rational(m) * kp) / 2;
            return {normalized(a), normalized(b)};
        }
    }
    throw std::logic_error("kernel_from_flows: no lattice vector found");
}

bool same_lattice(const std::vector<CenterVector>& a, const std::vector<CenterVector>& b) {
    auto contained = [](const std::vector<CenterVector>& basis, const CenterVector& v) {
        std::vector<SurdVector> cols;
        for (const auto& e : basis) cols.push_back({Surd(e.u), Surd(Rational(e.m)), Surd(e.z)});
        const auto x = solve_rational_coords(cols, {Surd(v.u), Surd(Rational(v.m)), Surd(v.z)});
        if (!x) return false;
        for (const auto& xi : *x)
            if (!is_integer(xi)) return false;
        return true;
    };
    if (a.size() != b.size()) return false;
    for (const auto& v : a)
        if (!contained(b, v)) return false;
    for (const auto& v : b)
        if (!contained(a, v)) return false;
    return true;
}

}  // namespace cmapqk
