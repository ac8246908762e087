#include "cmapqk/fields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cmapqk {

// ---------------------------------------------------------------- CPoly

const CRational& CPoly::operator[](std::size_t d) const {
    static const CRational zero;
    return d < coef_.size() ? coef_[d] : zero;
}

void CPoly::set(std::size_t d, CRational q) {
    if (coef_.size() <= d) coef_.resize(d + 1);
    coef_[d] = std::move(q);
    trim();
}

void CPoly::trim() {
    while (!coef_.empty() && coef_.back().is_zero()) coef_.pop_back();
}

CPoly CPoly::conj() const {
    CPoly r = *this;
    for (auto& q : r.coef_) q = q.conj();
    return r;
}

cplx CPoly::eval(double c) const {
    cplx s = 0.0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) s = s * c + it->to_complex();
    return s;
}

CPoly& CPoly::operator+=(const CPoly& o) {
    if (coef_.size() < o.coef_.size()) coef_.resize(o.coef_.size());
    for (std::size_t d = 0; d < o.coef_.size(); ++d) coef_[d] += o.coef_[d];
    trim();
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) { return *this += -o; }

CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coef_.resize(a.coef_.size() + b.coef_.size() - 1);
    for (std::size_t i = 0; i < a.coef_.size(); ++i)
        for (std::size_t j = 0; j < b.coef_.size(); ++j) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    r.trim();
    return r;
}

CPoly operator-(const CPoly& a) {
    CPoly r = a;
    for (auto& q : r.coef_) q = -q;
    return r;
}

std::string to_string(const CPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int d = 0; d <= p.degree(); ++d) {
        if (p[d].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(p[d]) + ")";
        if (d == 1) s += "c";
        if (d > 1) s += "c^" + std::to_string(d);
    }
    return s;
}

// ---------------------------------------------------------------- polynomials

namespace {

void poly_add(Poly& P, const Monomial& m, const CPoly& q) {
    if (q.is_zero()) return;
    auto it = P.find(m);
    if (it == P.end()) {
        P.emplace(m, q);
        return;
    }
    it->second += q;
    if (it->second.is_zero()) P.erase(it);
}

Poly poly_mul(const Poly& A, const Poly& B) {
    Poly R;
    for (const auto& [ma, qa] : A) {
        for (const auto& [mb, qb] : B) {
            Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint8_t>(m[i] + mb[i]);
            poly_add(R, m, qa * qb);
        }
    }
    return R;
}

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

std::vector<cplx> variable_values(const FieldLayout& L, const PointBarN& p) {
    std::vector<cplx> v(static_cast<std::size_t>(L.nvars()));
    for (int a = 1; a < L.n; ++a) {
        v[L.X(a)] = p.X[a - 1];
        v[L.Xbar(a)] = std::conj(p.X[a - 1]);
    }
    for (int k = 0; k < L.n; ++k) {
        v[L.w(k)] = p.w[k];
        v[L.wbar(k)] = std::conj(p.w[k]);
    }
    return v;
}

std::string var_name(const FieldLayout& L, int var) {
    if (var == L.phi()) return "phi";
    if (var < L.Xbar(1)) return "X" + std::to_string(var + 1);
    if (var < L.w(0)) return "Xbar" + std::to_string(var - L.Xbar(1) + 1);
    if (var < L.wbar(0)) return "w" + std::to_string(var - L.w(0));
    return "wbar" + std::to_string(var - L.wbar(0));
}

}  // namespace

int FieldLayout::partner(int var) const {
    if (var < Xbar(1)) return var + (n - 1);
    if (var < w(0)) return var - (n - 1);
    if (var < wbar(0)) return var + n;
    if (var < phi()) return var - n;
    return var;
}

Poly poly_derivative(const Poly& P, int var) {
    Poly R;
    for (const auto& [m, q] : P) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        --dm[var];
        poly_add(R, dm, CPoly(CRational(static_cast<long>(m[var]))) * q);
    }
    return R;
}

cplx poly_eval(const Poly& P, const std::vector<cplx>& vars, double c) {
    cplx s = 0.0;
    for (const auto& [m, q] : P) {
        cplx t = q.eval(c);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (int e = 0; e < m[i]; ++e) t *= vars[i];
        s += t;
    }
    return s;
}

// ---------------------------------------------------------------- PolyVectorField

PolyVectorField::PolyVectorField(int n) : layout_{n}, comp_(static_cast<std::size_t>(4 * n - 1)) {
    if (n < 1) throw std::invalid_argument("PolyVectorField: n must be >= 1");
}

PolyVectorField& PolyVectorField::add(int dir, const CPoly& coef, std::initializer_list<int> vars) {
    if (dir < 0 || dir >= layout_.ndirs()) throw std::out_of_range("PolyVectorField::add: direction out of range");
    Monomial m(static_cast<std::size_t>(layout_.nvars()), 0);
    for (int v : vars) {
        if (v < 0 || v >= layout_.nvars()) throw std::out_of_range("PolyVectorField::add: variable out of range");
        ++m[v];
    }
    poly_add(comp_[dir], m, coef);
    return *this;
}

bool PolyVectorField::is_zero() const {
    for (const auto& P : comp_)
        if (!P.empty()) return false;
    return true;
}

int PolyVectorField::degree() const {
    int d = -1;
    for (const auto& P : comp_)
        for (const auto& [m, q] : P) d = std::max(d, monomial_degree(m));
    return d;
}

PolyVectorField PolyVectorField::conjugate() const {
    PolyVectorField R(n());
    const auto& L = layout_;
    for (int dir = 0; dir < L.ndirs(); ++dir) {
        Poly& target = R.comp_[L.partner(dir)];
        for (const auto& [m, q] : comp_[dir]) {
            Monomial sm(m.size());
            for (int v = 0; v < L.nvars(); ++v) sm[L.partner(v)] = m[v];
            poly_add(target, sm, q.conj());
        }
    }
    return R;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
    if (o.n() != n()) throw std::invalid_argument("PolyVectorField: dimension mismatch");
    for (std::size_t d = 0; d < comp_.size(); ++d)
        for (const auto& [m, q] : o.comp_[d]) poly_add(comp_[d], m, q);
    return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
    if (o.n() != n()) throw std::invalid_argument("PolyVectorField: dimension mismatch");
    for (std::size_t d = 0; d < comp_.size(); ++d)
        for (const auto& [m, q] : o.comp_[d]) poly_add(comp_[d], m, -q);
    return *this;
}

PolyVectorField& PolyVectorField::operator*=(const CPoly& s) {
    for (auto& P : comp_) {
        Poly R;
        for (const auto& [m, q] : P) poly_add(R, m, q * s);
        P = std::move(R);
    }
    return *this;
}

Eigen::VectorXcd PolyVectorField::eval(const PointBarN& p, double c) const {
    p.validate(n());
    const auto vars = variable_values(layout_, p);
    Eigen::VectorXcd out(layout_.ndirs());
    for (int d = 0; d < layout_.ndirs(); ++d) out(d) = poly_eval(comp_[d], vars, c);
    return out;
}

namespace {

// M(chart index, direction): chart components as combinations of complex ones.
// d/dX = (d/dx - i d/dy)/2, d/dXbar = (d/dx + i d/dy)/2.
Eigen::MatrixXcd direction_to_chart(const FieldLayout& L) {
    const int n = L.n;
    const cplx I(0.0, 1.0);
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(chart::dim(n), L.ndirs());
    for (int a = 1; a < n; ++a) {
        M(chart::x(a), L.X(a)) = 0.5;
        M(chart::x(a), L.Xbar(a)) = 0.5;
        M(chart::y(a), L.X(a)) = -0.5 * I;
        M(chart::y(a), L.Xbar(a)) = 0.5 * I;
    }
    for (int k = 0; k < n; ++k) {
        M(chart::u(n, k), L.w(k)) = 0.5;
        M(chart::u(n, k), L.wbar(k)) = 0.5;
        M(chart::v(n, k), L.w(k)) = -0.5 * I;
        M(chart::v(n, k), L.wbar(k)) = 0.5 * I;
    }
    M(chart::phi(n), L.phi()) = 1.0;
    return M;
}

// D(var, chart index): d/d(chart i) = sum_var D(var, i) d/d(var).
Eigen::MatrixXcd chart_to_variable(const FieldLayout& L) {
    const int n = L.n;
    const cplx I(0.0, 1.0);
    Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(L.nvars(), chart::dim(n));
    for (int a = 1; a < n; ++a) {
        D(L.X(a), chart::x(a)) = 1.0;
        D(L.Xbar(a), chart::x(a)) = 1.0;
        D(L.X(a), chart::y(a)) = I;
        D(L.Xbar(a), chart::y(a)) = -I;
    }
    for (int k = 0; k < n; ++k) {
        D(L.w(k), chart::u(n, k)) = 1.0;
        D(L.wbar(k), chart::u(n, k)) = 1.0;
        D(L.w(k), chart::v(n, k)) = I;
        D(L.wbar(k), chart::v(n, k)) = -I;
    }
    return D;
}

}  // namespace

Eigen::VectorXcd PolyVectorField::chart_vector(const PointBarN& p, double c) const {
    return direction_to_chart(layout_) * eval(p, c);
}

Eigen::VectorXd PolyVectorField::real_vector(const PointBarN& p, double c) const {
    if (!is_real()) throw std::invalid_argument("real_vector: field is not real");
    return chart_vector(p, c).real();
}

Eigen::MatrixXd PolyVectorField::chart_jacobian(const PointBarN& p, double c) const {
    if (!is_real()) throw std::invalid_argument("chart_jacobian: field is not real");
    p.validate(n());
    const auto vars = variable_values(layout_, p);
    Eigen::MatrixXcd dP = Eigen::MatrixXcd::Zero(layout_.ndirs(), layout_.nvars());
    for (int d = 0; d < layout_.ndirs(); ++d)
        for (int v = 0; v < layout_.nvars(); ++v) dP(d, v) = poly_eval(poly_derivative(comp_[d], v), vars, c);
    return (direction_to_chart(layout_) * dP * chart_to_variable(layout_)).real();
}

std::string PolyVectorField::to_string() const {
    std::ostringstream os;
    for (int d = 0; d < layout_.ndirs(); ++d) {
        for (const auto& [m, q] : comp_[d]) {
            os << "d/d" << var_name(layout_, d) << ": " << cmapqk::to_string(q);
            for (int v = 0; v < layout_.nvars(); ++v)
                for (int e = 0; e < m[v]; ++e) os << " " << var_name(layout_, v);
            os << "\n";
        }
    }
    return os.str();
}

PolyVectorField bracket(const PolyVectorField& F, const PolyVectorField& G) {
    if (F.n() != G.n()) throw std::invalid_argument("bracket: fields over different n");
    const FieldLayout& L = F.layout();
    PolyVectorField R(F.n());
    for (int j = 0; j < L.ndirs(); ++j) {
        Poly acc;
        for (int i = 0; i < L.nvars(); ++i) {
            for (const auto& [m, q] : poly_mul(F.component(i), poly_derivative(G.component(j), i))) poly_add(acc, m, q);
            for (const auto& [m, q] : poly_mul(G.component(i), poly_derivative(F.component(j), i))) poly_add(acc, m, -q);
        }
        R.comp_[j] = std::move(acc);
    }
    if (R.degree() > 2) throw std::logic_error("bracket: result has degree > 2");
    return R;
}

PolyVectorField re_part(const PolyVectorField& F) { return F + F.conjugate(); }

PolyVectorField im_part(const PolyVectorField& F) {
    return CPoly(CRational(0, -1)) * (F - F.conjugate());
}

PolyVectorField half_re(const PolyVectorField& F) { return CPoly(CRational(Rational(1, 2))) * re_part(F); }

PolyVectorField half_im(const PolyVectorField& F) { return CPoly(CRational(Rational(1, 2))) * im_part(F); }

// ---------------------------------------------------------------- catalogue

std::string GeneratorName::label() const {
    switch (kind) {
        case Kind::YC: return "Y_C";
        case Kind::Ya: return "Y_" + std::to_string(i);
        case Kind::YaBar: return "Ybar_" + std::to_string(i);
        case Kind::Vk: return "V_" + std::to_string(i);
        case Kind::VkBar: return "Vbar_" + std::to_string(i);
        case Kind::T: return "T";
        case Kind::C1: return "C1";
        case Kind::C2: return "C2";
        case Kind::CommYaYbBar: return "[Y_" + std::to_string(i) + ",Ybar_" + std::to_string(j) + "]";
    }
    return "?";
}

PolyVectorField generator(const GeneratorName& name, const ModelParams& params) {
    params.validate();
    const int n = params.n;
    const FieldLayout L{n};
    const CRational I = CRational::I();
    auto check_a = [&](int a) {
        if (a < 1 || a > n - 1) throw std::out_of_range("generator: index a out of range 1..n-1 for " + name.label());
    };
    auto check_k = [&](int k) {
        if (k < 0 || k > n - 1) throw std::out_of_range("generator: index k out of range 0..n-1 for " + name.label());
    };

    PolyVectorField F(n);
    switch (name.kind) {
        case GeneratorName::Kind::YC:
            for (int k = 0; k < n; ++k) {
                F.add(L.w(k), CPoly(-I), {L.w(k)});
                F.add(L.wbar(k), CPoly(I), {L.wbar(k)});
            }
            F.add(L.phi(), CPoly::c_times(CRational(-2)));
            return F;
        case GeneratorName::Kind::Ya: {
            const int a = name.i;
            check_a(a);
            F.add(L.Xbar(a), CPoly(CRational(1)));
            for (int b = 1; b < n; ++b) F.add(L.X(b), CPoly(CRational(-1)), {L.X(a), L.X(b)});
            F.add(L.w(a), CPoly(CRational(-1)), {L.w(0)});
            F.add(L.wbar(0), CPoly(CRational(-1)), {L.wbar(a)});
            F.add(L.phi(), CPoly::c_times(I), {L.X(a)});
            return F;
        }
        case GeneratorName::Kind::YaBar:
            return generator(GeneratorName::Ya(name.i), params).conjugate();
        case GeneratorName::Kind::Vk: {
            const int k = name.i;
            check_k(k);
            F.add(L.w(k), CPoly(CRational(1)));
            F.add(L.phi(), CPoly(CRational(0, k == 0 ? 2 : -2)), {L.wbar(k)});
            return F;
        }
        case GeneratorName::Kind::VkBar:
            return generator(GeneratorName::Vk(name.i), params).conjugate();
        case GeneratorName::Kind::T:
            F.add(L.phi(), CPoly(CRational(1)));
            return F;
        case GeneratorName::Kind::C1: {
            PolyVectorField T = generator(GeneratorName::T(), params);
            return generator(GeneratorName::YC(), params) + CPoly::c_times(CRational(2)) * T;
        }
        case GeneratorName::Kind::C2: {
            // sum_a Im[Y_a, Ybar_a] + 2(n-1)c T + C1: rotates X and w0 with rate -n
            PolyVectorField S = generator(GeneratorName::C1(), params);
            S += CPoly::c_times(CRational(2 * (n - 1))) * generator(GeneratorName::T(), params);
            for (int a = 1; a < n; ++a) S += half_im(generator(GeneratorName::CommYaYbBar(a, a), params));
            return S;
        }
        case GeneratorName::Kind::CommYaYbBar:
            check_a(name.i);
            check_a(name.j);
            return bracket(generator(GeneratorName::Ya(name.i), params),
                           generator(GeneratorName::YaBar(name.j), params));
    }
    throw std::logic_error("generator: unknown kind");
}

std::vector<std::pair<std::string, PolyVectorField>> real_catalogue(const ModelParams& params) {
    const int n = params.n;
    std::vector<std::pair<std::string, PolyVectorField>> out;
    out.emplace_back("Y_C", generator(GeneratorName::YC(), params));
    out.emplace_back("T", generator(GeneratorName::T(), params));
    out.emplace_back("C1", generator(GeneratorName::C1(), params));
    out.emplace_back("C2", generator(GeneratorName::C2(), params));
    for (int a = 1; a < n; ++a) {
        const auto Y = generator(GeneratorName::Ya(a), params);
        out.emplace_back("Re Y_" + std::to_string(a), re_part(Y));
        out.emplace_back("Im Y_" + std::to_string(a), im_part(Y));
    }
    for (int k = 0; k < n; ++k) {
        const auto V = generator(GeneratorName::Vk(k), params);
        out.emplace_back("Re V_" + std::to_string(k), re_part(V));
        out.emplace_back("Im V_" + std::to_string(k), im_part(V));
    }
    for (int a = 1; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const auto K = generator(GeneratorName::CommYaYbBar(a, b), params);
            const std::string tag = "[Y_" + std::to_string(a) + ",Ybar_" + std::to_string(b) + "]";
            if (a != b) out.emplace_back("Re " + tag, half_re(K));
            out.emplace_back("Im " + tag, half_im(K));
        }
    }
    return out;
}

// ---------------------------------------------------------------- Killing check

Eigen::MatrixXd lie_derivative_chart(const Eigen::VectorXd& F, const Eigen::MatrixXd& J, const PointBarN& p,
                                     const ModelParams& params, double step) {
    const Eigen::MatrixXd G = metric_gram(p, params);
    const auto dG = metric_derivatives(p, params, step);
    Eigen::MatrixXd L = J.transpose() * G + G * J;
    for (int k = 0; k < F.size(); ++k) L += F(k) * dG[k];
    return L;
}

Eigen::MatrixXd lie_derivative_metric(const PolyVectorField& F, const PointBarN& p, const ModelParams& params,
                                      double step) {
    if (F.n() != params.n) throw std::invalid_argument("lie_derivative_metric: field dimension does not match n");
    return lie_derivative_chart(F.real_vector(p, params.c), F.chart_jacobian(p, params.c), p, params, step);
}

// ---------------------------------------------------------------- flows

std::string FlowName::label() const {
    switch (kind) {
        case Kind::C1: return "C1";
        case Kind::C2: return "C2";
        case Kind::T: return "T";
        case Kind::ReV: return "Re V_" + std::to_string(k);
        case Kind::ImV: return "Im V_" + std::to_string(k);
    }
    return "?";
}

FlowName flow_name(const GeneratorName& g) {
    switch (g.kind) {
        case GeneratorName::Kind::C1: return {FlowName::Kind::C1};
        case GeneratorName::Kind::C2: return {FlowName::Kind::C2};
        case GeneratorName::Kind::T: return {FlowName::Kind::T};
        default: throw UnsupportedFlow("flow: no closed-form flow implemented for " + g.label());
    }
}

namespace {

// Rotation rate (w -> e^{-i rate t} w) of the rotation flows.
int rotation_rate(const FlowName& name, int n) { return name.kind == FlowName::Kind::C1 ? 1 : n; }

bool is_rotation(const FlowName& name) {
    return name.kind == FlowName::Kind::C1 || name.kind == FlowName::Kind::C2;
}

void check_flow(const FlowName& name, int n) {
    if ((name.kind == FlowName::Kind::ReV || name.kind == FlowName::Kind::ImV) && (name.k < 0 || name.k >= n))
        throw std::out_of_range("flow: index k out of range for " + name.label());
}

PointBarN rotate(const FlowName& name, cplx e, const PointBarN& p) {
    PointBarN q = p;
    if (name.kind == FlowName::Kind::C1) {
        for (auto& z : q.w) z *= e;
    } else {
        for (auto& z : q.X) z *= e;
        q.w[0] *= e;
    }
    return q;
}

PointBarN translate(const FlowName& name, double t, const PointBarN& p) {
    PointBarN q = p;
    const int k = name.k;
    const double sign = (k == 0) ? 1.0 : -1.0;  // V_0 vs V_a
    const double u = p.w.empty() ? 0.0 : p.w[k].real();
    const double v = p.w.empty() ? 0.0 : p.w[k].imag();
    switch (name.kind) {
        case FlowName::Kind::T: q.phi += t; break;
        case FlowName::Kind::ReV:  // d/du + 4 sign v d/dphi
            q.w[k] += cplx(t, 0.0);
            q.phi += 4.0 * sign * v * t;
            break;
        case FlowName::Kind::ImV:  // -d/dv + 4 sign u d/dphi
            q.w[k] -= cplx(0.0, t);
            q.phi += 4.0 * sign * u * t;
            break;
        default: break;
    }
    return q;
}

Eigen::MatrixXd rotation_jacobian(const FlowName& name, cplx e, int n) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(chart::dim(n), chart::dim(n));
    auto block = [&](int i, int j) {  // (re, im) -> multiplication by e
        J(i, i) = e.real();
        J(i, j) = -e.imag();
        J(j, i) = e.imag();
        J(j, j) = e.real();
    };
    if (name.kind == FlowName::Kind::C1) {
        for (int k = 0; k < n; ++k) block(chart::u(n, k), chart::v(n, k));
    } else {
        for (int a = 1; a < n; ++a) block(chart::x(a), chart::y(a));
        block(chart::u(n, 0), chart::v(n, 0));
    }
    return J;
}

cplx phase_of_turns(const Rational& turns) {
    // exact reduction modulo 1 before touching floating point
    Rational frac = turns - Rational(Integer(turns.get_num() / turns.get_den()));
    if (sgn(frac) == 0) return cplx(1.0, 0.0);
    const double ang = -2.0 * std::numbers::pi * frac.get_d();
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

PointBarN flow(const FlowName& name, double t, const PointBarN& p) {
    const int n = static_cast<int>(p.w.size());
    check_flow(name, n);
    if (is_rotation(name)) return rotate(name, std::polar(1.0, -rotation_rate(name, n) * t), p);
    return translate(name, t, p);
}

PointBarN flow(const FlowName& name, const Turns& t, const PointBarN& p) {
    const int n = static_cast<int>(p.w.size());
    check_flow(name, n);
    if (is_rotation(name)) {
        const Rational turns = t.value * rotation_rate(name, n);
        if (sgn(turns - Rational(Integer(turns.get_num() / turns.get_den()))) == 0) return p;
        return rotate(name, phase_of_turns(turns), p);
    }
    return translate(name, 2.0 * std::numbers::pi * t.value.get_d(), p);
}

Eigen::MatrixXd flow_jacobian(const FlowName& name, double t, int n) {
    check_flow(name, n);
    if (is_rotation(name)) return rotation_jacobian(name, std::polar(1.0, -rotation_rate(name, n) * t), n);
    Eigen::MatrixXd J = Eigen::MatrixXd::Identity(chart::dim(n), chart::dim(n));
    const double sign = (name.k == 0) ? 1.0 : -1.0;
    if (name.kind == FlowName::Kind::ReV) J(chart::phi(n), chart::v(n, name.k)) = 4.0 * sign * t;
    if (name.kind == FlowName::Kind::ImV) J(chart::phi(n), chart::u(n, name.k)) = 4.0 * sign * t;
    return J;
}

Eigen::MatrixXd flow_jacobian(const FlowName& name, const Turns& t, int n) {
    check_flow(name, n);
    if (is_rotation(name)) return rotation_jacobian(name, phase_of_turns(t.value * rotation_rate(name, n)), n);
    return flow_jacobian(name, 2.0 * std::numbers::pi * t.value.get_d(), n);
}

PolyVectorField flow_field(const FlowName& name, const ModelParams& params) {
    check_flow(name, params.n);
    switch (name.kind) {
        case FlowName::Kind::C1: return generator(GeneratorName::C1(), params);
        case FlowName::Kind::C2: return generator(GeneratorName::C2(), params);
        case FlowName::Kind::T: return generator(GeneratorName::T(), params);
        case FlowName::Kind::ReV: return re_part(generator(GeneratorName::Vk(name.k), params));
        case FlowName::Kind::ImV: return im_part(generator(GeneratorName::Vk(name.k), params));
    }
    throw std::logic_error("flow_field: unknown kind");
}

// ---------------------------------------------------------------- frame, stabilizer

int frame_rank(const PointBarN& p, const ModelParams& params, double tol) {
    params.validate();
    const int n = params.n;
    std::vector<PolyVectorField> frame;
    for (int a = 1; a < n; ++a) frame.push_back(generator(GeneratorName::Ya(a), params));
    for (int k = 0; k < n; ++k) frame.push_back(generator(GeneratorName::Vk(k), params));
    for (int a = 1; a < n; ++a) frame.push_back(generator(GeneratorName::YaBar(a), params));
    for (int k = 0; k < n; ++k) frame.push_back(generator(GeneratorName::VkBar(k), params));
    frame.push_back(generator(GeneratorName::T(), params));

    const int m = 4 * n - 1;
    Eigen::MatrixXcd M(m, m);
    for (int r = 0; r < m; ++r) M.row(r) = frame[r].eval(p, params.c).transpose();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(M);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > tol * s(0)) ++rank;
    return rank;
}

std::vector<PolyVectorField> stabilizer_basis(const ModelParams& params, double rho0) {
    params.validate();
    if (!(rho0 > 0.0)) throw std::domain_error("stabilizer_basis: rho0 must be positive");
    const int n = params.n;
    const PolyVectorField T = generator(GeneratorName::T(), params);
    std::vector<PolyVectorField> out;
    out.push_back(generator(GeneratorName::YC(), params) + CPoly::c_times(CRational(2)) * T);
    for (int a = 1; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            const auto K = generator(GeneratorName::CommYaYbBar(a, b), params);
            if (a == b) {
                out.push_back(half_im(K) + CPoly::c_times(CRational(2)) * T);
            } else {
                out.push_back(half_re(K));
                out.push_back(half_im(K));
            }
        }
    }
    return out;
}

}  // namespace cmapqk
