#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cmapqk/exact.hpp"
#include "cmapqk/geometry.hpp"

namespace cmapqk {

// Polynomial in the deformation parameter c with complex rational coefficients.
class CPoly {
public:
    CPoly() = default;
    CPoly(CRational c0) { set(0, std::move(c0)); }
    static CPoly c_times(CRational q) {  // q * c
        CPoly p;
        p.set(1, std::move(q));
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    const CRational& operator[](std::size_t d) const;
    CPoly conj() const;
    cplx eval(double c) const;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a);
    friend bool operator==(const CPoly& a, const CPoly& b) { return a.coef_ == b.coef_; }

private:
    void set(std::size_t d, CRational q);
    void trim();
    std::vector<CRational> coef_;
};

std::string to_string(const CPoly& p);

// Exponent vector over the variables (X^1..X^{n-1}, Xbar^1.., w^0..w^{n-1}, wbar^0..)
using Monomial = std::vector<std::uint8_t>;
using Poly = std::map<Monomial, CPoly>;

// Index layout shared by variables and derivative directions. The derivative
// directions are the variables followed by d/dphi.
struct FieldLayout {
    int n;
    int nvars() const { return 4 * n - 2; }
    int ndirs() const { return 4 * n - 1; }
    int X(int a) const { return a - 1; }             // a = 1..n-1
    int Xbar(int a) const { return n - 2 + a; }
    int w(int k) const { return 2 * (n - 1) + k; }   // k = 0..n-1
    int wbar(int k) const { return 3 * n - 2 + k; }
    int phi() const { return 4 * n - 2; }
    int partner(int var) const;                      // X <-> Xbar, w <-> wbar
};

// Vector field sum_d P_d(X, Xbar, w, wbar; c) d/d(direction d). No d/drho part.
class PolyVectorField {
public:
    explicit PolyVectorField(int n);

    int n() const { return layout_.n; }
    const FieldLayout& layout() const { return layout_; }
    const Poly& component(int dir) const { return comp_.at(static_cast<std::size_t>(dir)); }

    // Adds coef * (product of the listed variables) to the component along dir.
    PolyVectorField& add(int dir, const CPoly& coef, std::initializer_list<int> vars = {});

    bool is_zero() const;
    int degree() const;  // max total degree over all components
    PolyVectorField conjugate() const;
    bool is_real() const { return *this == conjugate(); }

    PolyVectorField& operator+=(const PolyVectorField& o);
    PolyVectorField& operator-=(const PolyVectorField& o);
    PolyVectorField& operator*=(const CPoly& s);
    friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
    friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
    friend PolyVectorField operator*(const CPoly& s, PolyVectorField a) { return a *= s; }
    friend PolyVectorField operator-(PolyVectorField a) { return a *= CPoly(CRational(-1)); }
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.comp_ == b.comp_; }
    friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) { return !(a == b); }

    // Complex components on (dX, dXbar, dw, dwbar, dphi).
    Eigen::VectorXcd eval(const PointBarN& p, double c) const;
    // Complex components in RealChart order (rho component is zero).
    Eigen::VectorXcd chart_vector(const PointBarN& p, double c) const;
    // Real field only: RealChart vector and exact Jacobian J(k, i) = d_i F^k.
    Eigen::VectorXd real_vector(const PointBarN& p, double c) const;
    Eigen::MatrixXd chart_jacobian(const PointBarN& p, double c) const;

    // Sparse listing "dir: coeff * monomial" for diagnostics.
    std::string to_string() const;

private:
    friend PolyVectorField bracket(const PolyVectorField& F, const PolyVectorField& G);
    FieldLayout layout_;
    std::vector<Poly> comp_;
};

Poly poly_derivative(const Poly& P, int var);
cplx poly_eval(const Poly& P, const std::vector<cplx>& vars, double c);

PolyVectorField bracket(const PolyVectorField& F, const PolyVectorField& G);

// F + conj(F) and -i (F - conj(F)): real fields.
PolyVectorField re_part(const PolyVectorField& F);
PolyVectorField im_part(const PolyVectorField& F);
// (F + conj F)/2 and (F - conj F)/(2i).
PolyVectorField half_re(const PolyVectorField& F);
PolyVectorField half_im(const PolyVectorField& F);

struct GeneratorName {
    enum class Kind { YC, Ya, YaBar, Vk, VkBar, T, C1, C2, CommYaYbBar };
    Kind kind;
    int i = 0;
    int j = 0;

    static GeneratorName YC() { return {Kind::YC}; }
    static GeneratorName Ya(int a) { return {Kind::Ya, a}; }
    static GeneratorName YaBar(int a) { return {Kind::YaBar, a}; }
    static GeneratorName Vk(int k) { return {Kind::Vk, k}; }
    static GeneratorName VkBar(int k) { return {Kind::VkBar, k}; }
    static GeneratorName T() { return {Kind::T}; }
    static GeneratorName C1() { return {Kind::C1}; }
    static GeneratorName C2() { return {Kind::C2}; }
    static GeneratorName CommYaYbBar(int a, int b) { return {Kind::CommYaYbBar, a, b}; }

    std::string label() const;
};

PolyVectorField generator(const GeneratorName& name, const ModelParams& params);

// Real Killing fields covering the whole action: YC, Re/Im of Y_a, Re/Im of V_k,
// T, C1, C2, paired with a label.
std::vector<std::pair<std::string, PolyVectorField>> real_catalogue(const ModelParams& params);

// (L_F g)_ij = F^k d_k g_ij + g_kj d_i F^k + g_ik d_j F^k for a chart field
// given by its value and Jacobian at p. Metric derivatives are central differences.
Eigen::MatrixXd lie_derivative_chart(const Eigen::VectorXd& F, const Eigen::MatrixXd& J, const PointBarN& p,
                                     const ModelParams& params, double step);
Eigen::MatrixXd lie_derivative_metric(const PolyVectorField& F, const PointBarN& p, const ModelParams& params,
                                      double step);

// Closed-form flows. Re/Im parts of V_k mean re_part / im_part of generator(Vk(k)).
struct FlowName {
    enum class Kind { C1, C2, T, ReV, ImV };
    Kind kind;
    int k = 0;
    std::string label() const;
};

class UnsupportedFlow : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

FlowName flow_name(const GeneratorName& g);  // C1, C2, T; throws UnsupportedFlow otherwise

// Exact multiple of 2 pi, so that periods can be hit without rounding.
struct Turns {
    Rational value;
};

PointBarN flow(const FlowName& name, double t, const PointBarN& p);
PointBarN flow(const FlowName& name, const Turns& t, const PointBarN& p);
// Jacobian of the flow map in RealChart coordinates (it is linear in the coordinates).
Eigen::MatrixXd flow_jacobian(const FlowName& name, double t, int n);
Eigen::MatrixXd flow_jacobian(const FlowName& name, const Turns& t, int n);
PolyVectorField flow_field(const FlowName& name, const ModelParams& params);

// Rank of the coefficient matrix of {Y_a, V_k, Ybar_a, Vbar_k, T} at p.
int frame_rank(const PointBarN& p, const ModelParams& params, double tol = 1e-8);

// Real fields spanning the stabilizer of n0 = (X=0, w=0, phi=0, rho0).
std::vector<PolyVectorField> stabilizer_basis(const ModelParams& params, double rho0);

}  // namespace cmapqk
