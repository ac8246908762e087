#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cmapqk/exact.hpp"
#include "cmapqk/fields.hpp"

namespace cmapqk {

// n x n matrix with complex rational entries.
class MatGl {
public:
    explicit MatGl(int n);
    static MatGl identity(int n);
    static MatGl unit(int n, int i, int j);  // elementary matrix E_ij

    int n() const { return n_; }
    CRational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
    const CRational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }

    bool is_zero() const;
    MatGl transpose() const;
    MatGl conj() const;

    MatGl& operator+=(const MatGl& o);
    MatGl& operator-=(const MatGl& o);
    MatGl& operator*=(const CRational& s);
    friend MatGl operator+(MatGl a, const MatGl& b) { return a += b; }
    friend MatGl operator-(MatGl a, const MatGl& b) { return a -= b; }
    friend MatGl operator*(const CRational& s, MatGl a) { return a *= s; }
    friend MatGl operator*(const MatGl& a, const MatGl& b);
    friend bool operator==(const MatGl& a, const MatGl& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend bool operator!=(const MatGl& a, const MatGl& b) { return !(a == b); }

private:
    int n_;
    std::vector<CRational> a_;
};

MatGl commutator(const MatGl& A, const MatGl& B);

// A^sigma = -I conj(A)^T I with I = diag(-1, 1, ..., 1)
MatGl sigma(const MatGl& A);
// (Re_sigma A, Im_sigma A) = ((A + A^sigma)/2, (A - A^sigma)/(2i))
std::pair<MatGl, MatGl> re_im_sigma(const MatGl& A);

// Named matrices of gl(n).
MatGl mat_C(int n);                 // i * identity
MatGl mat_Cprime(int n);            // (i/n) diag(1-n, 1, ..., 1)
MatGl mat_U(int n, int a);          // row 0 carries e_a^T
MatGl mat_Usigma(int n, int a);     // sigma(U_a): column 0 carries e_a

// Element of gl(n,C) + heis^C: A + sum p_k E_k + sum q_k Ebar_k + t T,
// with E_k = e_k - i f_k. The center coefficient may depend on c.
struct SemiDirectElement {
    MatGl A;
    std::vector<CRational> p;  // E_k coefficients
    std::vector<CRational> q;  // Ebar_k coefficients
    CPoly t;

    explicit SemiDirectElement(int n);
    int n() const { return A.n(); }

    static SemiDirectElement matrix(const MatGl& A);
    static SemiDirectElement E(int n, int k);
    static SemiDirectElement Ebar(int n, int k);
    static SemiDirectElement T(int n);
    // e_k = (E_k + Ebar_k)/2, f_k = i (E_k - Ebar_k)/2
    static SemiDirectElement e(int n, int k);
    static SemiDirectElement f(int n, int k);

    SemiDirectElement& operator+=(const SemiDirectElement& o);
    SemiDirectElement& operator*=(const CPoly& s);
    friend SemiDirectElement operator+(SemiDirectElement a, const SemiDirectElement& b) { return a += b; }
    friend SemiDirectElement operator-(SemiDirectElement a, const SemiDirectElement& b) {
        return a += CPoly(CRational(-1)) * b;
    }
    friend SemiDirectElement operator*(const CPoly& s, SemiDirectElement a) { return a *= s; }
    friend bool operator==(const SemiDirectElement& a, const SemiDirectElement& b) {
        return a.A == b.A && a.p == b.p && a.q == b.q && a.t == b.t;
    }
};

// [A, v] = -A^T v on the E-part and I A I on the Ebar-part;
// [e_k, f_l] = 2 (delta_k0 delta_l0 - sum_a delta_ka delta_la) T.
SemiDirectElement semidirect_bracket(const SemiDirectElement& x, const SemiDirectElement& y);

// Basis {C, U_a, U_a^sigma, [U_a, U_b^sigma], E_k, Ebar_k, T} with labels.
std::vector<std::pair<std::string, SemiDirectElement>> algebra_basis(int n);

// The infinitesimal action as polynomial vector fields. For the basis this gives
// Y_C, Y_a, Ybar_a, -[Y_a, Ybar_b], V_k, Vbar_k, T.
PolyVectorField alpha_gl(const MatGl& A);
PolyVectorField alpha(const SemiDirectElement& x, const CRational& t_scale = CRational(1));

struct StructureReport {
    int n = 0;
    int pairs_checked = 0;
    std::vector<std::string> mismatches;
};
// Checks bracket(alpha(x), alpha(y)) == -alpha([x, y]) for all ordered basis pairs.
// t_scale multiplies the image of T (fault injection for self-tests).
StructureReport structure_check(const ModelParams& params, const CRational& t_scale = CRational(1));

// ---------------------------------------------------------------- center lattice

enum class CBranch { Positive, Zero };

// theta = (2 pi u, 2 pi m, 4 pi c z) in R x 2piZ x R
struct CenterVector {
    Rational u{0};
    Integer m{0};
    Rational z{0};

    bool is_zero() const { return sgn(u) == 0 && sgn(m) == 0 && sgn(z) == 0; }
    std::string pretty() const;  // e.g. "(pi,2pi,0)"
    friend bool operator==(const CenterVector& a, const CenterVector& b) {
        return a.u == b.u && a.m == b.m && a.z == b.z;
    }
    friend CenterVector operator+(const CenterVector& a, const CenterVector& b) {
        return {a.u + b.u, a.m + b.m, a.z + b.z};
    }
    friend CenterVector operator*(const Integer& k, const CenterVector& a) { return {k * a.u, k * a.m, k * a.z}; }
};

// Coordinates (x, y, tau) of a central element x C + y C' + tau T; tau = tau1 * c.
struct CentralCoords {
    Rational x, y, tau1;
};
CentralCoords central_coords(const SemiDirectElement& Z);

// Period of a rotation field (coordinates rotate with rational rates) in turns of 2 pi.
Rational rotation_period_turns(const PolyVectorField& F);

// Generators of ker beta from the central fields C1 and C2.
std::array<CenterVector, 2> kernel_generators(int n, CBranch branch = CBranch::Positive);
CenterVector kernel_generator_n1(CBranch branch = CBranch::Positive);
// Generator of ker beta intersected with the central Z-factor part (z = 0).
CenterVector ker_cap_su(int n);
CenterVector f_generator(int n, CBranch branch = CBranch::Positive);
CenterVector f_generator_n1(CBranch branch = CBranch::Positive);
CenterVector fprime_generator(int n, CBranch branch = CBranch::Positive);

// Lattice of central elements acting trivially, read off the exact phases of
// alpha(C), alpha(C') and alpha(T). Returns one generator for n = 1, two otherwise.
std::vector<CenterVector> kernel_from_flows(int n);
// True when both generator lists span the same lattice.
bool same_lattice(const std::vector<CenterVector>& a, const std::vector<CenterVector>& b);

}  // namespace cmapqk
