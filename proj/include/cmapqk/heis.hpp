#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cmapqk/exact.hpp"

namespace cmapqk {

using SurdMatrix = std::vector<SurdVector>;  // row-major

SurdMatrix surd_identity(int n);
SurdMatrix surd_mul(const SurdMatrix& A, const SurdMatrix& B);
SurdVector surd_apply(const SurdMatrix& A, const SurdVector& v);
SurdMatrix surd_adjoint(const SurdMatrix& A);
SurdMatrix surd_add(const SurdMatrix& A, const SurdMatrix& B);
SurdMatrix surd_scale(const Surd& s, const SurdMatrix& A);
bool surd_is_zero(const SurdMatrix& A);
Eigen::MatrixXcd surd_to_complex(const SurdMatrix& A);

// h(v, w) = sum_j eps_j conj(v_j) w_j with eps = (1, -1, ..., -1); omega = Im h.
// With this choice omega(e_1, i e_1) = +1.
Surd herm(const SurdVector& v, const SurdVector& w);
Surd omega(const SurdVector& v, const SurdVector& w);
std::complex<double> herm(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w);
double omega(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w);
SurdMatrix eta(int n);  // diag(1, -1, ..., -1)

// Heisenberg group C^n x R with (v,t)(v',t') = (v+v', t+t'+omega(v,v')/2).
struct HeisPoint {
    SurdVector v;
    Surd t;
    friend bool operator==(const HeisPoint& a, const HeisPoint& b) { return a.v == b.v && a.t == b.t; }
};
struct HeisPointF {
    Eigen::VectorXcd v;
    double t = 0.0;
};

HeisPoint heis_identity(int n);
HeisPoint heis_mul(const HeisPoint& x, const HeisPoint& y);
HeisPoint heis_inverse(const HeisPoint& x);
HeisPointF heis_mul(const HeisPointF& x, const HeisPointF& y);

// Lattice Gamma = {(v, t): v in span_Z(basis), t in (r/2) Z} where r generates omega(Lambda x Lambda).
struct HeisLattice {
    int n = 0;
    std::vector<SurdVector> basis;
    Surd r;
};

HeisLattice lattice_Ld(int n, std::int64_t d);
// Lattice with the given basis; r is computed from the omega table.
HeisLattice lattice_from_basis(std::vector<SurdVector> basis);

std::vector<std::vector<Surd>> omega_table(const HeisLattice& L);
// Positive generator of the subgroup of R spanned by the omega table.
Surd omega_generator(const HeisLattice& L);
// Generator of the center intersection: r/2.
Surd center_generator(const HeisLattice& L);

std::optional<std::vector<Integer>> lattice_coords(const HeisLattice& L, const SurdVector& v);
bool lattice_contains(const HeisLattice& L, const HeisPoint& p);
bool lattice_contains(const HeisLattice& L, const HeisPointF& p);  // always throws: inexact input
// g maps every basis vector into the lattice (and g^-1 does too when given).
bool maps_lattice_into(const SurdMatrix& g, const HeisLattice& L);

bool preserves_h(const SurdMatrix& g);
bool preserves_h(const Eigen::MatrixXcd& g, double tol);

HeisPoint su_action(const SurdMatrix& g, const HeisPoint& p);
HeisPointF su_action(const Eigen::MatrixXcd& g, const HeisPointF& p, double tol = 1e-12);

struct UnipotentWitness {
    SurdMatrix A;
    SurdMatrix g;      // 1 + A
    SurdMatrix g_inv;  // 1 - A
};
UnipotentWitness unipotent_witness(int n, std::int64_t d);

}  // namespace cmapqk
