#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cmapqk/exact.hpp"
#include "cmapqk/heis.hpp"

namespace cmapqk {

// Rational quaternion algebra (a,b/Q): I^2 = a, J^2 = b, IJ = K = -JI.
struct QuatParams {
    std::int64_t a = 1;
    std::int64_t b = 1;
    friend bool operator==(const QuatParams&, const QuatParams&) = default;
};

// q0 + q1 I + q2 J + q3 K in the standard order Z<1, I, J, K>.
struct QuatInt {
    std::array<std::int64_t, 4> q{};
    QuatParams params;
    friend bool operator==(const QuatInt&, const QuatInt&) = default;
};

QuatInt quat_mul(const QuatInt& x, const QuatInt& y);
QuatInt quat_conj(const QuatInt& x);  // q0 - q1 I - q2 J - q3 K
std::int64_t reduced_norm(const QuatInt& x);

bool is_prime(std::int64_t p);
// True iff a is not a square modulo the prime b.
bool is_nonresidue(std::int64_t a, std::int64_t b);

// All q with max |q_i| <= bound and reduced norm 1, lexicographic in (q0, q1, q2, q3).
std::vector<QuatInt> enumerate_norm_one(const QuatParams& params, std::int64_t bound);

// Q = q0 + q1 I + q2 J + q3 K with I = sqrt(a) i [[0,1],[-1,0]], J = sqrt(b) [[0,1],[1,0]],
// K = IJ = sqrt(ab) i diag(1,-1).
SurdMatrix embed_matrix(const QuatInt& x);
Surd surd_det2(const SurdMatrix& M);

// Q^dagger eta Q = eta with eta = diag(1,-1). Requires norm 1.
bool su11_check(const QuatInt& x);

// Lattice O e_1 = span_Z{e_1, I e_1, J e_1, K e_1} in C^2 (Heis_5).
HeisLattice gamma2_basis(const QuatParams& params);
// Coordinates of embed(x) applied to the i-th basis vector of gamma2_basis.
std::optional<std::vector<Integer>> gamma2_image_coords(const QuatInt& x, int i);
// embed(x) and its inverse map the lattice into itself. Requires norm 1.
bool preserves_gamma2(const QuatInt& x);

// c = lambda sqrt(ab) / (8 pi), the choice with 4 pi c = lambda sqrt(ab)/2.
struct CompatibleC {
    double c;
    Rational lambda;
    QuatParams params;
    double period;  // 4 pi c (n - 1) at n = 2
};
CompatibleC c_compatible(const QuatParams& params, const Rational& lambda);

}  // namespace cmapqk
