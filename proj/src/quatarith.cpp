#include "cmapqk/quatarith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmapqk {

namespace {

std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("quaternion arithmetic overflow");
    return r;
}

std::int64_t add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("quaternion arithmetic overflow");
    return r;
}

std::int64_t sum(std::initializer_list<std::int64_t> xs) {
    std::int64_t s = 0;
    for (auto x : xs) s = add(s, x);
    return s;
}

void check_params(const QuatParams& p) {
    if (p.a <= 0 || p.b <= 0) throw std::invalid_argument("QuatParams: a and b must be positive");
}

void require_norm_one(const QuatInt& x, const char* who) {
    if (reduced_norm(x) != 1) throw std::invalid_argument(std::string(who) + ": reduced norm must be 1");
}

}  // namespace

QuatInt quat_mul(const QuatInt& x, const QuatInt& y) {
    if (!(x.params == y.params)) throw std::invalid_argument("quat_mul: parameter mismatch");
    check_params(x.params);
    const std::int64_t a = x.params.a, b = x.params.b, ab = mul(a, b);
    const auto& p = x.q;
    const auto& r = y.q;
    QuatInt z;
    z.params = x.params;
    // IK = aJ, KI = -aJ, JK = -bI, KJ = bI, K^2 = -ab
    z.q[0] = sum({mul(p[0], r[0]), mul(a, mul(p[1], r[1])), mul(b, mul(p[2], r[2])), -mul(ab, mul(p[3], r[3]))});
    z.q[1] = sum({mul(p[0], r[1]), mul(p[1], r[0]), -mul(b, mul(p[2], r[3])), mul(b, mul(p[3], r[2]))});
    z.q[2] = sum({mul(p[0], r[2]), mul(p[2], r[0]), mul(a, mul(p[1], r[3])), -mul(a, mul(p[3], r[1]))});
    z.q[3] = sum({mul(p[0], r[3]), mul(p[3], r[0]), mul(p[1], r[2]), -mul(p[2], r[1])});
    return z;
}

QuatInt quat_conj(const QuatInt& x) { return {{x.q[0], -x.q[1], -x.q[2], -x.q[3]}, x.params}; }

std::int64_t reduced_norm(const QuatInt& x) {
    check_params(x.params);
    const std::int64_t a = x.params.a, b = x.params.b;
    const auto& q = x.q;
    return sum({mul(q[0], q[0]), -mul(a, mul(q[1], q[1])), -mul(b, mul(q[2], q[2])),
                mul(mul(a, b), mul(q[3], q[3]))});
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_nonresidue(std::int64_t a, std::int64_t b) {
    if (!is_prime(b)) throw std::invalid_argument("is_nonresidue: b = " + std::to_string(b) + " is not prime");
    const std::int64_t r = ((a % b) + b) % b;
    for (std::int64_t x = 0; x < b; ++x)
        if ((x * x) % b == r) return false;
    return true;
}

std::vector<QuatInt> enumerate_norm_one(const QuatParams& params, std::int64_t bound) {
    check_params(params);
    if (bound < 0) throw std::invalid_argument("enumerate_norm_one: bound must be non-negative");
    std::vector<QuatInt> out;
    QuatInt x;
    x.params = params;
    for (std::int64_t q0 = -bound; q0 <= bound; ++q0)
        for (std::int64_t q1 = -bound; q1 <= bound; ++q1)
            for (std::int64_t q2 = -bound; q2 <= bound; ++q2)
                for (std::int64_t q3 = -bound; q3 <= bound; ++q3) {
                    x.q = {q0, q1, q2, q3};
                    if (reduced_norm(x) == 1) out.push_back(x);
                }
    return out;
}

SurdMatrix embed_matrix(const QuatInt& x) {
    check_params(x.params);
    const std::int64_t a = x.params.a, b = x.params.b;
    const Surd i = Surd::I();
    const Surd sa = Surd::sqrt(a), sb = Surd::sqrt(b);
    const Surd sab = sa * sb;  // normalized product radical
    const Surd q0(x.q[0]), q1(x.q[1]), q2(x.q[2]), q3(x.q[3]);
    SurdMatrix Q(2, SurdVector(2));
    Q[0][0] = q0 + q3 * sab * i;
    Q[0][1] = q1 * sa * i + q2 * sb;
    Q[1][0] = -(q1 * sa * i) + q2 * sb;
    Q[1][1] = q0 - q3 * sab * i;
    return Q;
}

Surd surd_det2(const SurdMatrix& M) { return M.at(0).at(0) * M.at(1).at(1) - M.at(0).at(1) * M.at(1).at(0); }

bool su11_check(const QuatInt& x) {
    require_norm_one(x, "su11_check");
    const SurdMatrix Q = embed_matrix(x);
    return preserves_h(Q) && surd_det2(Q) == Surd(1);
}

HeisLattice gamma2_basis(const QuatParams& params) {
    check_params(params);
    SurdVector e1{Surd(1), Surd()};
    std::vector<SurdVector> basis;
    for (int k = 0; k < 4; ++k) {
        QuatInt unit;
        unit.params = params;
        unit.q[k] = 1;
        basis.push_back(surd_apply(embed_matrix(unit), e1));
    }
    return lattice_from_basis(std::move(basis));
}

std::optional<std::vector<Integer>> gamma2_image_coords(const QuatInt& x, int i) {
    const HeisLattice L = gamma2_basis(x.params);
    return lattice_coords(L, surd_apply(embed_matrix(x), L.basis.at(static_cast<std::size_t>(i))));
}

bool preserves_gamma2(const QuatInt& x) {
    require_norm_one(x, "preserves_gamma2");
    const HeisLattice L = gamma2_basis(x.params);
    // inverse of a norm-one element is its conjugate
    return maps_lattice_into(embed_matrix(x), L) && maps_lattice_into(embed_matrix(quat_conj(x)), L);
}

CompatibleC c_compatible(const QuatParams& params, const Rational& lambda) {
    check_params(params);
    if (sgn(lambda) < 0) throw std::invalid_argument("c_compatible: lambda must be non-negative");
    const double half_sqrt_ab = 0.5 * std::sqrt(static_cast<double>(params.a) * static_cast<double>(params.b));
    const double c = lambda.get_d() * half_sqrt_ab / (4.0 * std::numbers::pi);
    return {c, lambda, params, 4.0 * std::numbers::pi * c};
}

}  // namespace cmapqk
