#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "cmapqk/quatarith.hpp"
#include "cmapqk/sampling.hpp"
#include "support.hpp"

using namespace cmapqk;
using cd = std::complex<double>;

namespace {

QuatInt qt(const QuatParams& p, std::int64_t q0, std::int64_t q1, std::int64_t q2, std::int64_t q3) {
    return {{q0, q1, q2, q3}, p};
}

// 2x2 image written straight from the matrix formula, in floating point
Eigen::Matrix2cd embed_oracle(const QuatInt& x) {
    const double sa = std::sqrt(double(x.params.a)), sb = std::sqrt(double(x.params.b));
    const cd i(0, 1);
    const auto& q = x.q;
    Eigen::Matrix2cd M;
    M << double(q[0]) + sa * sb * i * double(q[3]), sa * i * double(q[1]) + sb * double(q[2]),
        -sa * i * double(q[1]) + sb * double(q[2]), double(q[0]) - sa * sb * i * double(q[3]);
    return M;
}

QuatInt rnd_quat(PointSampler& s, const QuatParams& p) {
    return qt(p, s.integer(-30, 30), s.integer(-30, 30), s.integer(-30, 30), s.integer(-30, 30));
}

const QuatParams kParams[] = {{2, 3}, {3, 7}, {2, 5}};

}  // namespace

TEST_CASE("multiplication table") {
    const QuatParams p{2, 3};
    const QuatInt I = qt(p, 0, 1, 0, 0), J = qt(p, 0, 0, 1, 0), K = qt(p, 0, 0, 0, 1);
    CHECK(quat_mul(I, I) == qt(p, 2, 0, 0, 0));
    CHECK(quat_mul(J, J) == qt(p, 3, 0, 0, 0));
    CHECK(quat_mul(I, J) == K);
    CHECK(quat_mul(J, I) == qt(p, 0, 0, 0, -1));
    CHECK(quat_mul(K, K) == qt(p, -6, 0, 0, 0));
    CHECK(reduced_norm(I) == -2);
    CHECK(reduced_norm(qt(p, 3, 2, 0, 0)) == 1);
    CHECK_THROWS_AS(quat_mul(I, qt({3, 7}, 0, 1, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(reduced_norm(qt({0, 3}, 1, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("product and norm against the matrix oracle") {
    PointSampler s(testsupport::kSeed);
    for (const auto& p : kParams) {
        for (int i = 0; i < 100; ++i) {
            const QuatInt x = rnd_quat(s, p), y = rnd_quat(s, p);
            const QuatInt xy = quat_mul(x, y);
            CHECK(reduced_norm(xy) == reduced_norm(x) * reduced_norm(y));
            CHECK(quat_mul(x, quat_conj(x)) == qt(p, reduced_norm(x), 0, 0, 0));
            const Eigen::Matrix2cd Mx = embed_oracle(x), My = embed_oracle(y);
            CHECK((embed_oracle(xy) - Mx * My).cwiseAbs().maxCoeff() <= 1e-9 * (1 + (Mx * My).cwiseAbs().maxCoeff()));
            CHECK(std::abs(Mx.determinant() - double(reduced_norm(x))) <= 1e-9 * (1 + std::abs(double(reduced_norm(x)))));
            CHECK((surd_to_complex(embed_matrix(x)) - Mx).cwiseAbs().maxCoeff() <= 1e-12 * (1 + Mx.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("embedding is exact") {
    PointSampler s(testsupport::kSeed);
    for (const auto& p : kParams) {
        const QuatInt J = qt(p, 0, 0, 1, 0);
        const SurdMatrix EJ = embed_matrix(J);
        CHECK(EJ[0][0].is_zero());
        CHECK(EJ[0][1] == Surd::sqrt(p.b));
        CHECK(EJ[1][0] == Surd::sqrt(p.b));
        for (int i = 0; i < 20; ++i) {
            const QuatInt x = rnd_quat(s, p), y = rnd_quat(s, p);
            CHECK(surd_det2(embed_matrix(x)) == Surd(Rational(reduced_norm(x))));
            CHECK(surd_mul(embed_matrix(x), embed_matrix(y)) == embed_matrix(quat_mul(x, y)));
        }
    }
}

TEST_CASE("quadratic non-residues") {
    CHECK(is_nonresidue(2, 3));
    CHECK_FALSE(is_nonresidue(4, 7));
    CHECK(is_nonresidue(3, 7));
    CHECK(is_nonresidue(2, 5));
    CHECK_FALSE(is_nonresidue(0, 5));
    CHECK_THROWS_AS(is_nonresidue(2, 9), std::invalid_argument);
    // oracle: Euler's criterion a^((b-1)/2) = -1 mod b
    for (std::int64_t b : {3, 5, 7, 11, 13, 17, 19, 23}) {
        for (std::int64_t a = 1; a < b; ++a) {
            std::int64_t r = 1;
            for (std::int64_t k = 0; k < (b - 1) / 2; ++k) r = r * a % b;
            CHECK(is_nonresidue(a, b) == (r == b - 1));
        }
    }
}

TEST_CASE("no zero divisors in the box for the division algebras") {
    for (const auto& p : kParams) {
        int zero_norms = 0;
        for (std::int64_t q0 = -6; q0 <= 6; ++q0)
            for (std::int64_t q1 = -6; q1 <= 6; ++q1)
                for (std::int64_t q2 = -6; q2 <= 6; ++q2)
                    for (std::int64_t q3 = -6; q3 <= 6; ++q3) {
                        const QuatInt x = qt(p, q0, q1, q2, q3);
                        if (x == qt(p, 0, 0, 0, 0)) continue;
                        if (reduced_norm(x) == 0) ++zero_norms;
                    }
        CHECK(zero_norms == 0);
    }
    // split control: a = 1 has 1 + I as a zero divisor
    const QuatParams split{1, 3};
    CHECK(reduced_norm(qt(split, 1, 1, 0, 0)) == 0);
    CHECK(quat_mul(qt(split, 1, 1, 0, 0), qt(split, 1, -1, 0, 0)) == qt(split, 0, 0, 0, 0));
}

TEST_CASE("norm-one enumeration") {
    const QuatParams p{2, 3};
    const auto els = enumerate_norm_one(p, 5);
    auto has = [&](const QuatInt& x) { return std::find(els.begin(), els.end(), x) != els.end(); };
    CHECK(has(qt(p, 1, 0, 0, 0)));
    CHECK(has(qt(p, -1, 0, 0, 0)));
    for (int s0 : {-1, 1})
        for (int s1 : {-1, 1}) CHECK(has(qt(p, 3 * s0, 2 * s1, 0, 0)));
    // oracle: brute-force count with an independently written norm form
    std::size_t count = 0;
    for (std::int64_t q0 = -5; q0 <= 5; ++q0)
        for (std::int64_t q1 = -5; q1 <= 5; ++q1)
            for (std::int64_t q2 = -5; q2 <= 5; ++q2)
                for (std::int64_t q3 = -5; q3 <= 5; ++q3)
                    if (q0 * q0 - 2 * q1 * q1 - 3 * q2 * q2 + 6 * q3 * q3 == 1) ++count;
    CHECK(els.size() == count);
    CHECK(std::is_sorted(els.begin(), els.end(), [](const QuatInt& x, const QuatInt& y) { return x.q < y.q; }));
    CHECK_THROWS_AS(enumerate_norm_one(p, -1), std::invalid_argument);
}

TEST_CASE("norm-one elements lie in SU(1,1) and preserve Gamma_2") {
    for (const auto& p : kParams) {
        CAPTURE(p.a);
        CAPTURE(p.b);
        const auto els = enumerate_norm_one(p, 5);
        CHECK(els.size() > 2);
        for (const auto& x : els) {
            CHECK(su11_check(x));
            CHECK(preserves_gamma2(x));
            // float oracle: Q^dagger eta Q = eta
            const Eigen::Matrix2cd Q = embed_oracle(x);
            Eigen::Matrix2cd E = Eigen::Matrix2cd::Identity();
            E(1, 1) = -1.0;
            CHECK((Q.adjoint() * E * Q - E).cwiseAbs().maxCoeff() <= 1e-9 * Q.cwiseAbs2().maxCoeff());
        }
    }
    CHECK_THROWS_AS(su11_check(qt({2, 3}, 1, 1, 0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(preserves_gamma2(qt({2, 3}, 2, 0, 0, 0)), std::invalid_argument);
}

TEST_CASE("gamma2 basis and omega table") {
    for (const auto& p : kParams) {
        const HeisLattice L = gamma2_basis(p);
        REQUIRE(L.basis.size() == 4);
        const Surd i = Surd::I(), sa = Surd::sqrt(p.a), sb = Surd::sqrt(p.b), sab = Surd::sqrt(p.a * p.b);
        CHECK(L.basis[0] == SurdVector{Surd(1), Surd()});
        CHECK(L.basis[1] == SurdVector{Surd(), -(sa * i)});
        CHECK(L.basis[2] == SurdVector{Surd(), sb});
        CHECK(L.basis[3] == SurdVector{sab * i, Surd()});
        const auto T = omega_table(L);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const bool stated = (r == 0 && c == 3) || (r == 3 && c == 0) || (r == 1 && c == 2) || (r == 2 && c == 1);
                if (stated) {
                    CHECK((T[r][c] == sab || T[r][c] == -sab));
                } else {
                    CHECK(T[r][c].is_zero());
                }
            }
        // signed values under omega(e1, i e1) > 0
        CHECK(T[0][3] == sab);
        CHECK(T[1][2] == -sab);
        CHECK(L.r == sab);
    }
}

TEST_CASE("image coordinates") {
    const QuatParams p{2, 3};
    const QuatInt x = qt(p, 3, 2, 0, 0);
    CHECK(*gamma2_image_coords(x, 0) == std::vector<Integer>{3, 2, 0, 0});
    CHECK(*gamma2_image_coords(x, 1) == std::vector<Integer>{4, 3, 0, 0});
}

TEST_CASE("compatible one-loop parameter") {
    const auto z = c_compatible({2, 3}, Rational(0));
    CHECK(z.c == 0.0);
    const auto c = c_compatible({2, 3}, Rational(1));
    CHECK(std::abs(c.c - std::sqrt(6.0) / (8 * std::numbers::pi)) < 1e-15);
    CHECK(std::abs(c.period - std::sqrt(6.0) / 2) < 1e-14);
    CHECK(std::abs(c.period - 4 * std::numbers::pi * c.c) < 1e-15);
    CHECK_THROWS_AS(c_compatible({2, 3}, Rational(-1)), std::invalid_argument);
}
