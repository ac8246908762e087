#include <doctest.h>

#include <cmath>
#include <complex>

#include "cmapqk/heis.hpp"
#include "cmapqk/sampling.hpp"
#include "support.hpp"

using namespace cmapqk;
using cd = std::complex<double>;

namespace {

Rational rnd_q(PointSampler& s) {
    Rational q(Integer(static_cast<long>(s.integer(-12, 12))), Integer(static_cast<long>(s.integer(1, 7))));
    q.canonicalize();
    return q;
}

HeisPoint rnd_point(PointSampler& s, int n) {
    HeisPoint p;
    for (int i = 0; i < n; ++i) p.v.push_back(Surd(CRational(rnd_q(s), rnd_q(s))));
    p.t = Surd(CRational(rnd_q(s)));
    return p;
}

SurdVector unit(int n, int j, const Surd& s = Surd(Rational(1))) {
    SurdVector v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(j)] = s;
    return v;
}

Eigen::VectorXcd to_c(const SurdVector& v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].to_complex();
    return out;
}

// omega written out as a real form: sum_j eps_j (x_j y'_j - y_j x'_j)
double omega_oracle(const Eigen::VectorXcd& v, const Eigen::VectorXcd& w) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
        const double e = j == 0 ? 1.0 : -1.0;
        s += e * (v(j).real() * w(j).imag() - v(j).imag() * w(j).real());
    }
    return s;
}

SurdVector scaled(const SurdVector& v, const Surd& s) {
    SurdVector out = v;
    for (auto& x : out) x = s * x;
    return out;
}

SurdVector conj(const SurdVector& v) {
    SurdVector out = v;
    for (auto& x : out) x = x.conj();
    return out;
}

const std::int64_t kDs[] = {1, 2, 5, 6};

}  // namespace

TEST_CASE("omega orientation and real-form oracle") {
    CHECK(omega(unit(2, 0), unit(2, 0, Surd::I())) == Surd(1));
    CHECK(omega(unit(2, 1), unit(2, 1, Surd::I())) == Surd(-1));
    PointSampler s(testsupport::kSeed);
    for (int i = 0; i < 30; ++i) {
        const auto a = rnd_point(s, 3), b = rnd_point(s, 3);
        CHECK(std::abs(omega(a.v, b.v).to_complex().real() - omega_oracle(to_c(a.v), to_c(b.v))) < 1e-12);
        CHECK(omega(a.v, b.v) == -omega(b.v, a.v));
        CHECK(omega(a.v, b.v) == herm(a.v, b.v).imag_part());
    }
}

TEST_CASE("Heisenberg group axioms hold exactly") {
    PointSampler s(testsupport::kSeed);
    for (int n : {1, 2, 3}) {
        const HeisPoint e = heis_identity(n);
        for (int i = 0; i < 30; ++i) {
            const auto x = rnd_point(s, n), y = rnd_point(s, n), z = rnd_point(s, n);
            CHECK(heis_mul(heis_mul(x, y), z) == heis_mul(x, heis_mul(y, z)));
            CHECK(heis_mul(x, e) == x);
            CHECK(heis_mul(e, x) == x);
            CHECK(heis_mul(x, heis_inverse(x)) == e);
            CHECK(heis_mul(heis_inverse(x), x) == e);
            // commutator is central: [x,y] = (0, omega(v, v'))
            const HeisPoint comm = heis_mul(heis_mul(x, y), heis_inverse(heis_mul(y, x)));
            CHECK(comm.t == omega(x.v, y.v));
            for (const auto& c : comm.v) CHECK(c.is_zero());
            // float product agrees with the oracle formula
            const HeisPointF xf{to_c(x.v), x.t.to_complex().real()}, yf{to_c(y.v), y.t.to_complex().real()};
            const HeisPointF pf = heis_mul(xf, yf);
            const HeisPoint p = heis_mul(x, y);
            CHECK(std::abs(pf.t - (xf.t + yf.t + 0.5 * omega_oracle(xf.v, yf.v))) < 1e-12);
            CHECK(std::abs(pf.t - p.t.to_complex().real()) < 1e-12);
        }
    }
}

TEST_CASE("L_d basis and center intersection") {
    const HeisLattice L = lattice_Ld(2, 6);
    REQUIRE(L.basis.size() == 4);
    CHECK(L.basis[0] == unit(2, 0));
    CHECK(L.basis[3] == unit(2, 1, Surd::sqrt(6) * Surd::I()));
    for (std::int64_t d : kDs) {
        for (int n : {1, 2, 3}) {
            const HeisLattice Ld = lattice_Ld(n, d);
            const Surd half = Surd(Rational(1, 2)) * Surd::sqrt(d);
            CHECK(center_generator(Ld) == half);
            CHECK(omega_generator(Ld) == Surd::sqrt(d));
            // Gamma contains (0, sqrt d / 2) and not (0, sqrt d / 4)
            CHECK(lattice_contains(Ld, HeisPoint{SurdVector(static_cast<std::size_t>(n)), half}));
            CHECK(lattice_contains(Ld, HeisPoint{SurdVector(static_cast<std::size_t>(n)), Surd(-3) * half}));
            CHECK_FALSE(lattice_contains(Ld, HeisPoint{SurdVector(static_cast<std::size_t>(n)), Surd(Rational(1, 2)) * half}));
            // oracle: every omega entry is an integer multiple of sqrt d, and sqrt d occurs
            bool hit = false;
            for (const auto& row : omega_table(Ld))
                for (const auto& x : row) {
                    const auto k = solve_rational_coords({SurdVector{Surd::sqrt(d)}}, SurdVector{x});
                    REQUIRE(k);
                    CHECK((*k)[0].get_den() == 1);
                    hit = hit || abs((*k)[0]) == 1;
                }
            CHECK(hit);
        }
    }
}

TEST_CASE("L_d membership") {
    const HeisLattice L = lattice_Ld(2, 5);
    const Surd r5i = Surd::sqrt(5) * Surd::I();
    SurdVector v = unit(2, 0);
    v[1] = r5i;  // e_1 + sqrt5 f_2
    const auto k = lattice_coords(L, v);
    REQUIRE(k);
    CHECK(*k == std::vector<Integer>{1, 0, 0, 1});
    CHECK_FALSE(lattice_coords(L, unit(2, 0, Surd::I())));
    CHECK_FALSE(lattice_coords(L, unit(2, 0, Surd(Rational(1, 2)))));
    CHECK_FALSE(lattice_coords(L, unit(2, 1, Surd::sqrt(2))));
    CHECK_FALSE(lattice_contains(L, HeisPoint{v, Surd(1)}));
    CHECK_THROWS_AS(lattice_contains(L, HeisPointF{Eigen::VectorXcd::Zero(2), 0.0}), std::invalid_argument);
}

TEST_CASE("L_d rejects unsupported d") {
    CHECK_THROWS_AS(lattice_Ld(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(lattice_Ld(2, 7), std::invalid_argument);
    CHECK_THROWS_AS(lattice_Ld(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(lattice_Ld(2, 12), std::invalid_argument);
    CHECK_THROWS_AS(lattice_Ld(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(lattice_Ld(0, 1), std::invalid_argument);
}

TEST_CASE("L_d is stable under O_F and conjugation") {
    for (std::int64_t d : kDs) {
        const HeisLattice L = lattice_Ld(3, d);
        const Surd mult = Surd::sqrt(d) * Surd::I();
        for (const auto& b : L.basis) {
            CHECK(lattice_coords(L, scaled(b, mult)));
            CHECK(lattice_coords(L, conj(b)));
        }
    }
}

TEST_CASE("su_action") {
    const HeisPoint p{SurdVector{Surd(1), Surd::I()}, Surd(Rational(1, 3))};
    CHECK(su_action(surd_identity(2), p) == p);
    SurdMatrix bad = surd_identity(2);
    bad[0][0] = Surd(2);
    CHECK_THROWS_AS(su_action(bad, p), std::invalid_argument);

    // float SU(1,2): hyperbolic boost in (e1, e2) followed by a phase in e3
    const double s = 0.7;
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(3, 3);
    g(0, 0) = g(1, 1) = std::cosh(s);
    g(0, 1) = g(1, 0) = std::sinh(s);
    const cd ph = std::polar(1.0, 0.4);
    g.row(0) *= ph;
    g.row(1) *= ph;
    g(2, 2) = 1.0 / (ph * ph);
    CHECK(std::abs(g.determinant() - 1.0) < 1e-12);
    PointSampler smp(testsupport::kSeed);
    for (int i = 0; i < 20; ++i) {
        Eigen::VectorXcd v(3), w(3);
        for (int j = 0; j < 3; ++j) {
            v(j) = {smp.uniform(-2, 2), smp.uniform(-2, 2)};
            w(j) = {smp.uniform(-2, 2), smp.uniform(-2, 2)};
        }
        const HeisPointF a = su_action(g, HeisPointF{v, 0.5});
        const HeisPointF b = su_action(g, HeisPointF{w, -1.0});
        CHECK(std::abs(omega(a.v, b.v) - omega_oracle(v, w)) <= 1e-12 * (1 + std::abs(omega_oracle(v, w))));
        CHECK(a.t == 0.5);
    }
    Eigen::MatrixXcd gb = g;
    gb(2, 2) *= 1.001;
    CHECK_THROWS_AS(su_action(gb, HeisPointF{Eigen::VectorXcd::Zero(3), 0.0}), std::invalid_argument);
}

TEST_CASE("unipotent witness") {
    for (int n : {2, 3}) {
        for (std::int64_t d : kDs) {
            CAPTURE(n);
            CAPTURE(d);
            const auto W = unipotent_witness(n, d);
            const HeisLattice L = lattice_Ld(n, d);
            SurdVector v = unit(n, 0), w = unit(n, 0, Surd::sqrt(d) * Surd::I());
            v[1] = Surd(1);
            w[1] = Surd::sqrt(d) * Surd::I();
            CHECK_FALSE(surd_is_zero(W.A));
            for (const auto& x : surd_apply(W.A, v)) CHECK(x.is_zero());
            for (const auto& x : surd_apply(W.A, w)) CHECK(x.is_zero());
            CHECK(surd_is_zero(surd_mul(W.A, W.A)));
            // skew-Hermitian for h: A^dagger eta + eta A = 0
            const SurdMatrix E = eta(n);
            CHECK(surd_is_zero(surd_add(surd_mul(surd_adjoint(W.A), E), surd_mul(E, W.A))));
            CHECK(surd_mul(W.g, W.g_inv) == surd_identity(n));
            CHECK(preserves_h(W.g));
            CHECK(preserves_h(W.g_inv));
            CHECK(maps_lattice_into(W.g, L));
            CHECK(maps_lattice_into(W.g_inv, L));
            // independent float check of g^dagger eta g = eta
            CHECK(preserves_h(surd_to_complex(W.g), 1e-12));
            // the Heisenberg lattice is carried into itself, including the center
            PointSampler s(testsupport::kSeed + static_cast<std::uint64_t>(d));
            for (int i = 0; i < 10; ++i) {
                SurdVector x(static_cast<std::size_t>(n));
                for (const auto& b : L.basis) {
                    const Surd k(Rational(s.integer(-4, 4)));
                    for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] += k * b[static_cast<std::size_t>(j)];
                }
                const HeisPoint p{x, center_generator(L) * Surd(Rational(s.integer(-3, 3)))};
                REQUIRE(lattice_contains(L, p));
                CHECK(lattice_contains(L, su_action(W.g, p)));
                CHECK(lattice_contains(L, su_action(W.g_inv, p)));
            }
        }
    }
    CHECK_THROWS_AS(unipotent_witness(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(unipotent_witness(2, 3), std::invalid_argument);
}
