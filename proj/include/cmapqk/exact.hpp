#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmapqk {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);  // "p/q", or "p" when q = 1
Rational rational_gcd(const Rational& x, const Rational& y);  // non-negative generator of xZ + yZ

// a + b i with a, b rational
struct CRational {
    Rational re{0};
    Rational im{0};

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRational(long r) : re(r) {}
    CRational(int r) : re(r) {}

    static CRational I() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    CRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    CRational& operator+=(const CRational& o) { re += o.re; im += o.im; return *this; }
    CRational& operator-=(const CRational& o) { re -= o.re; im -= o.im; return *this; }
    CRational& operator*=(const CRational& o);
    CRational& operator/=(const CRational& o);

    friend CRational operator+(CRational a, const CRational& b) { return a += b; }
    friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
    friend CRational operator*(CRational a, const CRational& b) { return a *= b; }
    friend CRational operator/(CRational a, const CRational& b) { return a /= b; }
    friend CRational operator-(const CRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const CRational& a, const CRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }
};

std::string to_string(const CRational& z);

// Squarefree part: m = s^2 * k with k squarefree. Returns (s, k). m must be positive.
std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t m);
bool is_squarefree(std::int64_t m);

// Exact element of Q(i)[sqrt k : k squarefree], stored as sum_k coeff_k * sqrt(k).
// Radicals are normalized, so sqrt(2)*sqrt(6) = 2*sqrt(3) and sqrt(4) = 2.
class Surd {
public:
    Surd() = default;
    Surd(CRational q) { add_term(1, std::move(q)); }
    Surd(Rational q) : Surd(CRational(std::move(q))) {}
    Surd(long q) : Surd(CRational(q)) {}
    Surd(int q) : Surd(CRational(q)) {}

    static Surd sqrt(std::int64_t m);           // m >= 0
    static Surd I() { return Surd(CRational::I()); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;                   // in Q(i)
    Surd conj() const;
    Surd real_part() const;
    Surd imag_part() const;
    std::complex<double> to_complex() const;
    const std::map<std::int64_t, CRational>& terms() const { return terms_; }

    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator*=(const CRational& q);

    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a);
    friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

private:
    void add_term(std::int64_t k, CRational q);
    std::map<std::int64_t, CRational> terms_;
};

std::string to_string(const Surd& s);

using SurdVector = std::vector<Surd>;

// Solves sum_j x_j * basis[j] = target over Q, where vectors have Surd entries.
// Since the sqrt(k) are Q-linearly independent this is an exact rational system.
// Returns nullopt when the target is not in the Q-span.
std::optional<std::vector<Rational>> solve_rational_coords(const std::vector<SurdVector>& basis,
                                                           const SurdVector& target);

// Gaussian elimination over Q. Returns one solution of M x = b or nullopt.
std::optional<std::vector<Rational>> solve_rational_system(std::vector<std::vector<Rational>> M,
                                                           std::vector<Rational> b);

}  // namespace cmapqk
