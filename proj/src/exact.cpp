#include "cmapqk/exact.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace cmapqk {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

Rational rational_gcd(const Rational& x, const Rational& y) {
    if (sgn(x) == 0) return abs(y);
    if (sgn(y) == 0) return abs(x);
    // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
    Integer num;
    Integer a = x.get_num() * y.get_den();
    Integer b = y.get_num() * x.get_den();
    mpz_gcd(num.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Rational g(num, x.get_den() * y.get_den());
    g.canonicalize();
    return g;
}

CRational& CRational::operator*=(const CRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

CRational& CRational::operator/=(const CRational& o) {
    Rational d = o.re * o.re + o.im * o.im;
    if (sgn(d) == 0) throw std::domain_error("CRational: division by zero");
    *this *= o.conj();
    re /= d;
    im /= d;
    return *this;
}

std::string to_string(const CRational& z) {
    if (sgn(z.im) == 0) return to_string(z.re);
    if (sgn(z.re) == 0) return to_string(z.im) + "i";
    std::string s = to_string(z.re);
    s += sgn(z.im) > 0 ? "+" : "";
    return s + to_string(z.im) + "i";
}

std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t m) {
    if (m <= 0) throw std::domain_error("squarefree_split: argument must be positive");
    std::int64_t s = 1, k = 1;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int j = 0; j < e / 2; ++j) s *= p;
        if (e % 2) k *= p;
    }
    return {s, k * m};
}

bool is_squarefree(std::int64_t m) { return m > 0 && squarefree_split(m).first == 1; }

Surd Surd::sqrt(std::int64_t m) {
    if (m < 0) throw std::domain_error("Surd::sqrt: negative radicand");
    Surd r;
    if (m == 0) return r;
    auto [s, k] = squarefree_split(m);
    r.add_term(k, CRational(Rational(s)));
    return r;
}

void Surd::add_term(std::int64_t k, CRational q) {
    if (q.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, std::move(q));
        return;
    }
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
}

bool Surd::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

Surd Surd::conj() const {
    Surd r;
    for (const auto& [k, q] : terms_) r.terms_.emplace(k, q.conj());
    return r;
}

Surd Surd::real_part() const {
    Surd r;
    for (const auto& [k, q] : terms_) r.add_term(k, CRational(q.re));
    return r;
}

Surd Surd::imag_part() const {
    Surd r;
    for (const auto& [k, q] : terms_) r.add_term(k, CRational(q.im));
    return r;
}

std::complex<double> Surd::to_complex() const {
    std::complex<double> z = 0.0;
    for (const auto& [k, q] : terms_) z += q.to_complex() * std::sqrt(static_cast<double>(k));
    return z;
}

Surd& Surd::operator+=(const Surd& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, q);
    return *this;
}

Surd& Surd::operator-=(const Surd& o) {
    for (const auto& [k, q] : o.terms_) add_term(k, -q);
    return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
    Surd r;
    for (const auto& [k1, q1] : a.terms_) {
        for (const auto& [k2, q2] : b.terms_) {
            // k1, k2 squarefree: sqrt(k1 k2) = g sqrt((k1/g)(k2/g)), g = gcd
            std::int64_t g = std::gcd(k1, k2);
            r.add_term((k1 / g) * (k2 / g), q1 * q2 * CRational(Rational(g)));
        }
    }
    return r;
}

Surd& Surd::operator*=(const Surd& o) { return *this = *this * o; }

Surd& Surd::operator*=(const CRational& q) {
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= q;
    return *this;
}

Surd operator-(const Surd& a) {
    Surd r;
    for (const auto& [k, q] : a.terms_) r.terms_.emplace(k, -q);
    return r;
}

std::string to_string(const Surd& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (const auto& [k, q] : s.terms()) {
        if (!out.empty()) out += " + ";
        std::string c = to_string(q);
        if (k == 1) {
            out += c;
        } else {
            out += "(" + c + ")*sqrt(" + std::to_string(k) + ")";
        }
    }
    return out;
}

std::optional<std::vector<Rational>> solve_rational_system(std::vector<std::vector<Rational>> M,
                                                           std::vector<Rational> b) {
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(M[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(M[i][c]) == 0) continue;
            Rational f = M[i][c] / M[r][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / M[i][pivot_col[i]];
    return x;
}

std::optional<std::vector<Rational>> solve_rational_coords(const std::vector<SurdVector>& basis,
                                                           const SurdVector& target) {
    const std::size_t dim = target.size();
    for (const auto& v : basis)
        if (v.size() != dim) throw std::invalid_argument("solve_rational_coords: dimension mismatch");

    // Every (component, radicand, re/im) triple becomes one rational equation.
    std::set<std::int64_t> radicands;
    auto collect = [&](const SurdVector& v) {
        for (const auto& s : v)
            for (const auto& [k, q] : s.terms()) radicands.insert(k);
    };
    for (const auto& v : basis) collect(v);
    collect(target);

    auto coord = [](const Surd& s, std::int64_t k, bool imag) -> Rational {
        auto it = s.terms().find(k);
        if (it == s.terms().end()) return Rational(0);
        return imag ? it->second.im : it->second.re;
    };

    std::vector<std::vector<Rational>> M;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::int64_t k : radicands) {
            for (bool imag : {false, true}) {
                std::vector<Rational> row;
                row.reserve(basis.size());
                for (const auto& v : basis) row.push_back(coord(v[i], k, imag));
                M.push_back(std::move(row));
                rhs.push_back(coord(target[i], k, imag));
            }
        }
    }
    if (M.empty()) return std::vector<Rational>(basis.size(), Rational(0));
    auto x = solve_rational_system(std::move(M), std::move(rhs));
    return x;
}

}  // namespace cmapqk
