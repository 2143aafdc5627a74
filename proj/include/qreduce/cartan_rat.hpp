#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qreduce/affine.hpp"
#include "qreduce/qrat.hpp"

namespace qreduce {

/// Monomial key of a sparse Laurent polynomial in q and t_1..t_N (t_i = q^{e_ii}).
struct CartanMonomial {
    long long q_exp = 0;
    std::vector<int> t_exp;

    bool operator<(const CartanMonomial& o) const {
        if (t_exp != o.t_exp) return t_exp < o.t_exp;
        return q_exp < o.q_exp;
    }
    bool operator==(const CartanMonomial& o) const {
        return q_exp == o.q_exp && t_exp == o.t_exp;
    }
};

/// Sparse Laurent polynomial in q, t_1..t_N over Z.
class CartanPoly {
public:
    CartanPoly() = default;
    explicit CartanPoly(int nvars) : nvars_(nvars) {}

    static CartanPoly constant(int nvars, BigInt c) {
        CartanPoly p(nvars);
        if (c != 0) p.terms_[CartanMonomial{0, std::vector<int>(nvars, 0)}] = std::move(c);
        return p;
    }

    static CartanPoly monomial(int nvars, long long qe, std::vector<int> te, BigInt c) {
        CartanPoly p(nvars);
        if (c != 0) p.terms_[CartanMonomial{qe, std::move(te)}] = std::move(c);
        return p;
    }

    static CartanPoly from_laurent(int nvars, const LaurentPoly& lp) {
        CartanPoly p(nvars);
        for (const auto& [e, c] : lp.terms())
            p.terms_[CartanMonomial{e, std::vector<int>(nvars, 0)}] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<CartanMonomial, BigInt>& terms() const { return terms_; }

    friend CartanPoly operator+(const CartanPoly& a, const CartanPoly& b) {
        CartanPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend CartanPoly operator-(const CartanPoly& a, const CartanPoly& b) {
        CartanPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    CartanPoly operator-() const {
        CartanPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    friend CartanPoly operator*(const CartanPoly& a, const CartanPoly& b) {
        CartanPoly r(a.nvars_ ? a.nvars_ : b.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                CartanMonomial m;
                m.q_exp = ma.q_exp + mb.q_exp;
                m.t_exp.resize(ma.t_exp.size());
                for (size_t k = 0; k < m.t_exp.size(); ++k)
                    m.t_exp[k] = ma.t_exp[k] + mb.t_exp[k];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    bool operator==(const CartanPoly& o) const { return terms_ == o.terms_; }

    /// t_i -> q^{delta_i} t_i for an integer shift vector; the weight-shift action.
    CartanPoly shifted(const std::vector<long long>& delta) const {
        CartanPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            CartanMonomial nm = m;
            for (size_t k = 0; k < m.t_exp.size(); ++k)
                nm.q_exp += delta[k] * m.t_exp[k];
            r.terms_[nm] = c;
        }
        return r;
    }

    /// q -> q^{-1}, t_i -> t_i^{-1}.
    CartanPoly bar() const {
        CartanPoly r(nvars_);
        for (const auto& [m, c] : terms_) {
            CartanMonomial nm;
            nm.q_exp = -m.q_exp;
            nm.t_exp.resize(m.t_exp.size());
            for (size_t k = 0; k < m.t_exp.size(); ++k) nm.t_exp[k] = -m.t_exp[k];
            r.terms_[nm] = c;
        }
        return r;
    }

    /// Specialize t_i -> q^{lambda_i}.
    LaurentPoly eval(const std::vector<long long>& weight) const {
        LaurentPoly r;
        for (const auto& [m, c] : terms_) {
            long long e = m.q_exp;
            for (size_t k = 0; k < m.t_exp.size(); ++k) e += weight[k] * m.t_exp[k];
            r = r + LaurentPoly::monomial(e, c);
        }
        return r;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& [m, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    CartanPoly divided_by_int(const BigInt& d) const {
        CartanPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_[m] = c / d;
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::ostringstream mono;
            bool anyvar = false;
            if (m.q_exp != 0) {
                mono << "q";
                if (m.q_exp != 1) mono << "^" << m.q_exp;
                anyvar = true;
            }
            for (size_t k = 0; k < m.t_exp.size(); ++k) {
                if (m.t_exp[k] == 0) continue;
                if (anyvar) mono << "*";
                mono << "t" << (k + 1);
                if (m.t_exp[k] != 1) mono << "^" << m.t_exp[k];
                anyvar = true;
            }
            if (!anyvar) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << mono.str();
            }
        }
        return os.str();
    }

private:
    void add_term(const CartanMonomial& m, const BigInt& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars_ = 0;
    std::map<CartanMonomial, BigInt> terms_;
};

/// Rational function in q and t_1..t_N. Fractions are kept lightly normalized
/// (contents and common monomial units removed); equality goes through
/// cross-multiplication, and zero-ness through the numerator.
class CartanRat {
public:
    CartanRat() = default;

    explicit CartanRat(int nvars)
        : num_(CartanPoly::constant(nvars, 0)), den_(CartanPoly::constant(nvars, 1)) {}

    CartanRat(CartanPoly num, CartanPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("CartanRat with zero denominator");
        normalize_light();
    }

    static CartanRat constant(int nvars, long long c) {
        return CartanRat(CartanPoly::constant(nvars, c), CartanPoly::constant(nvars, 1));
    }

    static CartanRat from_qrat(int nvars, const QRat& v) {
        return CartanRat(CartanPoly::from_laurent(nvars, v.num()),
                         CartanPoly::from_laurent(nvars, v.den()));
    }

    /// Monomial q^{qe} * prod t_i^{te_i}.
    static CartanRat q_monomial(int nvars, long long qe, std::vector<int> te) {
        return CartanRat(CartanPoly::monomial(nvars, qe, std::move(te), 1),
                         CartanPoly::constant(nvars, 1));
    }

    const CartanPoly& num() const { return num_; }
    const CartanPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    bool is_zero() const { return num_.is_zero(); }

    friend CartanRat operator+(const CartanRat& a, const CartanRat& b) {
        return CartanRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CartanRat operator-(const CartanRat& a, const CartanRat& b) {
        return CartanRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CartanRat operator*(const CartanRat& a, const CartanRat& b) {
        return CartanRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend CartanRat operator/(const CartanRat& a, const CartanRat& b) {
        if (b.is_zero()) throw DivisionByZero("CartanRat division by zero");
        return CartanRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    CartanRat operator-() const { return CartanRat(-num_, den_); }
    CartanRat& operator+=(const CartanRat& o) { return *this = *this + o; }
    CartanRat& operator-=(const CartanRat& o) { return *this = *this - o; }
    CartanRat& operator*=(const CartanRat& o) { return *this = *this * o; }
    CartanRat& operator/=(const CartanRat& o) { return *this = *this / o; }

    CartanRat inverse() const {
        if (is_zero()) throw DivisionByZero("CartanRat inverse of zero");
        return CartanRat(den_, num_);
    }

    /// Semantic equality via cross-multiplication.
    bool equals(const CartanRat& o) const { return (num_ * o.den_) == (o.num_ * den_); }

    /// Weight-shift h_i -> h_i + delta_i (i.e. t_i -> q^{delta_i} t_i).
    CartanRat shifted(const std::vector<long long>& delta) const {
        return CartanRat(num_.shifted(delta), den_.shifted(delta));
    }

    /// Circular-q conjugation: q -> q^{-1}, t_i -> t_i^{-1}.
    CartanRat bar() const { return CartanRat(num_.bar(), den_.bar()); }

    /// Specialize at an integer weight; throws VanishingDenominator on poles.
    QRat eval(const std::vector<long long>& weight) const {
        LaurentPoly d = den_.eval(weight);
        if (d.is_zero())
            throw VanishingDenominator("CartanRat: denominator vanishes at weight");
        return QRat(num_.eval(weight), d);
    }

    std::string to_string() const {
        std::string n = num_.to_string();
        if (den_ == CartanPoly::constant(num_.nvars(), 1)) return n;
        return "(" + n + ")/(" + den_.to_string() + ")";
    }

private:
    void normalize_light() {
        if (num_.is_zero()) {
            den_ = CartanPoly::constant(den_.nvars(), 1);
            return;
        }
        // shared integer content
        BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
        // sign: first denominator coefficient positive
        if (den_.terms().begin()->second < 0) c = -c;
        if (c != 1) {
            num_ = num_.divided_by_int(c);
            den_ = den_.divided_by_int(c);
        }
        // common monomial unit: shift so the denominator's minimal exponents are 0
        const int nv = den_.nvars();
        long long minq = 0;
        std::vector<int> mint(nv, 0);
        bool first = true;
        for (const auto& [m, coef] : den_.terms()) {
            if (first) {
                minq = m.q_exp;
                mint = m.t_exp;
                first = false;
            } else {
                minq = std::min(minq, m.q_exp);
                for (int k = 0; k < nv; ++k) mint[k] = std::min(mint[k], m.t_exp[k]);
            }
        }
        bool need = minq != 0;
        for (int k = 0; k < nv && !need; ++k) need = mint[k] != 0;
        if (need) {
            std::vector<int> neg(nv);
            for (int k = 0; k < nv; ++k) neg[k] = -mint[k];
            CartanPoly unit = CartanPoly::monomial(nv, -minq, neg, 1);
            num_ = num_ * unit;
            den_ = den_ * unit;
        }
    }

    CartanPoly num_;
    CartanPoly den_;
};

/// Symbolic q-bracket [expr] = (q^{c} T - q^{-c} T^{-1})/(q - q^{-1}) with
/// T = prod t_i^{a_i} for expr = sum a_i e_ii + c.
inline CartanRat qbracket_sym(const AffineExpr& expr) {
    const int nv = expr.nvars();
    std::vector<int> neg(expr.coeffs().size());
    for (size_t k = 0; k < neg.size(); ++k) neg[k] = -expr.coeffs()[k];
    CartanPoly num = CartanPoly::monomial(nv, expr.constant(), expr.coeffs(), 1) -
                     CartanPoly::monomial(nv, -expr.constant(), neg, 1);
    CartanPoly den = CartanPoly::monomial(nv, 1, std::vector<int>(nv, 0), 1) -
                     CartanPoly::monomial(nv, -1, std::vector<int>(nv, 0), 1);
    return CartanRat(std::move(num), std::move(den));
}

/// [expr+a]!/[expr+b]! as a finite product of brackets: prod_{s=b+1}^{a} [expr+s],
/// or the reciprocal when a < b.
inline CartanRat qfact_ratio(const AffineExpr& expr, long long a, long long b) {
    if (a < b) return qfact_ratio(expr, b, a).inverse();
    CartanRat r = CartanRat::constant(expr.nvars(), 1);
    for (long long s = b + 1; s <= a; ++s) r *= qbracket_sym(expr + s);
    return r;
}

} // namespace qreduce
