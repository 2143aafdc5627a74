#pragma once

#include <string>
#include <utility>

#include "qreduce/laurent.hpp"

namespace qreduce {

/// Rational function in q, kept in a unique canonical form: numerator and
/// denominator coprime over Z[q], denominator a plain polynomial with nonzero
/// positive constant term, contents coprime. Structural equality is semantic
/// equality.
class QRat {
public:
    QRat() : num_(LaurentPoly::zero()), den_(LaurentPoly::constant(1)) {}

    QRat(long long v) : num_(LaurentPoly::constant(v)), den_(LaurentPoly::constant(1)) {}

    QRat(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    explicit QRat(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}

    static QRat from_int(const BigInt& v) { return QRat(LaurentPoly::constant(v)); }

    static QRat q_power(long long e) { return QRat(LaurentPoly::q_power(e)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw DivisionByZero("QRat division by zero");
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRat operator-() const {
        QRat r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    QRat& operator/=(const QRat& o) { return *this = *this / o; }

    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }
    bool operator<(const QRat& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    /// Substitution q -> q^{-1}.
    QRat bar() const { return QRat(num_.bar(), den_.bar()); }

    /// Exact value at a rational point q0 outside {0, 1, -1}.
    BigRat eval_at(const BigRat& q0) const {
        if (q0 == 0 || q0 == 1 || q0 == -1)
            throw ForbiddenPoint("eval_at: q0 must avoid {0, 1, -1}");
        BigRat d = den_.eval(q0);
        if (d == 0) throw PoleAtPoint("eval_at: denominator vanishes at q0");
        return num_.eval(q0) / d;
    }

    /// Exact limit q -> 1; the canonical form already cancelled common factors.
    BigRat classical_limit() const {
        BigInt d = den_.eval_at_one();
        if (d == 0) throw PoleAtOne("classical_limit: pole at q = 1");
        return BigRat(num_.eval_at_one()) / BigRat(d);
    }

    /// "(num)/(den)" with terms in ascending q-power; bare numerator when den = 1.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw DivisionByZero("QRat with zero denominator");
        if (num_.is_zero()) {
            den_ = LaurentPoly::constant(1);
            return;
        }
        long long s = den_.low_exp();
        den_ = den_.shifted(-s);
        num_ = num_.shifted(-s);
        if (!den_.is_monomial() && !num_.is_monomial()) {
            LaurentPoly g = LaurentPoly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = num_.divided_exact(g);
                den_ = den_.divided_exact(g);
                s = den_.low_exp();
                den_ = den_.shifted(-s);
                num_ = num_.shifted(-s);
            }
        }
        BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
        if (den_.terms().begin()->second < 0) c = -c;
        if (c != 1) {
            num_ = num_.divided_by_int(c);
            den_ = den_.divided_by_int(c);
        }
    }

    LaurentPoly num_;
    LaurentPoly den_;
};

/// q-number [x] = (q^x - q^{-x})/(q - q^{-1}), as a Laurent polynomial.
inline QRat qbracket(long long x) {
    if (x == 0) return QRat(0);
    long long sign = x > 0 ? 1 : -1;
    long long n = x > 0 ? x : -x;
    LaurentPoly p;
    for (long long k = 0; k < n; ++k) p = p + LaurentPoly::q_power(n - 1 - 2 * k);
    QRat r{p};
    return sign > 0 ? r : -r;
}

/// [r]! as a Laurent polynomial; r >= 0.
inline QRat qfactorial(long long r) {
    QRat f(1);
    for (long long s = 2; s <= r; ++s) f *= qbracket(s);
    return f;
}

inline BigRat eval_at(const QRat& v, const BigRat& q0) { return v.eval_at(q0); }
inline BigRat classical_limit(const QRat& v) { return v.classical_limit(); }

} // namespace qreduce
