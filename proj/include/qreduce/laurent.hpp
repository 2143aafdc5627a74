#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qreduce/errors.hpp"

namespace qreduce {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Sparse Laurent polynomial in q with arbitrary-precision integer coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }

    static LaurentPoly constant(BigInt c) {
        LaurentPoly p;
        if (c != 0) p.terms_[0] = std::move(c);
        return p;
    }

    static LaurentPoly monomial(long long exp, BigInt c) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = std::move(c);
        return p;
    }

    static LaurentPoly q_power(long long exp) { return monomial(exp, 1); }

    bool is_zero() const { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    const std::map<long long, BigInt>& terms() const { return terms_; }

    long long low_exp() const { return terms_.begin()->first; }
    long long high_exp() const { return terms_.rbegin()->first; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// Multiply by q^shift.
    LaurentPoly shifted(long long shift) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + shift] = c;
        return r;
    }

    /// Substitution q -> q^{-1}.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : terms_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    LaurentPoly divided_by_int(const BigInt& d) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c / d;
        return r;
    }

    /// Value at q = q0 (exact rational).
    BigRat eval(const BigRat& q0) const {
        BigRat acc = 0;
        for (const auto& [e, c] : terms_) {
            BigRat p = 1;
            long long n = e >= 0 ? e : -e;
            BigRat base = e >= 0 ? q0 : BigRat(1) / q0;
            for (long long k = 0; k < n; ++k) p *= base;
            acc += BigRat(c) * p;
        }
        return acc;
    }

    /// Value at q = 1 (sum of coefficients).
    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Exact polynomial division; both operands shifted so this stays Laurent.
    /// Caller guarantees divisibility (used for gcd reduction).
    LaurentPoly divided_exact(const LaurentPoly& d) const {
        if (d.is_zero()) throw DivisionByZero("laurent division by zero");
        if (is_zero()) return LaurentPoly();
        LaurentPoly num = shifted(-low_exp());
        LaurentPoly den = d.shifted(-d.low_exp());
        LaurentPoly quot;
        while (!num.is_zero()) {
            long long e = num.high_exp() - den.high_exp();
            BigInt c = num.terms_.rbegin()->second / den.terms_.rbegin()->second;
            LaurentPoly t = monomial(e, c);
            quot = quot + t;
            num = num - den * t;
        }
        return quot.shifted(low_exp() - d.low_exp());
    }

    bool is_monomial() const { return terms_.size() == 1; }

    /// Primitive gcd over Z[q], up to sign and q-power units. Result has
    /// lowest exponent 0, content 1 and positive leading coefficient.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b.is_zero() ? LaurentPoly() : b.primitive_part();
        if (b.is_zero()) return a.primitive_part();
        if (a.is_monomial() || b.is_monomial()) return constant(1);
        LaurentPoly x = a.primitive_part();
        LaurentPoly y = b.primitive_part();
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            if (y.is_one()) return y;
            LaurentPoly r = pseudo_rem(x, y);
            x = y;
            y = r.is_zero() ? r : r.primitive_part();
        }
        return x;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (e == 0) {
                os << mag.str();
            } else {
                if (mag != 1) os << mag.str() << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void add_term(long long e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long degree() const { return high_exp() - low_exp(); }

    /// Shift to lowest exponent 0, divide content, make leading coefficient positive.
    LaurentPoly primitive_part() const {
        LaurentPoly p = shifted(-low_exp());
        BigInt c = p.content();
        if (p.terms_.rbegin()->second < 0) c = -c;
        return p.divided_by_int(c);
    }

    static LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
        const BigInt lead_b = b.terms_.rbegin()->second;
        long long deg_b = b.degree();
        LaurentPoly bn = b.shifted(-b.low_exp());
        a = a.shifted(-a.low_exp());
        while (!a.is_zero() && a.degree() >= deg_b) {
            BigInt lead_a = a.terms_.rbegin()->second;
            long long sh = a.degree() - deg_b;
            a = a * constant(lead_b) - bn.shifted(sh) * constant(lead_a);
            if (!a.is_zero()) a = a.shifted(-a.low_exp());
        }
        return a;
    }

    std::map<long long, BigInt> terms_;
};

} // namespace qreduce
