#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qreduce/cartan_rat.hpp"
#include "qreduce/qrat.hpp"

using namespace qreduce;

TEST_CASE("qbracket closed values") {
    CHECK(qbracket(0).is_zero());
    // [2] = q + q^{-1}
    CHECK(qbracket(2) == QRat(LaurentPoly::q_power(1) + LaurentPoly::q_power(-1)));
    // [-3] = -(q^2 + 1 + q^{-2})
    QRat b3 = QRat(LaurentPoly::q_power(2) + LaurentPoly::q_power(0) +
                   LaurentPoly::q_power(-2));
    CHECK(qbracket(-3) == -b3);
    CHECK(qbracket(1) == QRat(1));
}

TEST_CASE("qbracket addition law and antisymmetry") {
    for (long long x = -6; x <= 6; ++x) {
        CHECK(qbracket(-x) == -qbracket(x));
        for (long long y = -6; y <= 6; ++y) {
            // [x+y] = [x] q^y + q^{-x} [y]
            QRat lhs = qbracket(x + y);
            QRat rhs = qbracket(x) * QRat::q_power(y) + QRat::q_power(-x) * qbracket(y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("canonical form: a - a and (a/b)(b/a)") {
    QRat a = qbracket(5) * qbracket(3) - QRat(7) * QRat::q_power(-4);
    QRat b = qbracket(2) + QRat(1);
    CHECK((a - a).is_zero());
    CHECK((a - a) == QRat(0));
    QRat r = (a / b) * (b / a);
    CHECK(r == QRat(1));
    CHECK(r.is_one());
}

TEST_CASE("eval_at exact rational values") {
    CHECK(eval_at(qbracket(2), BigRat(2)) == BigRat(5, 2));
    CHECK(eval_at(QRat(0), BigRat(1, 2)) == BigRat(0));
    CHECK(eval_at(QRat(1) / qbracket(1), BigRat(7, 3)) == BigRat(1));
    CHECK_THROWS_AS((void)eval_at(qbracket(2), BigRat(1)), ForbiddenPoint);
    CHECK_THROWS_AS((void)eval_at(qbracket(2), BigRat(0)), ForbiddenPoint);
    // pole: 1/(q - 2) at q = 2
    QRat pole = QRat(1) / QRat(LaurentPoly::q_power(1) - LaurentPoly::constant(2));
    CHECK_THROWS_AS((void)eval_at(pole, BigRat(2)), PoleAtPoint);
}

TEST_CASE("classical limit") {
    CHECK(classical_limit(qbracket(5)) == BigRat(5));
    CHECK(classical_limit(qbracket(3) / qbracket(6)) == BigRat(1, 2));
    CHECK(classical_limit(qbracket(2) * qbracket(2)) == BigRat(4));
    // pole at q = 1: 1/(q - 1)
    QRat pole = QRat(1) / QRat(LaurentPoly::q_power(1) - LaurentPoly::constant(1));
    CHECK_THROWS_AS((void)classical_limit(pole), PoleAtOne);
}

TEST_CASE("classical limit and eval commute with ring ops") {
    std::mt19937_64 rng(11);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<long long>(rng() % (hi - lo + 1));
    };
    for (int t = 0; t < 30; ++t) {
        QRat a = qbracket(rnd(1, 9)) + QRat::q_power(rnd(-3, 3));
        QRat b = qbracket(rnd(1, 9)) * QRat(rnd(1, 4));
        CHECK(classical_limit(a * b) == classical_limit(a) * classical_limit(b));
        CHECK(classical_limit(a + b) == classical_limit(a) + classical_limit(b));
        BigRat q0(3, 2);
        CHECK(eval_at(a * b, q0) == eval_at(a, q0) * eval_at(b, q0));
        CHECK(eval_at(a - b, q0) == eval_at(a, q0) - eval_at(b, q0));
    }
}

TEST_CASE("qbracket_sym evaluates like qbracket") {
    const int N = 3;
    AffineExpr zero = AffineExpr::constant_expr(N, 0);
    CHECK(qbracket_sym(zero).is_zero());

    // phi_12 at weight (2,0,*) evaluates to [3]
    AffineExpr phi12 = AffineExpr::phi(1, 2, N);
    CHECK(qbracket_sym(phi12).eval({2, 0, 0}) == qbracket(3));

    // [phi_12] * [-phi_12] = -[phi_12]^2
    CartanRat b = qbracket_sym(phi12);
    CartanRat nb = qbracket_sym(-phi12);
    CHECK((b * nb).equals(-(b * b)));

    std::mt19937_64 rng(23);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<long long>(rng() % (hi - lo + 1));
    };
    for (int t = 0; t < 100; ++t) {
        std::vector<int> coef(N);
        for (int k = 0; k < N; ++k) coef[k] = static_cast<int>(rnd(-3, 3));
        AffineExpr e(coef, rnd(-5, 5));
        std::vector<long long> w(N);
        for (int k = 0; k < N; ++k) w[k] = rnd(-10, 10);
        CHECK(qbracket_sym(e).eval(w) == qbracket(e.eval(w)));
    }
}

TEST_CASE("qfact_ratio basics and cocycle") {
    const int N = 2;
    AffineExpr phi = AffineExpr::phi(1, 2, N);
    CHECK(qfact_ratio(phi, 3, 3).equals(CartanRat::constant(N, 1)));
    // (phi, 2, 0) = [phi+1][phi+2]
    CHECK(qfact_ratio(phi, 2, 0)
              .equals(qbracket_sym(phi + 1) * qbracket_sym(phi + 2)));
    // integer expr 1: [1+2][1+3] = [3][4]
    AffineExpr one = AffineExpr::constant_expr(N, 1);
    CHECK(qfact_ratio(one, 3, 1).eval({0, 0}) == qbracket(3) * qbracket(4));
    // cocycle for a >= b >= c
    for (long long a = -2; a <= 4; ++a)
        for (long long b = -2; b <= a; ++b)
            for (long long c = -2; c <= b; ++c) {
                CartanRat lhs = qfact_ratio(phi, a, c);
                CartanRat rhs = qfact_ratio(phi, a, b) * qfact_ratio(phi, b, c);
                CHECK(lhs.equals(rhs));
            }
}

TEST_CASE("QRat string serialization") {
    CHECK(QRat(0).to_string() == "0");
    CHECK(qbracket(2).to_string() == "q^-1 + q");
    CHECK(qbracket(-3).to_string() == "-q^-2 - 1 - q^2");
    CHECK((QRat(3) * QRat::q_power(2)).to_string() == "3*q^2");
    QRat frac = QRat(1) / qbracket(2);
    CHECK(frac.to_string() == "(q)/(1 + q^2)");
}

TEST_CASE("CartanRat shift matches weight translation") {
    const int N = 3;
    std::mt19937_64 rng(5);
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<long long>(rng() % (hi - lo + 1));
    };
    for (int t = 0; t < 40; ++t) {
        std::vector<int> coef(N);
        for (int k = 0; k < N; ++k) coef[k] = static_cast<int>(rnd(-2, 2));
        AffineExpr e(coef, rnd(-4, 4));
        CartanRat f = qbracket_sym(e) + CartanRat::constant(N, rnd(-3, 3));
        std::vector<long long> w(N), d(N), wd(N);
        for (int k = 0; k < N; ++k) {
            w[k] = rnd(-8, 8);
            d[k] = rnd(-3, 3);
            wd[k] = w[k] + d[k];
        }
        CHECK(f.shifted(d).eval(w) == f.eval(wd));
    }
}
