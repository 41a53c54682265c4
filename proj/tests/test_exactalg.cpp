#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macd/exactalg.hpp"
#include "macd/xpoly.hpp"

#include <random>

using namespace macd;

namespace {

// Deterministic generator of modest random field elements for property
// checks: products/sums of the parameter monomials and small integers.
struct Gen {
    std::mt19937 rng{20240817};

    int small() { return static_cast<int>(rng() % 7) - 3; }

    ParamPoly poly() {
        ParamPoly p;
        const int nterms = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < nterms; ++i) {
            Mono3 m{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                    static_cast<int>(rng() % 2)};
            int c = small();
            if (c == 0) c = 1;
            p.add_term(m, BigRat(c));
        }
        if (p.is_zero()) p = ParamPoly::one();
        return p;
    }

    FieldElem elem() {
        ParamPoly d = poly();
        while (d.is_zero()) d = poly();
        return FieldElem(poly(), d);
    }

    FieldElem nonzero_elem() {
        FieldElem e = elem();
        while (e.is_zero()) e = elem();
        return e;
    }
};

}  // namespace

TEST_CASE("rational arithmetic basics") {
    const FieldElem half(BigRat(1, 2));
    CHECK(half + half == FieldElem::one());

    const FieldElem one_minus_t = FieldElem::one() - FieldElem::t();
    CHECK(one_minus_t / one_minus_t == FieldElem::one());

    // q/(1-q) + 1 = 1/(1-q)
    const FieldElem q = FieldElem::q();
    const FieldElem lhs = q / (FieldElem::one() - q) + FieldElem::one();
    const FieldElem rhs = FieldElem::one() / (FieldElem::one() - q);
    CHECK(lhs == rhs);
}

TEST_CASE("division by zero is a distinct error") {
    CHECK_THROWS_AS(FieldElem::one() / FieldElem::zero(), DivisionByZero);
    CHECK_THROWS_AS(FieldElem::zero().inverse(), DivisionByZero);
}

TEST_CASE("canonical form is unique") {
    Gen gen;
    for (int iter = 0; iter < 200; ++iter) {
        const FieldElem u = gen.elem();
        const FieldElem v = gen.nonzero_elem();
        // same value assembled two different ways
        const FieldElem w1 = (u * v) / v;
        const FieldElem w2 = u + (v - v);
        CHECK(w1.num() == w2.num());
        CHECK(w1.den() == w2.den());
        // denominator sign convention
        if (!w1.is_zero()) CHECK(w1.den().leading_term().second > 0);
    }
}

TEST_CASE("field axioms on random triples") {
    Gen gen;
    for (int iter = 0; iter < 120; ++iter) {
        const FieldElem x = gen.elem();
        const FieldElem y = gen.elem();
        const FieldElem z = gen.elem();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("parameter inversion is an involutive automorphism") {
    Gen gen;
    for (int iter = 0; iter < 60; ++iter) {
        const FieldElem x = gen.elem();
        const FieldElem y = gen.elem();
        CHECK(x.inverted_params().inverted_params() == x);
        CHECK((x * y).inverted_params() == x.inverted_params() * y.inverted_params());
        CHECK((x + y).inverted_params() == x.inverted_params() + y.inverted_params());
    }
    CHECK(FieldElem::q().inverted_params() == FieldElem::q().inverse());
}

TEST_CASE("pochhammer") {
    const FieldElem y = FieldElem::t() * FieldElem::a();
    CHECK(pochhammer(y, 0, PochBase::q) == FieldElem::one());
    CHECK(pochhammer(y, 1, PochBase::q) == FieldElem::one() - y);
    const FieldElem expect2 =
        (FieldElem::one() - y) * (FieldElem::one() - FieldElem::q() * y);
    CHECK(pochhammer(y, 2, PochBase::q) == expect2);
    const FieldElem expect2inv =
        (FieldElem::one() - y) * (FieldElem::one() - FieldElem::q().inverse() * y);
    CHECK(pochhammer(y, 2, PochBase::q_inverse) == expect2inv);
}

TEST_CASE("polynomial gcd reduction") {
    // (1-t^2)/(1-t) must reduce to 1+t
    const ParamPoly one = ParamPoly::one();
    const ParamPoly tt = ParamPoly::monomial(BigRat(1), Mono3{0, 2, 0});
    const ParamPoly t1 = ParamPoly::monomial(BigRat(1), Mono3{0, 1, 0});
    const FieldElem r(one - tt, one - t1);
    CHECK(r.den().is_one());
    CHECK(r == FieldElem::one() + FieldElem::t());

    // gcd((1-q*t)*(1-t), (1-q*t)*(1+t)) contains exactly 1-q*t
    const ParamPoly qt = ParamPoly::monomial(BigRat(1), Mono3{1, 1, 0});
    const ParamPoly g = ParamPoly::gcd((one - qt) * (one - t1), (one - qt) * (one + t1));
    CHECK(g == one - qt);
}

TEST_CASE("point substitution") {
    // p = x1 - 1 at (1) -> 0
    XPolynomial p = XPolynomial::variable(1, 1) - XPolynomial::one(1);
    const Point pt1 = Point::from_monomials({{+1, Mono3{}}});
    CHECK(p.substitute(pt1).is_zero());

    // p = x1*x2 at (q, t^-1) -> q * t^-1
    XPolynomial p2 = XPolynomial::variable(2, 1) * XPolynomial::variable(2, 2);
    const Point pt2 = Point::from_monomials({{+1, Mono3{1, 0, 0}}, {+1, Mono3{0, -1, 0}}});
    CHECK(p2.substitute(pt2) == FieldElem::q() / FieldElem::t());

    // p = x1 + x2 at a*tau (n=2) -> a(1 + t^-1)
    XPolynomial p3 = XPolynomial::variable(2, 1) + XPolynomial::variable(2, 2);
    const Point atau =
        Point::from_monomials({{+1, Mono3{}}, {+1, Mono3{0, -1, 0}}}).scaled_by_a(1);
    const FieldElem expect =
        FieldElem::a() * (FieldElem::one() + FieldElem::t().inverse());
    CHECK(p3.substitute(atau) == expect);

    CHECK_THROWS_AS(p3.substitute(pt1), DimensionMismatch);
}

TEST_CASE("substitution is a ring homomorphism") {
    Gen gen;
    for (int iter = 0; iter < 40; ++iter) {
        XPolynomial p(2), r(2);
        for (int k = 0; k < 3; ++k) {
            p.add_term({static_cast<int>(gen.rng() % 3), static_cast<int>(gen.rng() % 3)},
                       gen.elem());
            r.add_term({static_cast<int>(gen.rng() % 3), static_cast<int>(gen.rng() % 3)},
                       gen.elem());
        }
        const Point pt = Point::from_monomials(
            {{iter % 2 ? +1 : -1, Mono3{1, -1, 0}}, {+1, Mono3{0, 1, 1}}});
        CHECK((p * r).substitute(pt) == p.substitute(pt) * r.substitute(pt));
        CHECK((p + r).substitute(pt) == p.substitute(pt) + r.substitute(pt));
    }
}

TEST_CASE("divided difference basics") {
    // dd(x1) = 1 (n=2)
    XPolynomial x1 = XPolynomial::variable(2, 1);
    CHECK(divided_difference(x1, 1) == XPolynomial::one(2));

    // dd(const) = 0
    CHECK(divided_difference(XPolynomial::constant(2, FieldElem::t()), 1).is_zero());

    // dd(x1^2) = x1 + x2
    CHECK(divided_difference(x1 * x1, 1) ==
          XPolynomial::variable(2, 1) + XPolynomial::variable(2, 2));
}

TEST_CASE("divided difference roundtrip on monomials") {
    // (x_i - x_{i+1}) * dd(p) + s_i p == p for all monomials, deg <= 5, n <= 3
    for (int n = 2; n <= 3; ++n) {
        const XPolynomial diff01 =
            XPolynomial::variable(n, 1) - XPolynomial::variable(n, 2);
        std::vector<ExpVec> exps;
        ExpVec cur(static_cast<std::size_t>(n), 0);
        // enumerate all exponent vectors with entries summing to <= 5
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
            if (pos == cur.size()) {
                exps.push_back(cur);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                cur[pos] = v;
                rec(pos + 1, rem - v);
            }
            cur[pos] = 0;
        };
        rec(0, 5);
        for (int i = 1; i < n; ++i) {
            const XPolynomial diff =
                XPolynomial::variable(n, i) - XPolynomial::variable(n, i + 1);
            for (const auto& e : exps) {
                const XPolynomial p = XPolynomial::monomial(n, e, FieldElem::one());
                const XPolynomial back = diff * divided_difference(p, i) + p.vars_swapped(i);
                CHECK(back == p);
            }
        }
    }
}

TEST_CASE("laurent divided difference") {
    // dd on x1^-1 (n=2): (x^-1 - y^-1)/(x-y) = -x^-1 y^-1
    XPolynomial p = XPolynomial::monomial(2, {-1, 0}, FieldElem::one());
    XPolynomial expect = XPolynomial::monomial(2, {-1, -1}, -FieldElem::one());
    CHECK(divided_difference(p, 1) == expect);
}

TEST_CASE("canonical text rendering") {
    CHECK(FieldElem::zero().to_string() == "0");
    CHECK((FieldElem::one() - FieldElem::t()).to_string() == "1 - t");
    const FieldElem frac = (FieldElem::one() - FieldElem::t()) /
                           (FieldElem::one() - FieldElem::q() * FieldElem::t());
    CHECK(frac.to_string() == "(1 - t)/(1 - q*t)");

    XPolynomial p(2);
    p.add_term({2, 1}, frac);
    CHECK(p.to_string() == "(1 - t)/(1 - q*t) * x1^2*x2");
    p.add_term({0, 0}, FieldElem(1));
    CHECK(p.to_string() == "1 + (1 - t)/(1 - q*t) * x1^2*x2");
}
