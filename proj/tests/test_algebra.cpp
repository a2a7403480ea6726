#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plectic/linalg.hpp"
#include "plectic/polynomial.hpp"
#include "plectic/rational.hpp"
#include "plectic/rational_function.hpp"
#include "support/random_gen.hpp"

using namespace plectic;
using testsupport::Rng;

namespace {

const std::vector<std::string> XY{"x", "y"};

Polynomial px(const std::vector<std::string>& vars = XY) { return Polynomial::variable(vars, 0); }
Polynomial py(const std::vector<std::string>& vars = XY) { return Polynomial::variable(vars, 1); }
Polynomial pc(const Rational& c, const std::vector<std::string>& vars = XY) {
    return Polynomial::constant(vars, c);
}

RationalFunction rf(const Polynomial& p) { return RationalFunction(p); }

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(1, 2).den() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK(Rational(3, 4).inv() == Rational(4, 3));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1).inv() / Rational(0), DivisionByZero);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-8/2").str() == "-4");
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
}

TEST_CASE("rational gcd helper") {
    CHECK(rat_gcd(Rational(4), Rational(6)) == Rational(2));
    CHECK(rat_gcd(Rational(1, 2), Rational(1, 3)) == Rational(1, 6));
    CHECK(rat_gcd(Rational(0), Rational(-5)) == Rational(5));
    CHECK(rat_gcd(Rational(-4, 9), Rational(2, 3)) == Rational(2, 9));
}

TEST_CASE("polynomial evaluation matches hand values") {
    // p = x^2 + y at (2, 3) evaluates to 7.
    Polynomial p = px() * px() + py();
    CHECK(p.eval({Rational(2), Rational(3)}) == Rational(7));

    // p = x*y - 1/2 at (1/2, 1/3) evaluates to -1/3.
    Polynomial q = px() * py() - pc(Rational(1, 2));
    CHECK(q.eval({Rational(1, 2), Rational(1, 3)}) == Rational(-1, 3));
}

TEST_CASE("polynomial differentiation matches hand values") {
    // d/dx (x^3/3 + x*y^2) = x^2 + y^2.
    Polynomial p = px().pow(3) * Rational(1, 3) + px() * py().pow(2);
    Polynomial expected = px().pow(2) + py().pow(2);
    CHECK(p.diff(0) == expected);
    // d/dy of the same: 2*x*y.
    CHECK(p.diff(1) == px() * py() * Rational(2));
}

TEST_CASE("polynomial basics") {
    Polynomial zero(XY);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.str() == "0");
    Polynomial p = px() * py() * Rational(3, 2) - py() + pc(Rational(1, 2));
    CHECK(p.degree() == 2);
    CHECK(p.leading_coeff() == Rational(3, 2));
    CHECK(p.content() == Rational(1, 2));
    CHECK(p.str() == "3/2*x*y - y + 1/2");
    CHECK((p - p).is_zero());
    CHECK(p.is_constant() == false);
    CHECK(pc(Rational(5)).is_constant());
    CHECK(pc(Rational(5)).constant_value() == Rational(5));
}

TEST_CASE("polynomial ring laws on random data") {
    Rng rng(2024);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = rng.poly(XY, 3);
        Polynomial b = rng.poly(XY, 3);
        Polynomial c = rng.poly(XY, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        // Evaluation is a ring homomorphism.
        const auto pt = rng.point(2);
        CHECK((a * b + c).eval(pt) == a.eval(pt) * b.eval(pt) + c.eval(pt));
    }
}

TEST_CASE("derivation rules on random data") {
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = rng.poly(XY, 4);
        Polynomial b = rng.poly(XY, 4);
        for (std::size_t v = 0; v < 2; ++v) {
            CHECK((a * b).diff(v) == a.diff(v) * b + a * b.diff(v));
            CHECK((a + b).diff(v) == a.diff(v) + b.diff(v));
        }
        // Mixed partials commute.
        CHECK(a.diff(0).diff(1) == a.diff(1).diff(0));
    }
}

TEST_CASE("exact division") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = rng.poly(XY, 3);
        Polynomial d = rng.nonzero_poly(XY, 2);
        auto q = (a * d).divide_exact(d);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    // A genuine non-multiple is rejected.
    CHECK(!(px() * py() + pc(Rational(1))).divide_exact(px()).has_value());
}

TEST_CASE("line restriction agrees with pointwise evaluation") {
    Rng rng(555);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = rng.poly(XY, 4);
        const auto start = rng.point(2, 3);
        const auto dir = rng.point(2, 3);
        const auto coeffs = p.restrict_to_line(start, dir);
        const Rational t = rng.rational(4, 3);
        Rational by_line(0);
        Rational tp(1);
        for (const auto& c : coeffs) {
            by_line += c * tp;
            tp *= t;
        }
        const std::vector<Rational> pt{start[0] + t * dir[0], start[1] + t * dir[1]};
        CHECK(by_line == p.eval(pt));
    }
}

TEST_CASE("rational function canonical form") {
    // x*y / x cancels to y.
    RationalFunction f(px() * py(), px());
    CHECK(f.is_polynomial());
    CHECK(*f.as_polynomial() == py());
    // x / x^2 cancels to 1/x with denominator normalized.
    RationalFunction g(px(), px() * px());
    CHECK(!g.is_polynomial());
    CHECK(g.num() == pc(Rational(1)));
    CHECK(g.den() == px());
    // Denominator content-normalized with positive leading coefficient.
    RationalFunction h(py(), px() * Rational(-2));
    CHECK(h.den() == px());
    CHECK(h.num() == py() * Rational(-1, 2));
    CHECK_THROWS_AS(RationalFunction(px(), Polynomial(XY)), DivisionByZero);
}

TEST_CASE("rational function equality is mathematical") {
    RationalFunction a(px() * py(), py() + pc(Rational(0)) + py());  // x*y / 2y
    RationalFunction b(px(), pc(Rational(2)));
    CHECK(a == b);
    RationalFunction c(px() + py(), px());
    RationalFunction d((px() + py()) * py(), px() * py());
    CHECK(c == d);
    CHECK(c != b);
}

TEST_CASE("rational function field laws on random data") {
    Rng rng(909);
    for (int i = 0; i < 40; ++i) {
        RationalFunction a = rng.rational_function(XY);
        RationalFunction b = rng.rational_function(XY);
        RationalFunction c = rng.rational_function(XY);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rational function derivative and evaluation") {
    // d/dx (y/x) = -y/x^2.
    RationalFunction f(py(), px());
    RationalFunction expected(-py(), px() * px());
    CHECK(f.diff(0) == expected);
    CHECK(f.diff(1) == RationalFunction(pc(Rational(1)), px()));
    // Quotient rule on random data, cross-checked by evaluation.
    Rng rng(4242);
    for (int i = 0; i < 25; ++i) {
        RationalFunction a = rng.rational_function(XY);
        RationalFunction b = rng.rational_function(XY);
        CHECK((a * b).diff(0) == a.diff(0) * b + a * b.diff(0));
    }
    CHECK(*f.eval({Rational(2), Rational(6)}) == Rational(3));
    CHECK(!f.eval({Rational(0), Rational(1)}).has_value());
}

TEST_CASE("solve: identity system") {
    RFMatrix m(XY, 2, 2);
    m.at(0, 0) = RationalFunction::constant(XY, Rational(1));
    m.at(1, 1) = RationalFunction::constant(XY, Rational(1));
    std::vector<RationalFunction> b{rf(px()), rf(py())};
    auto r = solve_linear(m, b);
    REQUIRE(r.kind == SolveResult::Kind::Unique);
    CHECK(r.particular[0] == rf(px()));
    CHECK(r.particular[1] == rf(py()));
}

TEST_CASE("solve: inconsistent system") {
    RFMatrix m(XY, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = RationalFunction::constant(XY, Rational(1));
    std::vector<RationalFunction> b{RationalFunction::constant(XY, Rational(0)),
                                    RationalFunction::constant(XY, Rational(1))};
    auto r = solve_linear(m, b);
    CHECK(r.kind == SolveResult::Kind::Inconsistent);
    // Best-effort residual is nonzero.
    auto res = m.apply(r.particular);
    bool all_match = res[0] == b[0] && res[1] == b[1];
    CHECK(!all_match);
}

TEST_CASE("solve: rational-function solution") {
    // [[x, 0], [0, 1]] (a, b)^T = (1, y)^T has solution (1/x, y).
    RFMatrix m(XY, 2, 2);
    m.at(0, 0) = rf(px());
    m.at(1, 1) = RationalFunction::constant(XY, Rational(1));
    std::vector<RationalFunction> b{RationalFunction::constant(XY, Rational(1)), rf(py())};
    auto r = solve_linear(m, b);
    REQUIRE(r.kind == SolveResult::Kind::Unique);
    CHECK(r.particular[0] == RationalFunction(pc(Rational(1)), px()));
    CHECK(r.particular[1] == rf(py()));
}

TEST_CASE("solve: affine solution set with kernel certificate") {
    // x + y-col degenerate: [[1, 1]] (a, b)^T = (x).
    RFMatrix m(XY, 1, 2);
    m.at(0, 0) = RationalFunction::constant(XY, Rational(1));
    m.at(0, 1) = RationalFunction::constant(XY, Rational(1));
    std::vector<RationalFunction> b{rf(px())};
    auto r = solve_linear(m, b);
    REQUIRE(r.kind == SolveResult::Kind::Affine);
    REQUIRE(r.kernel.size() == 1);
    auto zero = m.apply(r.kernel[0]);
    CHECK(zero[0].is_zero());
    auto sol = m.apply(r.particular);
    CHECK(sol[0] == b[0]);
}

TEST_CASE("solve postconditions on random systems") {
    Rng rng(13579);
    int unique_seen = 0;
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const std::size_t mcols = static_cast<std::size_t>(rng.uniform(1, 3));
        RFMatrix m(XY, n, mcols);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < mcols; ++c)
                m.at(r, c) = RationalFunction(rng.poly(XY, 2, 3));
        std::vector<RationalFunction> x0;
        for (std::size_t c = 0; c < mcols; ++c) x0.push_back(RationalFunction(rng.poly(XY, 2, 2)));
        const auto b = m.apply(x0);
        auto r = solve_linear(m, b);
        REQUIRE(r.kind != SolveResult::Kind::Inconsistent);  // constructed solvable
        if (r.kind == SolveResult::Kind::Unique) ++unique_seen;
        const auto back = m.apply(r.particular);
        for (std::size_t k = 0; k < n; ++k) CHECK(back[k] == b[k]);
        for (const auto& kv : r.kernel) {
            const auto kz = m.apply(kv);
            for (std::size_t k = 0; k < n; ++k) CHECK(kz[k].is_zero());
        }
    }
    CHECK(unique_seen > 0);
}

TEST_CASE("rank and determinant") {
    RFMatrix m(XY, 2, 2);
    m.at(0, 0) = rf(px());
    m.at(0, 1) = rf(py());
    m.at(1, 0) = rf(py());
    m.at(1, 1) = rf(px());
    CHECK(rank(m) == 2);
    CHECK(det(m) == RationalFunction(px() * px() - py() * py()));

    RFMatrix s(XY, 2, 2);
    s.at(0, 0) = rf(px());
    s.at(0, 1) = rf(px());
    s.at(1, 0) = rf(py());
    s.at(1, 1) = rf(py());
    CHECK(rank(s) == 1);
    CHECK(det(s).is_zero());

    // Antisymmetric swap: det [[0,1],[1,0]] = -1.
    RFMatrix a(XY, 2, 2);
    a.at(0, 1) = RationalFunction::constant(XY, Rational(1));
    a.at(1, 0) = RationalFunction::constant(XY, Rational(1));
    CHECK(det(a) == RationalFunction::constant(XY, Rational(-1)));
}

TEST_CASE("determinant multiplicativity on random matrices") {
    Rng rng(8642);
    for (int i = 0; i < 15; ++i) {
        RFMatrix a(XY, 2, 2), b(XY, 2, 2), ab(XY, 2, 2);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c) {
                a.at(r, c) = RationalFunction(rng.poly(XY, 2, 2));
                b.at(r, c) = RationalFunction(rng.poly(XY, 2, 2));
            }
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t k = 0; k < 2; ++k)
                    ab.at(r, c) += a.at(r, k) * b.at(k, c);
        CHECK(det(ab) == det(a) * det(b));
    }
}
