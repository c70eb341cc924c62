#include "helpers.hpp"

#include <random>

using namespace eqfix;
using eqfix::test::poly;
using eqfix::test::q;

TEST_CASE("rationals parse and stay canonical") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational(" -4 ") == q(-4));
    CHECK(parse_rational("2/-4") == q(-1, 2));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_KIND(parse_rational("1/0"), ErrorKind::Parse);
    CHECK_KIND(parse_rational("abc"), ErrorKind::Parse);
    CHECK_KIND(parse_rational("1.5"), ErrorKind::Parse);
    CHECK_KIND(parse_rational(""), ErrorKind::Parse);
    CHECK_KIND(make_rational(Integer(1), Integer(0)), ErrorKind::InvalidArgument);
}

TEST_CASE("binomials and factorials") {
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(3, 5) == 0);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(ipow(Integer(-2), 5) == -32);
    CHECK(rpow(q(1, 2), 3) == q(1, 8));
    // Large values stay exact.
    CHECK(binomial(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("polynomial arithmetic") {
    const UniPoly a = poly({1, 1});   // 1 + x
    const UniPoly b = poly({-1, 1});  // -1 + x
    CHECK(a * b == poly({-1, 0, 1}));
    CHECK(a + b == poly({0, 2}));
    CHECK((a - a).is_zero());
    CHECK((a - a).degree() == -1);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(pow(a, 3) == poly({1, 3, 3, 1}));
    CHECK(poly({1, -2, 0, 1}).to_string() == "1 - 2*x^1 + x^3");
    CHECK(UniPoly().to_string() == "0");
    CHECK(poly({0, 0, 5}).is_monomial());
    CHECK_FALSE(poly({1, 1}).is_monomial());
    CHECK(poly({1, 2, 3}).evaluate(q(2)) == 17);
}

TEST_CASE("division and gcd") {
    const auto [quot, rem] = UniPoly::divmod(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(quot == poly({1, 1}));
    CHECK(rem.is_zero());
    CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
    CHECK(gcd(poly({0, 0, 2}), poly({0, 3})) == poly({0, 1}));
    CHECK_KIND(UniPoly::divmod(poly({1}), UniPoly()), ErrorKind::InvalidArgument);
}

TEST_CASE("divmod reconstructs the dividend on random inputs") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> ca(1 + trial % 6), cb(1 + trial % 3);
        for (auto& c : ca) c = Rational(coef(rng));
        for (auto& c : cb) c = Rational(coef(rng));
        cb.back() = Rational(coef(rng) == 0 ? 1 : 2);
        const UniPoly a(ca), b(cb);
        const auto [quot, rem] = UniPoly::divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.degree() < b.degree());
    }
}

TEST_CASE("rational functions reduce") {
    const RatFunc f(poly({0, -1, 1}), poly({0, 1}));  // (x^2 - x)/x
    CHECK(f.is_polynomial());
    CHECK(ratfunc_to_poly(f) == poly({-1, 1}));
    CHECK(ratfunc_to_poly(RatFunc(UniPoly(), poly({0, 0, 0, 1}))).is_zero());
    CHECK_KIND(ratfunc_to_poly(RatFunc(poly({1}), poly({0, 1}))), ErrorKind::NotPolynomial);
    CHECK_KIND(RatFunc(poly({1}), UniPoly()), ErrorKind::InvalidArgument);

    // 1/x + 1/(-x) = 0
    const RatFunc sum = RatFunc(poly({1}), poly({0, 1})) + RatFunc(poly({1}), poly({0, -1}));
    CHECK(sum.is_zero());
    CHECK(sum.is_polynomial());

    // Denominator is monic after reduction.
    const RatFunc g(poly({2}), poly({0, -2}));
    CHECK(g.denominator() == poly({0, 1}));
    CHECK(g.numerator() == poly({-1}));
    CHECK(g.to_string() == "(-1)/(x^1)");
}
