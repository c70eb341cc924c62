#pragma once

#include "eqfix/error.hpp"
#include "eqfix/exact.hpp"
#include "eqfix/fixed_point_data.hpp"
#include "eqfix/polynomial.hpp"

#include <doctest.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace eqfix::test {

inline Rational q(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

/// Polynomial from ascending integer coefficients.
inline UniPoly poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

inline UniPoly xpow(long c, std::size_t d) { return UniPoly::monomial(Rational(c), d); }

inline FixedPointData make_data(std::size_t n, const std::vector<std::vector<Weight>>& weights) {
    FixedPointData d;
    d.n = n;
    for (std::size_t i = 0; i < weights.size(); ++i) d.points.push_back({"P" + std::to_string(i), weights[i], {}});
    return d;
}

template <typename F>
ErrorKind kind_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an eqfix::Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace eqfix::test

#define CHECK_KIND(expr, expected) CHECK(::eqfix::test::kind_of([&] { (void)(expr); }) == (expected))
