#include "helpers.hpp"

#include "eqfix/hypercube.hpp"
#include "eqfix/localization.hpp"

#include <random>

using namespace eqfix;
using eqfix::test::make_data;
using eqfix::test::poly;
using eqfix::test::q;
using eqfix::test::xpow;

namespace {

RatFunc over(const UniPoly& num, const UniPoly& den) { return RatFunc(num, den); }

// Sum of alpha|_F / prod(w) x^n written out term by term.
RatFunc direct_sum(const FixedPointData& d, const RestrictionAssignment& a) {
    RatFunc total;
    for (const auto& p : d.points) {
        Integer e = 1;
        for (Weight w : p.weights) e *= Integer(static_cast<long>(w));
        total += over(a.at(p.id), xpow(e.get_si(), d.n));
    }
    return total;
}

RestrictionAssignment random_assignment(const FixedPointData& d, std::size_t degree, std::mt19937& rng) {
    std::uniform_int_distribution<long> c(-5, 5);
    std::map<std::string, UniPoly> v;
    for (const auto& p : d.points) v.emplace(p.id, xpow(c(rng), degree));
    return RestrictionAssignment(v);
}

}  // namespace

TEST_CASE("euler class") {
    CHECK(euler_class(std::vector<Weight>{1, 1}) == xpow(1, 2));
    CHECK(euler_class(std::vector<Weight>{1, 1, -2}) == xpow(-2, 3));
    for (std::size_t k = 0; k <= 4; ++k) {
        std::vector<Weight> w(4, 1);
        for (std::size_t i = 0; i < k; ++i) w[i] = -1;
        CHECK(euler_class(w) == xpow(k % 2 ? -1 : 1, 4));
    }
    CHECK_KIND(euler_class(std::vector<Weight>{1, 0}), ErrorKind::ZeroWeight);
}

TEST_CASE("chern classes of a representation") {
    CHECK(rep_chern_classes(std::vector<Weight>{5}, 1) == std::vector<UniPoly>{xpow(5, 1)});
    CHECK(rep_chern_classes(std::vector<Weight>{1, 1}, 2) == std::vector<UniPoly>{xpow(2, 1), xpow(1, 2)});
    CHECK(rep_chern_classes(std::vector<Weight>{1, 1, -2}, 3) ==
          std::vector<UniPoly>{UniPoly(), xpow(-3, 2), xpow(-2, 3)});
}

TEST_CASE("restriction assignments") {
    CHECK_KIND(RestrictionAssignment({{"a", poly({1, 1})}}), ErrorKind::InvalidArgument);
    CHECK_KIND(RestrictionAssignment({{"a", xpow(1, 1)}, {"b", xpow(1, 2)}}), ErrorKind::InvalidArgument);
    const RestrictionAssignment z({{"a", UniPoly()}, {"b", xpow(3, 2)}});
    CHECK(z.degree() == 2u);
    CHECK(RestrictionAssignment({{"a", UniPoly()}}).degree() == std::nullopt);
    const RestrictionAssignment t = z.times_x();
    CHECK(t.at("b") == xpow(3, 3));
    CHECK(z.power(2).at("b") == xpow(9, 4));
}

TEST_CASE("integration") {
    const FixedPointData sphere = make_data(1, {{1}, {-1}});
    CHECK(integrate(sphere, unit_assignment(sphere)).is_zero());

    const FixedPointData pair = make_data(3, {{1, 1, -2}, {-1, -1, 2}});
    CHECK(integrate(pair, euler_assignment(pair)) == RatFunc(poly({2})));

    const FixedPointData cube = hypercube_data(2);
    const auto gamma = gamma_restrictions(cube);
    CHECK(gamma.at("{}").is_zero());
    CHECK(gamma.at("{1}") == xpow(1, 1));
    CHECK(gamma.at("{1,2}") == xpow(2, 1));
    CHECK(integrate(cube, gamma).is_zero());

    RestrictionAssignment partial({{"P0", xpow(1, 0)}});
    CHECK_KIND(integrate(sphere, partial), ErrorKind::InvalidArgument);
    CHECK_KIND(gamma_restrictions(pair), ErrorKind::NotSemifree);
}

TEST_CASE("integration matches a direct sum and is linear") {
    std::mt19937 rng(19);
    const std::vector<FixedPointData> cases = {hypercube_data(3), make_data(3, {{1, 1, -2}, {-1, -1, 2}}),
                                               make_data(2, {{1, 2}, {-1, 3}, {-2, -3}})};
    for (const auto& d : cases) {
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t deg = static_cast<std::size_t>(trial % 5);
            const auto a = random_assignment(d, deg, rng);
            const auto b = random_assignment(d, deg, rng);
            const Rational s = q(trial - 25, 7);
            CHECK(integrate(d, a) == direct_sum(d, a));
            CHECK(integrate(d, a + b) == integrate(d, a) + integrate(d, b));
            CHECK(integrate(d, s * a) == RatFunc(UniPoly::constant(s)) * integrate(d, a));
        }
    }
}

TEST_CASE("moment equations") {
    const auto rep = verify_moment_equations(hypercube_data(3));
    CHECK(rep.passed);
    REQUIRE(rep.sums.size() == 3);
    for (const auto& [l, s] : rep.sums) CHECK(s == 0);

    const auto bad = verify_moment_equations(make_data(2, {{1, 1}, {-1, 1}, {-1, -1}}));
    CHECK_FALSE(bad.passed);
    CHECK(bad.sums[0].second == 1);

    const auto sphere = verify_moment_equations(make_data(1, {{1}, {-1}}));
    CHECK(sphere.passed);
    CHECK(sphere.sums.size() == 1);
}

TEST_CASE("predicted counts") {
    CHECK(predict_counts(3, 1).N == std::vector<Integer>{1, 3, 3, 1});
    CHECK(predict_counts(1, 1).N == std::vector<Integer>{1, 1});
    CHECK(predict_counts(5, 2).N == std::vector<Integer>{2, 10, 20, 20, 10, 2});
}

TEST_CASE("chern monomials") {
    const auto m = chern_monomials(2, 2);
    const std::vector<std::vector<unsigned>> expected = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    CHECK(m == expected);
    CHECK(chern_monomials(3, 3).size() == 7);
}

TEST_CASE("consistency check examples") {
    const FixedPointData pair = make_data(3, {{1, 1, -2}, {-1, -1, 2}});
    const auto ok = consistency_check(pair, 3);
    CHECK(ok.passed());
    bool saw_c3 = false;
    for (const auto& c : ok.checks) {
        if (c.monomial_name() == "c3") {
            saw_c3 = true;
            CHECK(c.integral == RatFunc(poly({2})));
        }
    }
    CHECK(saw_c3);

    // Integral of 1 vanishes here; the first obstruction is c1, which integrates to -2/x^2.
    const FixedPointData semi = make_data(3, {{1, 1, -1}, {-1, -1, 1}});
    const auto bad = consistency_check(semi, 3);
    CHECK_FALSE(bad.passed());
    REQUIRE_FALSE(bad.failures().empty());
    CHECK(bad.checks.front().monomial_name() == "1");
    CHECK(bad.checks.front().passed);
    CHECK(bad.failures().front().monomial_name() == "c1");
    CHECK(bad.failures().front().integral == RatFunc(poly({-2}), xpow(1, 2)));

    const auto cube = consistency_check(hypercube_data(2), 2);
    CHECK(cube.passed());
    for (const auto& c : cube.checks) {
        if (c.monomial_name() == "c2") CHECK(c.integral == RatFunc(poly({4})));
    }
}

TEST_CASE("consistency check agrees with integrate") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<Weight> w(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        std::vector<std::vector<Weight>> pts(2 + trial % 3, std::vector<Weight>(n));
        for (auto& p : pts)
            for (auto& v : p)
                do v = w(rng);
                while (v == 0);
        const FixedPointData d = make_data(n, pts);
        const auto rep = consistency_check(d, n + 1);
        for (const auto& c : rep.checks) {
            const RatFunc expected = integrate(d, chern_monomial_assignment(d, c.exponents));
            CHECK(c.integral == expected);
            const bool pass = c.degree < n ? expected.is_zero()
                                           : expected.is_polynomial() && ratfunc_to_poly(expected).has_integer_coefficients();
            CHECK(c.passed == pass);
        }
    }
}

TEST_CASE("search") {
    const auto r = search_candidates(3, 2, 2, 3);
    const WeightConfiguration weighted = {{-2, 1, 1}, {-1, -1, 2}};
    CHECK(std::find(r.passing.begin(), r.passing.end(), weighted) != r.passing.end());
    for (const auto& config : r.passing) {
        bool all_unit = true;
        for (const auto& p : config)
            for (Weight v : p) all_unit = all_unit && (v == 1 || v == -1);
        CHECK_FALSE(all_unit);
    }
    CHECK(search_candidates(3, 2, 1, 3).passing.empty());
    const auto sphere = search_candidates(1, 2, 1, 1);
    const WeightConfiguration s = {{-1}, {1}};
    CHECK(std::find(sphere.passing.begin(), sphere.passing.end(), s) != sphere.passing.end());

    SearchOptions threaded;
    threaded.threads = 4;
    CHECK(search_candidates(3, 2, 2, 3, threaded).passing == r.passing);

    SearchOptions tiny;
    tiny.max_candidates = 10;
    CHECK_KIND(search_candidates(3, 2, 2, 3, tiny), ErrorKind::SearchSpaceTooLarge);

    const FixedPointData d = configuration_data(weighted);
    CHECK(d.n == 3);
    CHECK(d.points[0].id == "P0");
}
