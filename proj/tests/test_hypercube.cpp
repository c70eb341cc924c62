#include "helpers.hpp"

#include "eqfix/hypercube.hpp"
#include "eqfix/localization.hpp"

#include <random>

using namespace eqfix;
using eqfix::test::poly;
using eqfix::test::q;
using eqfix::test::xpow;

namespace {

Subset S(std::initializer_list<int> e) { return Subset::from_elements(e); }

// Random homogeneous class of degree d in n generators, built from raw
// (not yet reduced) products so the ring relation gets exercised.
CubeClass random_class(std::size_t n, std::size_t d, std::mt19937& rng) {
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> gen(0, static_cast<int>(n));
    CubeClass out;
    for (int t = 0; t < 4; ++t) {
        CubeClass term = CubeClass::unit() * Integer(coef(rng));
        for (std::size_t i = 0; i < d; ++i) {
            const int g = gen(rng);
            term *= g == 0 ? CubeClass::y() : CubeClass::a(g);
        }
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("subsets") {
    CHECK(S({3, 1}).to_string() == "{1,3}");
    CHECK(Subset().to_string() == "{}");
    CHECK(Subset::parse("{1,3}") == S({1, 3}));
    CHECK(Subset::parse(" { 2 } ") == S({2}));
    CHECK(Subset::parse("{}") == Subset());
    CHECK_KIND(Subset::parse("1,3"), ErrorKind::Parse);
    CHECK_KIND(Subset::parse("{0}"), ErrorKind::Parse);
    CHECK_KIND(Subset::parse("{1,}"), ErrorKind::Parse);
    CHECK_KIND(Subset::parse("{99999999999}"), ErrorKind::Parse);
    const auto all = all_subsets(3);
    REQUIRE(all.size() == 8);
    std::vector<std::string> names;
    for (Subset s : all) names.push_back(s.to_string());
    CHECK(names == std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
    CHECK(S({1}).is_subset_of(S({1, 2})));
    CHECK_FALSE(S({3}).is_subset_of(S({1, 2})));
}

TEST_CASE("ring arithmetic absorbs the relation") {
    for (int i = 1; i <= 4; ++i) {
        CHECK(CubeClass::a(i) * CubeClass::y() == CubeClass::a(i) * CubeClass::a(i));
        CHECK((CubeClass::a(i) * CubeClass::y() - pow(CubeClass::a(i), 2)).is_zero());
    }
    const CubeClass p = CubeClass::a(1) * CubeClass::a(2) * CubeClass::a(1);
    CHECK(p == CubeClass::monomial(CubeMonomial{S({1, 2}), 1}));
    CHECK(p.to_string() == "a1*a2*y");
    CHECK(p.homogeneous_degree() == 3u);
    CHECK((CubeClass::a(1) + CubeClass::unit()).homogeneous_degree() == std::nullopt);
}

TEST_CASE("restriction") {
    CHECK(restrict_class(CubeClass::a(1), S({1})) == xpow(1, 1));
    CHECK(restrict_class(CubeClass::a(1), S({2})).is_zero());
    for (Subset J : all_subsets(3)) {
        const CubeClass rel = CubeClass::a(2) * CubeClass::y() - pow(CubeClass::a(2), 2);
        CHECK(restrict_class(rel, J).is_zero());
        // Relation checked on restricted generators, independent of the normal form.
        const UniPoly ra = restrict_class(CubeClass::a(2), J), ry = restrict_class(CubeClass::y(), J);
        CHECK((ra * ry - ra * ra).is_zero());
    }
    CHECK(restrict_class(alpha_class(S({1, 2})), S({1, 2, 3})) == xpow(1, 2));
}

TEST_CASE("alpha and beta classes") {
    for (Subset J : all_subsets(3)) CHECK(restrict_class(alpha_class(Subset()), J) == xpow(1, 0));
    CHECK(restrict_class(alpha_class(S({1})), S({1, 2})) == xpow(1, 1));
    CHECK(restrict_class(alpha_class(S({1})), S({2})).is_zero());
    CHECK(restrict_class(alpha_class(S({1, 2})), S({1, 2})) == xpow(1, 2));

    CHECK(beta_class(S({1, 2, 3}), 3) == CubeClass::unit());
    const CubeClass b = beta_class(S({1}), 2);
    CHECK(restrict_class(b, Subset()) == xpow(1, 1));
    CHECK(restrict_class(b, S({1})) == xpow(1, 1));
    CHECK(restrict_class(b, S({2})).is_zero());
    CHECK(restrict_class(b, S({1, 2})).is_zero());
    for (Subset J : all_subsets(3)) {
        const UniPoly r = restrict_class(beta_class(Subset(), 3), J);
        CHECK(r == (J == Subset() ? xpow(1, 3) : UniPoly()));
    }
    // Support rules: alpha_J lives on supersets of J, beta_J on subsets.
    for (Subset J : all_subsets(3))
        for (Subset K : all_subsets(3)) {
            CHECK(restrict_class(alpha_class(J), K) == (J.is_subset_of(K) ? xpow(1, J.size()) : UniPoly()));
            CHECK(restrict_class(beta_class(J, 3), K) == (K.is_subset_of(J) ? xpow(1, 3 - J.size()) : UniPoly()));
        }
}

TEST_CASE("equivariant chern series") {
    const auto one = equivariant_chern_series(1, 1);
    CHECK(one[0] == CubeClass::a(1) * Integer(2) - CubeClass::y());
    const auto two = equivariant_chern_series(2, 2);
    CHECK(two[0] == (CubeClass::a(1) + CubeClass::a(2) - CubeClass::y()) * Integer(2));
    const CubeClass f1 = CubeClass::a(1) * Integer(2) - CubeClass::y();
    const CubeClass f2 = CubeClass::a(2) * Integer(2) - CubeClass::y();
    CHECK(two[1] == f1 * f2);
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto c = equivariant_chern_series(n, n);
        CHECK(restrict_class(c[n - 1], Subset::full(n)) == xpow(1, n));
        // c_1 restricts to (2|J| - n) x, the opposite sign of the weight-side value.
        for (Subset J : all_subsets(n)) {
            CHECK(restrict_class(c[0], J) == xpow(2 * static_cast<long>(J.size()) - static_cast<long>(n), 1));
            const auto w = hypercube_data(n).point(J.to_string()).weights;
            CHECK(rep_chern_classes(w, 1)[0] == xpow(static_cast<long>(n) - 2 * static_cast<long>(J.size()), 1));
        }
    }
}

TEST_CASE("restriction is multiplicative") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const CubeClass a = random_class(n, static_cast<std::size_t>(trial % 3), rng);
        const CubeClass b = random_class(n, static_cast<std::size_t>((trial / 3) % 3), rng);
        for (Subset J : all_subsets(n)) CHECK(restrict_class(a * b, J) == restrict_class(a, J) * restrict_class(b, J));
    }
}

TEST_CASE("basis expansion") {
    const auto y = express_in_basis(CubeClass::y(), 1);
    CHECK(y.at(Subset()) == xpow(1, 1));
    CHECK((!y.contains(S({1})) || y.at(S({1})).is_zero()));
    const auto sq = express_in_basis(CubeClass::a(1) * CubeClass::a(1), 1);
    CHECK(sq.at(S({1})) == xpow(1, 1));
    CHECK((!sq.contains(Subset()) || sq.at(Subset()).is_zero()));
    for (Subset J : all_subsets(3)) {
        const auto e = express_in_basis(alpha_class(J), 3);
        for (const auto& [K, p] : e) CHECK(p == (K == J ? xpow(1, 0) : UniPoly()));
    }
}

TEST_CASE("basis expansion round-trips") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        const CubeClass c = random_class(n, static_cast<std::size_t>(trial % 4), rng);
        const auto e = express_in_basis(c, n);
        for (const auto& [J, p] : e) CHECK(p.has_integer_coefficients());
        CHECK(from_basis(e) == c);
    }
}

TEST_CASE("injectivity ranks") {
    const auto one = injectivity_rank_check(1);
    CHECK(one.degrees[0].rank == 1);
    const auto two = injectivity_rank_check(2);
    CHECK(two.degrees[1].rows == 3);
    CHECK(two.degrees[1].rank == 3);
    CHECK(injectivity_rank_check(3).passed());
    CHECK_KIND(injectivity_rank_check(13), ErrorKind::InvalidArgument);
}

TEST_CASE("model data") {
    CHECK(default_offset(3) == q(3, 2));
    CHECK(default_offset(4) == q(5, 2));
    const auto d = hypercube_data(2, ModelData{2, q(1, 2)});
    CHECK(d.points.size() == 4);
    CHECK(*d.point("{1,2}").moment == q(3, 2));
    CHECK(d.point("{1}").weights == std::vector<Weight>{-1, 1});
    CHECK(d.semifree());
}
