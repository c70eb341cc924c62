#include "helpers.hpp"

#include "eqfix/reduced_space.hpp"

using namespace eqfix;
using eqfix::test::q;

namespace {

GradedQuotient quotient(std::size_t n, const Rational& c) {
    return graded_quotient(kernel_generators(ModelData{n, c}), 2 * (n - 1));
}

}  // namespace

TEST_CASE("kernel generators") {
    const auto pres = kernel_generators(ModelData{3, q(3, 2)});
    CHECK(pres.positive_generators.size() == 4);
    CHECK(pres.negative_generators.size() == 4);
    CHECK(pres.ring_relations().size() == 3);
    CHECK(pres.ring_relations()[0] == "a1*y - a1^2");
    for (std::size_t n = 1; n <= 3; ++n)
        for (long c = 0; c <= static_cast<long>(n); ++c)
            CHECK_KIND(kernel_generators(ModelData{n, q(c)}), ErrorKind::ZeroIsCritical);
    CHECK_KIND(kernel_generators(2, std::map<Subset, Rational>{{Subset(), q(-1)}}), ErrorKind::MissingMomentValue);
}

TEST_CASE("graded quotient examples") {
    const auto one = quotient(1, q(1, 2));
    CHECK(one.ranks() == std::vector<std::size_t>{1});
    const auto one_more = graded_quotient(kernel_generators(ModelData{1, q(1, 2)}), 4);
    CHECK(one_more.ranks() == std::vector<std::size_t>{1, 0, 0});

    const auto three = quotient(3, q(3, 2));
    CHECK(three.ranks() == std::vector<std::size_t>{1, 4, 1});
    CHECK(three.torsion_free());
    CHECK(three.euler_characteristic() == 6);

    CHECK(quotient(2, q(1, 2)).ranks() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("betti numbers by counting") {
    const auto d = hypercube_data(3, ModelData{3, q(3, 2)});
    CHECK(betti_by_counting(d, 0) == 1);
    CHECK(betti_by_counting(d, 1) == 4);
    CHECK(betti_by_counting(d, 2) == 1);
}

TEST_CASE("quotient ranks agree with counting") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (long twice_c = 1; twice_c < 2 * static_cast<long>(n); twice_c += 2) {
            const ModelData model{n, q(twice_c, 2)};
            const auto qt = quotient(n, model.offset);
            const auto d = hypercube_data(n, model);
            for (std::size_t i = 0; i < n; ++i) CHECK(qt.pieces[i].rank == betti_by_counting(d, i));
            CHECK(poincare_check(qt, n).passed);
        }
    }
}

TEST_CASE("reduced chern classes") {
    const auto p1 = kernel_generators(ModelData{1, q(1, 2)});
    const auto c1 = reduced_chern_series(p1, 1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].is_zero());

    const auto p3 = kernel_generators(ModelData{3, q(3, 2)});
    const auto c3 = reduced_chern_series(p3, 2);
    REQUIRE(c3.size() == 2);
    CHECK_FALSE(c3[0].is_zero());
    CHECK(c3[0].basis.size() == 4);

    const auto unit = reduce_class(p3, CubeClass::unit(), 0);
    CHECK(unit.basis.size() == 1);
    CHECK(unit.coefficients[0] == 1);
    CHECK(unit.to_string() == "1");

    // Relations reduce to zero.
    for (const auto& g : p3.generators()) {
        const auto deg = g.homogeneous_degree();
        REQUIRE(deg);
        CHECK(reduce_class(p3, g, *deg).is_zero());
    }
    CHECK_KIND(reduce_class(p3, CubeClass::a(1), 2), ErrorKind::InvalidArgument);
}

TEST_CASE("poincare check") {
    CHECK(poincare_check(quotient(3, q(3, 2)), 3).passed);
    CHECK(poincare_check(quotient(2, q(1, 2)), 2).passed);
    GradedQuotient fake;
    fake.n = 2;
    fake.pieces.resize(2);
    fake.pieces[0].rank = 1;
    fake.pieces[1].rank = 2;
    fake.pieces[1].degree = 1;
    const auto rep = poincare_check(fake, 2);
    CHECK_FALSE(rep.passed);
    CHECK_FALSE(rep.problems.empty());
}
