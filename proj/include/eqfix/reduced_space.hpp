#pragma once

#include "eqfix/fixed_point_data.hpp"
#include "eqfix/hypercube.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eqfix {

/// Generators of the kernel of the Kirwan map at level 0, on top of the
/// structural relations a_i y - a_i^2 (already built into CubeClass).
struct IdealPresentation {
    std::size_t n = 0;
    /// alpha_class(J) for every J with mu(J) > 0.
    std::vector<std::pair<Subset, CubeClass>> positive_generators;
    /// beta_class(J) for every J with mu(J) < 0.
    std::vector<std::pair<Subset, CubeClass>> negative_generators;

    /// "a_i*y - a_i^2" for i = 1..n, for display.
    std::vector<std::string> ring_relations() const;
    std::vector<CubeClass> generators() const;
};

/// Throws ZeroIsCritical when some mu(J) = 0.
IdealPresentation kernel_generators(const ModelData& model);
/// Generators from moment values labelled by subsets (all 2^n required).
IdealPresentation kernel_generators(std::size_t n, const std::map<Subset, Rational>& moments);

struct QuotientPiece {
    std::size_t degree = 0;  // d; cohomological degree 2d
    std::vector<CubeMonomial> monomials;
    std::size_t relation_rows = 0;
    std::size_t rank = 0;  // free rank of the quotient
    std::vector<Integer> torsion;  // invariant factors > 1
};

struct GradedQuotient {
    std::size_t n = 0;
    std::vector<QuotientPiece> pieces;

    std::vector<std::size_t> ranks() const;
    std::size_t euler_characteristic() const;
    bool torsion_free() const;
};

/// Integer quotient of Z[a, y]/(a_i y - a_i^2) by the kernel generators in
/// each cohomological degree 2d <= max_degree.
GradedQuotient graded_quotient(const IdealPresentation& pres, std::size_t max_degree);

/// rank H^{2i}(M_red) = #{F : mu(F) < 0, k_F <= i} - #{F : mu(F) < 0, n - k_F <= i}.
/// Throws NotSemifree, MissingMomentValue, ZeroIsCritical.
std::size_t betti_by_counting(const FixedPointData& data, std::size_t i);

/// Image of a homogeneous class in the degree-d slice of the quotient over
/// Q, written on the monomials left free by a row reduction of the relations.
struct ReducedClass {
    std::size_t degree = 0;
    std::vector<CubeMonomial> basis;
    std::vector<Rational> coefficients;

    bool is_zero() const;
    std::string to_string() const;
};

ReducedClass reduce_class(const IdealPresentation& pres, const CubeClass& cls, std::size_t degree);

/// Images of c_1..c_up_to of prod (1 + t (2 a_i - y)).
std::vector<ReducedClass> reduced_chern_series(const IdealPresentation& pres, std::size_t up_to);

struct PoincareReport {
    bool passed = true;
    std::vector<std::string> problems;
};

/// rank_{2i} = rank_{2(n-1-i)} for 0 <= i <= n-1 and no torsion.
PoincareReport poincare_check(const GradedQuotient& q, std::size_t n);

}  // namespace eqfix
