#pragma once

#include "eqfix/fixed_point_data.hpp"
#include "eqfix/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqfix {

/// Restrictions alpha|_F of one equivariant class to every fixed point.
/// Every entry is c * x^d for a common degree d (zero entries allowed).
class RestrictionAssignment {
public:
    RestrictionAssignment() = default;
    /// Throws InvalidArgument unless all entries are homogeneous of one degree.
    explicit RestrictionAssignment(std::map<std::string, UniPoly> values);

    const UniPoly& at(const std::string& id) const;
    bool contains(const std::string& id) const { return values_.contains(id); }
    const std::map<std::string, UniPoly>& values() const noexcept { return values_; }
    /// Common degree in x, or nullopt when every entry is zero.
    std::optional<std::size_t> degree() const noexcept { return degree_; }

    friend RestrictionAssignment operator+(const RestrictionAssignment& a, const RestrictionAssignment& b);
    friend RestrictionAssignment operator*(const RestrictionAssignment& a, const RestrictionAssignment& b);
    friend RestrictionAssignment operator*(const Rational& s, const RestrictionAssignment& a);
    /// Multiplication by x at every point (the H*(BS^1)-module action).
    RestrictionAssignment times_x() const;
    RestrictionAssignment power(unsigned exponent) const;

    friend bool operator==(const RestrictionAssignment&, const RestrictionAssignment&) = default;

private:
    std::map<std::string, UniPoly> values_;
    std::optional<std::size_t> degree_;
};

/// (prod w_i) x^n. Throws ZeroWeight.
UniPoly euler_class(std::span<const Weight> weights);

/// Entries i = 1..up_to: sigma_i(weights) x^i.
std::vector<UniPoly> rep_chern_classes(std::span<const Weight> weights, std::size_t up_to);

/// sum_F alpha|_F / e(nu_F), reduced. Throws InvalidArgument when alpha
/// misses a fixed point.
RatFunc integrate(const FixedPointData& data, const RestrictionAssignment& alpha);

/// gamma|_F = k_F x for semifree data. Throws NotSemifree.
RestrictionAssignment gamma_restrictions(const FixedPointData& data);

RestrictionAssignment unit_assignment(const FixedPointData& data);
RestrictionAssignment euler_assignment(const FixedPointData& data);
/// c_1^{e_1} ... c_n^{e_n} of the tangent representation at every point.
RestrictionAssignment chern_monomial_assignment(const FixedPointData& data, std::span<const unsigned> exponents);

struct MomentEquationReport {
    /// (l, sum_k N_k k^l (-1)^k) for 0 <= l < n.
    std::vector<std::pair<std::size_t, Integer>> sums;
    bool passed = true;
};

/// Throws NotSemifree.
MomentEquationReport verify_moment_equations(const FixedPointData& data);

/// N_k = N0 * C(n, k), obtained from the moment-matrix kernel.
CountVector predict_counts(std::size_t n, const Integer& N0);

/// Exponent vectors (e_1..e_n) with sum i*e_i <= max_degree, ordered by
/// weighted degree and then lexicographically descending.
std::vector<std::vector<unsigned>> chern_monomials(std::size_t n, std::size_t max_degree);

struct MonomialCheck {
    std::vector<unsigned> exponents;
    std::size_t degree = 0;
    RatFunc integral;
    bool passed = true;

    std::string monomial_name() const;
};

struct ConsistencyReport {
    std::size_t max_degree = 0;
    std::vector<MonomialCheck> checks;

    bool passed() const;
    std::vector<MonomialCheck> failures() const;
};

/// Integrates every Chern monomial up to max_degree: degree below n must
/// integrate to zero, degree n and above to an integer polynomial.
ConsistencyReport consistency_check(const FixedPointData& data, std::size_t max_degree);

using WeightConfiguration = std::vector<std::vector<Weight>>;

struct SearchOptions {
    std::uint64_t max_candidates = 2'000'000;
    /// Keep the degree-zero condition sum_F 1/prod(w_F) = 0 in the sweep.
    bool include_degree_zero = true;
    unsigned threads = 1;
};

struct SearchResult {
    std::vector<WeightConfiguration> passing;
    std::uint64_t examined = 0;
};

/// Canonical configurations (each point's weights sorted ascending, points
/// sorted lexicographically) with weights in [-bound, bound] \ {0} passing
/// consistency_check up to max_degree. Throws SearchSpaceTooLarge.
SearchResult search_candidates(std::size_t n, std::size_t num_points, std::size_t weight_bound,
                               std::size_t max_degree, const SearchOptions& options = {});

FixedPointData configuration_data(const WeightConfiguration& configuration);

}  // namespace eqfix
