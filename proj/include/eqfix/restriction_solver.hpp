#pragma once

#include "eqfix/fixed_point_data.hpp"
#include "eqfix/hypercube.hpp"
#include "eqfix/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqfix {

/// Restrictions a_j|_F of the degree-2 classes a_1..a_n to the fixed points.
/// Points are kept in (index, id) order; entries[j - 1][p] is a_j at
/// point_ids[p].
struct RestrictionTable {
    std::size_t n = 0;
    std::vector<std::string> point_ids;
    std::vector<std::size_t> levels;  // k_F for each point
    std::vector<std::vector<UniPoly>> entries;

    std::size_t point_position(const std::string& id) const;
    /// 1-based generator index.
    const UniPoly& at(int j, const std::string& id) const;
    UniPoly& at(int j, const std::string& id);

    friend bool operator==(const RestrictionTable&, const RestrictionTable&) = default;
};

/// Empty table over the points of data (all entries zero).
RestrictionTable make_table(const FixedPointData& data);

/// a_j restricted through the model at J: x when j is in J.
RestrictionTable model_table(std::size_t n);

using Bijection = std::map<std::string, Subset>;

/// C(n-1, k-1) x; zero at k = 0.
UniPoly forced_level_sum(std::size_t n, std::size_t k);
/// C(n-1, k-1) x^2; zero at k = 0.
UniPoly forced_level_square_sum(std::size_t n, std::size_t k);

/// Integers c_1..c_N with sum S and (when square_sum_matches) sum of squares
/// also S are forced to be S ones and N - S zeros. Returned in descending
/// order. Throws NoIntegerSolution when S is outside [0, N] and
/// Underdetermined when the square sum is not known to match.
std::vector<Integer> solve_value_multiset(const Integer& sum, bool square_sum_matches, std::size_t count);

/// Number of j with a_j|_F = x. Throws InvalidArgument when an entry is not
/// 0 or x, WrongCount when the count differs from k_F.
std::size_t per_point_count(const RestrictionTable& table, const std::string& id);

/// F -> {j : a_j|_F = x}. Throws WrongCount, NotInjective or NotSurjective
/// with a witness subset.
Bijection assemble_bijection(const RestrictionTable& table);

/// Level sums of one class derived from agreement at a few levels through
/// the moment-kernel completion.
struct LevelDeduction {
    std::string label;
    std::size_t class_degree = 0;
    std::vector<std::size_t> known_levels;
    /// sum over points of index 2k of the class restriction, as coefficient of x^degree.
    std::vector<Rational> level_sums;
};

struct PipelineCertificate {
    std::size_t n = 0;
    CountVector counts;
    LevelDeduction generator_sums;  // a_j
    LevelDeduction square_sums;     // a_j^2
    std::vector<std::vector<Integer>> value_multisets;  // per level
    std::vector<LevelDeduction> lower_class_sums;       // b_F per level k_F
    std::vector<LevelDeduction> product_sums;           // a_J per |J|
    /// Distinct levels with known sums in the a_j * b_F comparison, per k_F.
    std::vector<std::size_t> comparison_levels;
    RestrictionTable table;
    bool table_supplied = false;
    std::map<std::string, std::size_t> point_counts;
    Bijection bijection;
    /// The table equals the model's alpha restrictions through the bijection.
    bool model_agreement = false;
};

/// Runs the full deduction on semifree data with binomial counts. When no
/// table is supplied, the forced table is built by matching points of each
/// level (in id order) with subsets of that size (in subset order).
///
/// Throws NotSemifree, CountMismatch and the sub-step errors.
PipelineCertificate run_pipeline(const FixedPointData& data, const std::optional<RestrictionTable>& table = std::nullopt);

}  // namespace eqfix
