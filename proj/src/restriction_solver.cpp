#include "eqfix/restriction_solver.hpp"

#include "eqfix/error.hpp"
#include "eqfix/linear_algebra.hpp"
#include "eqfix/localization.hpp"

#include <algorithm>
#include <set>

namespace eqfix {

std::size_t RestrictionTable::point_position(const std::string& id) const {
    const auto it = std::find(point_ids.begin(), point_ids.end(), id);
    if (it == point_ids.end()) throw Error(ErrorKind::InvalidArgument, "table has no point '" + id + "'");
    return static_cast<std::size_t>(it - point_ids.begin());
}

const UniPoly& RestrictionTable::at(int j, const std::string& id) const {
    if (j < 1 || static_cast<std::size_t>(j) > n) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    return entries[static_cast<std::size_t>(j - 1)][point_position(id)];
}

UniPoly& RestrictionTable::at(int j, const std::string& id) {
    if (j < 1 || static_cast<std::size_t>(j) > n) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    return entries[static_cast<std::size_t>(j - 1)][point_position(id)];
}

RestrictionTable make_table(const FixedPointData& data) {
    RestrictionTable t;
    t.n = data.n;
    for (const auto& p : data.sorted_points()) {
        t.point_ids.push_back(p.id);
        t.levels.push_back(p.negative_count());
    }
    t.entries.assign(data.n, std::vector<UniPoly>(t.point_ids.size()));
    return t;
}

RestrictionTable model_table(std::size_t n) {
    RestrictionTable t = make_table(hypercube_data(n));
    for (std::size_t p = 0; p < t.point_ids.size(); ++p) {
        const Subset J = Subset::parse(t.point_ids[p]);
        for (int j = 1; j <= static_cast<int>(n); ++j)
            t.entries[static_cast<std::size_t>(j - 1)][p] = restrict_class(alpha_class(Subset::from_elements({j})), J);
    }
    return t;
}

UniPoly forced_level_sum(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) return UniPoly();
    return UniPoly::monomial(Rational(binomial(n - 1, k - 1)), 1);
}

UniPoly forced_level_square_sum(std::size_t n, std::size_t k) {
    if (k == 0 || k > n) return UniPoly();
    return UniPoly::monomial(Rational(binomial(n - 1, k - 1)), 2);
}

std::vector<Integer> solve_value_multiset(const Integer& sum, bool square_sum_matches, std::size_t count) {
    // sum c_i (c_i - 1) = 0 with c_i (c_i - 1) >= 0 on the integers forces c_i in {0, 1}.
    if (!square_sum_matches)
        throw Error(ErrorKind::Underdetermined, "values are only forced when the square sum equals the sum");
    if (sum < 0 || sum > Integer(static_cast<unsigned long>(count))) {
        throw Error(ErrorKind::NoIntegerSolution,
                    "sum " + sum.get_str() + " is outside [0, " + std::to_string(count) + "]");
    }
    const auto ones = sum.get_ui();
    std::vector<Integer> out(count, Integer(0));
    std::fill_n(out.begin(), ones, Integer(1));
    return out;
}

namespace {

const UniPoly& x_poly() {
    static const UniPoly x = UniPoly::x();
    return x;
}

bool is_zero_or_x(const UniPoly& p) { return p.is_zero() || p == x_poly(); }

Subset point_subset(const RestrictionTable& table, std::size_t p) {
    std::vector<int> members;
    for (std::size_t j = 0; j < table.n; ++j) {
        const UniPoly& e = table.entries[j][p];
        if (!is_zero_or_x(e)) {
            throw Error(ErrorKind::InvalidArgument, "a_" + std::to_string(j + 1) + " at '" + table.point_ids[p] +
                                                        "' is " + e.to_string() + ", expected 0 or x");
        }
        if (!e.is_zero()) members.push_back(static_cast<int>(j + 1));
    }
    return Subset::from_elements(members);
}

}  // namespace

std::size_t per_point_count(const RestrictionTable& table, const std::string& id) {
    const auto p = table.point_position(id);
    const std::size_t count = point_subset(table, p).size();
    if (count != table.levels[p]) {
        throw Error(ErrorKind::WrongCount, "point '" + id + "' has " + std::to_string(count) +
                                               " generators restricting to x, expected k_F = " +
                                               std::to_string(table.levels[p]));
    }
    return count;
}

Bijection assemble_bijection(const RestrictionTable& table) {
    Bijection out;
    std::map<Subset, std::string> used;
    for (std::size_t p = 0; p < table.point_ids.size(); ++p) {
        const std::string& id = table.point_ids[p];
        per_point_count(table, id);
        const Subset J = point_subset(table, p);
        if (const auto it = used.find(J); it != used.end()) {
            throw Error(ErrorKind::NotInjective,
                        "points '" + it->second + "' and '" + id + "' both map to " + J.to_string());
        }
        used.emplace(J, id);
        out.emplace(id, J);
    }
    for (Subset J : all_subsets(table.n)) {
        if (!used.contains(J)) throw Error(ErrorKind::NotSurjective, "no fixed point maps to " + J.to_string());
    }
    return out;
}

namespace {

Rational sign(std::size_t k) { return k % 2 ? Rational(-1) : Rational(1); }

/// Completes D_k = (-1)^k * (level-k sum) from the given level sums and
/// converts back to level sums.
LevelDeduction deduce(std::string label, std::size_t n, std::size_t degree,
                      const std::map<std::size_t, Rational>& known_sums) {
    std::map<std::size_t, Rational> known;
    for (const auto& [k, s] : known_sums) known.emplace(k, sign(k) * s);
    const auto D = vandermonde_complete(n, degree, known);
    LevelDeduction out;
    out.label = std::move(label);
    out.class_degree = degree;
    for (const auto& [k, s] : known_sums) out.known_levels.push_back(k);
    for (std::size_t k = 0; k <= n; ++k) out.level_sums.push_back(sign(k) * D[k]);
    return out;
}

void require(bool condition, const std::string& what) {
    if (!condition) throw Error(ErrorKind::Inconsistent, what);
}

RestrictionTable forced_table(const FixedPointData& data) {
    RestrictionTable t = make_table(data);
    const auto subsets = all_subsets(data.n);
    // Points and subsets are both sorted by level first, so a linear walk
    // pairs them level by level.
    for (std::size_t p = 0; p < t.point_ids.size(); ++p) {
        const Subset J = subsets[p];
        for (int j : J.elements()) t.entries[static_cast<std::size_t>(j - 1)][p] = UniPoly::x();
    }
    return t;
}

void check_table_shape(const RestrictionTable& table, const FixedPointData& data) {
    if (table.n != data.n) throw Error(ErrorKind::InvalidArgument, "restriction table has the wrong n");
    if (table.entries.size() != data.n) throw Error(ErrorKind::InvalidArgument, "restriction table needs n rows");
    if (table.point_ids.size() != data.points.size() || table.levels.size() != data.points.size())
        throw Error(ErrorKind::InvalidArgument, "restriction table does not cover the fixed points");
    for (const auto& row : table.entries) {
        if (row.size() != data.points.size()) throw Error(ErrorKind::InvalidArgument, "ragged restriction table");
    }
    for (std::size_t p = 0; p < table.point_ids.size(); ++p) {
        const auto& point = data.point(table.point_ids[p]);
        if (table.levels[p] != point.negative_count())
            throw Error(ErrorKind::InvalidArgument, "table level of '" + point.id + "' disagrees with its weights");
    }
}

}  // namespace

PipelineCertificate run_pipeline(const FixedPointData& data, const std::optional<RestrictionTable>& table) {
    validate(data);
    if (!data.semifree()) throw Error(ErrorKind::NotSemifree, "the identification needs semifree data");
    const std::size_t n = data.n;
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");

    PipelineCertificate cert;
    cert.n = n;
    cert.counts = counts(data);
    const CountVector expected = predict_counts(n, Integer(1));
    if (!(cert.counts == expected)) {
        throw Error(ErrorKind::CountMismatch,
                    "counts (" + cert.counts.to_string() + ") differ from (" + expected.to_string() + ")");
    }

    // a_j: zero at the index-0 point, x summed over the index-2 points.
    cert.generator_sums = deduce("a_j", n, 1, {{0, Rational(0)}, {1, Rational(1)}});
    // a_j^2: additionally x^2 at the single top point.
    cert.square_sums = deduce("a_j^2", n, 2, {{0, Rational(0)}, {1, Rational(1)}, {n, Rational(1)}});
    for (std::size_t k = 0; k <= n; ++k) {
        require(UniPoly::monomial(cert.generator_sums.level_sums[k], 1) == forced_level_sum(n, k),
                "deduced a_j level sum at k=" + std::to_string(k) + " disagrees with C(n-1,k-1)");
        require(UniPoly::monomial(cert.square_sums.level_sums[k], 2) == forced_level_square_sum(n, k),
                "deduced a_j^2 level sum at k=" + std::to_string(k) + " disagrees with C(n-1,k-1)");
        const Rational& s = cert.generator_sums.level_sums[k];
        require(is_integer(s), "non-integral level sum");
        cert.value_multisets.push_back(solve_value_multiset(
            s.get_num(), cert.square_sums.level_sums[k] == s, cert.counts.N[k].get_ui()));
    }

    // b_F for a point of level k: x^(n-k) at F, zero on every other point of
    // level >= k. Its sum over the index-2 points must be k x^(n-k).
    for (std::size_t k = 0; k <= n; ++k) {
        std::map<std::size_t, Rational> known{{k, Rational(1)}};
        for (std::size_t above = k + 1; above <= n; ++above) known.emplace(above, Rational(0));
        auto d = deduce("b_F(k=" + std::to_string(k) + ")", n, n - k, known);
        require(d.level_sums[1] == Rational(static_cast<unsigned long>(k)),
                "b_F sum over index-2 points is not k_F at k=" + std::to_string(k));
        cert.lower_class_sums.push_back(std::move(d));

        // a_j * b_F is known at level 0, at every level above k_F and at k_F.
        std::set<std::size_t> levels{0, k};
        for (std::size_t above = k + 1; above <= n; ++above) levels.insert(above);
        const std::size_t degree = n - k + 1;
        require(levels.size() >= std::min(degree, n) + 1,
                "too few known levels for the a_j * b_F comparison at k=" + std::to_string(k));
        cert.comparison_levels.push_back(levels.size());
    }

    // a_J = prod_{j in J} a_j vanishes below level |J| and is x^|J| at the top.
    for (std::size_t s = 1; s <= n; ++s) {
        std::map<std::size_t, Rational> known;
        for (std::size_t below = 0; below < s; ++below) known.emplace(below, Rational(0));
        known.emplace(n, Rational(1));
        auto d = deduce("a_J(|J|=" + std::to_string(s) + ")", n, s, known);
        require(d.level_sums[s] == 1, "a_J is not supported on exactly one point of level |J|");
        cert.product_sums.push_back(std::move(d));
    }

    if (table) {
        check_table_shape(*table, data);
        cert.table = *table;
        cert.table_supplied = true;
    } else {
        cert.table = forced_table(data);
    }
    const RestrictionTable& t = cert.table;

    // Normalization at the bottom levels and the forced sums, checked on the table itself.
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<UniPoly> sums(n + 1), squares(n + 1);
        for (std::size_t p = 0; p < t.point_ids.size(); ++p) {
            const UniPoly& e = t.entries[j][p];
            if (t.levels[p] == 0)
                require(e.is_zero(), "a_" + std::to_string(j + 1) + " does not vanish at the index-0 point");
            sums[t.levels[p]] += e;
            squares[t.levels[p]] += e * e;
        }
        for (std::size_t k = 0; k <= n; ++k) {
            require(sums[k] == forced_level_sum(n, k),
                    "a_" + std::to_string(j + 1) + " level-" + std::to_string(k) + " sum is " + sums[k].to_string());
            require(squares[k] == forced_level_square_sum(n, k),
                    "a_" + std::to_string(j + 1) + " level-" + std::to_string(k) + " square sum is " +
                        squares[k].to_string());
        }
    }
    for (const auto& id : t.point_ids) cert.point_counts.emplace(id, per_point_count(t, id));
    cert.bijection = assemble_bijection(t);

    // Products a_J summed over level |J| give x^|J|.
    for (Subset J : all_subsets(n)) {
        UniPoly total;
        for (std::size_t p = 0; p < t.point_ids.size(); ++p) {
            if (t.levels[p] != J.size()) continue;
            UniPoly prod = UniPoly::constant(Rational(1));
            for (int j : J.elements()) prod *= t.entries[static_cast<std::size_t>(j - 1)][p];
            total += prod;
        }
        require(total == UniPoly::monomial(Rational(1), J.size()),
                "product class over " + J.to_string() + " does not sum to x^|J|");
    }

    cert.model_agreement = true;
    for (std::size_t p = 0; p < t.point_ids.size(); ++p) {
        const Subset J = cert.bijection.at(t.point_ids[p]);
        for (int j = 1; j <= static_cast<int>(n); ++j) {
            if (t.entries[static_cast<std::size_t>(j - 1)][p] !=
                restrict_class(alpha_class(Subset::from_elements({j})), J))
                cert.model_agreement = false;
        }
    }
    return cert;
}

}  // namespace eqfix
