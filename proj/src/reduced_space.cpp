#include "eqfix/reduced_space.hpp"

#include "eqfix/error.hpp"
#include "eqfix/linear_algebra.hpp"

#include <algorithm>
#include <set>

namespace eqfix {

std::vector<std::string> IdealPresentation::ring_relations() const {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i) + "*y - a" + std::to_string(i) + "^2");
    return out;
}

std::vector<CubeClass> IdealPresentation::generators() const {
    std::vector<CubeClass> out;
    for (const auto& [J, g] : positive_generators) out.push_back(g);
    for (const auto& [J, g] : negative_generators) out.push_back(g);
    return out;
}

IdealPresentation kernel_generators(std::size_t n, const std::map<Subset, Rational>& moments) {
    IdealPresentation pres;
    pres.n = n;
    for (Subset J : all_subsets(n)) {
        const auto it = moments.find(J);
        if (it == moments.end()) throw Error(ErrorKind::MissingMomentValue, "no moment value for " + J.to_string());
        if (it->second == 0)
            throw Error(ErrorKind::ZeroIsCritical, "mu(" + J.to_string() + ") = 0; 0 is not a regular value");
        if (it->second > 0) pres.positive_generators.emplace_back(J, alpha_class(J));
        else pres.negative_generators.emplace_back(J, beta_class(J, n));
    }
    return pres;
}

IdealPresentation kernel_generators(const ModelData& model) {
    std::map<Subset, Rational> moments;
    for (Subset J : all_subsets(model.n)) moments.emplace(J, model.moment(J));
    return kernel_generators(model.n, moments);
}

namespace {

std::vector<CubeMonomial> monomials_of_degree(std::size_t n, std::size_t d) {
    std::vector<CubeMonomial> out;
    for (Subset S : all_subsets(n)) {
        if (S.size() <= d) out.push_back(CubeMonomial{S, static_cast<unsigned>(d - S.size())});
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Coefficient rows spanning the degree-d slice of the ideal: every
/// generator times every monomial of complementary degree.
struct Slice {
    std::vector<CubeMonomial> monomials;
    std::vector<std::vector<Integer>> rows;
};

Slice build_slice(const IdealPresentation& pres, std::size_t d) {
    Slice s;
    s.monomials = monomials_of_degree(pres.n, d);
    std::map<CubeMonomial, std::size_t> column;
    for (std::size_t c = 0; c < s.monomials.size(); ++c) column.emplace(s.monomials[c], c);

    std::set<std::vector<Integer>> seen;
    for (const auto& g : pres.generators()) {
        const auto gd = g.homogeneous_degree();
        if (!gd || *gd > d) continue;
        for (const auto& m : monomials_of_degree(pres.n, d - *gd)) {
            const CubeClass product = g * CubeClass::monomial(m);
            std::vector<Integer> row(s.monomials.size(), Integer(0));
            for (const auto& [mono, c] : product.terms()) row[column.at(mono)] = c;
            if (std::all_of(row.begin(), row.end(), [](const Integer& v) { return v == 0; })) continue;
            if (seen.insert(row).second) s.rows.push_back(std::move(row));
        }
    }
    return s;
}

}  // namespace

std::vector<std::size_t> GradedQuotient::ranks() const {
    std::vector<std::size_t> out;
    for (const auto& p : pieces) out.push_back(p.rank);
    return out;
}

std::size_t GradedQuotient::euler_characteristic() const {
    std::size_t total = 0;
    for (const auto& p : pieces) total += p.rank;
    return total;
}

bool GradedQuotient::torsion_free() const {
    return std::all_of(pieces.begin(), pieces.end(), [](const QuotientPiece& p) { return p.torsion.empty(); });
}

GradedQuotient graded_quotient(const IdealPresentation& pres, std::size_t max_degree) {
    GradedQuotient q;
    q.n = pres.n;
    for (std::size_t d = 0; 2 * d <= max_degree; ++d) {
        Slice s = build_slice(pres, d);
        IntMatrix m(s.rows.size(), s.monomials.size());
        for (std::size_t r = 0; r < s.rows.size(); ++r)
            for (std::size_t c = 0; c < s.monomials.size(); ++c) m(r, c) = s.rows[r][c];
        const SmithForm snf = smith_normal_form(std::move(m));
        QuotientPiece piece;
        piece.degree = d;
        piece.relation_rows = s.rows.size();
        piece.rank = s.monomials.size() - snf.rank;
        for (const auto& f : snf.invariant_factors) {
            if (f != 1) piece.torsion.push_back(f);
        }
        piece.monomials = std::move(s.monomials);
        q.pieces.push_back(std::move(piece));
    }
    return q;
}

std::size_t betti_by_counting(const FixedPointData& data, std::size_t i) {
    validate(data);
    if (!data.semifree()) throw Error(ErrorKind::NotSemifree, "Betti counting needs semifree data");
    const auto split = split_by_moment_sign(data);
    std::size_t low = 0, high = 0;
    for (const auto& p : split.negative) {
        const auto k = p.negative_count();
        if (k <= i) ++low;
        if (data.n - k <= i) ++high;
    }
    if (high > low) throw Error(ErrorKind::Inconsistent, "negative Betti count at degree " + std::to_string(2 * i));
    return low - high;
}

bool ReducedClass::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

std::string ReducedClass::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coefficients[i] == 0) continue;
        if (!out.empty()) out += coefficients[i] < 0 ? " - " : " + ";
        else if (coefficients[i] < 0) out += "-";
        const Rational magnitude = abs(coefficients[i]);
        const bool is_one = basis[i].degree() == 0;
        if (magnitude != 1 || is_one) out += eqfix::to_string(magnitude) + (is_one ? "" : "*");
        if (!is_one) out += basis[i].to_string();
    }
    return out.empty() ? "0" : out;
}

ReducedClass reduce_class(const IdealPresentation& pres, const CubeClass& cls, std::size_t degree) {
    if (!cls.is_zero() && cls.homogeneous_degree() != degree)
        throw Error(ErrorKind::InvalidArgument, "class is not homogeneous of degree " + std::to_string(degree));
    Slice s = build_slice(pres, degree);
    // Columns in descending monomial order so pivots land on the largest
    // monomials and the smallest ones stay free.
    std::vector<CubeMonomial> columns(s.monomials.rbegin(), s.monomials.rend());
    const std::size_t cols = columns.size();
    RationalMatrix m;
    m.reserve(s.rows.size());
    for (const auto& row : s.rows) {
        std::vector<Rational> r(cols);
        for (std::size_t c = 0; c < cols; ++c) r[c] = Rational(row[cols - 1 - c]);
        m.push_back(std::move(r));
    }
    const auto pivots = rref(m, cols);

    std::vector<Rational> v(cols, Rational(0));
    for (const auto& [mono, c] : cls.terms()) {
        const auto it = std::find(columns.begin(), columns.end(), mono);
        if (it == columns.end()) throw Error(ErrorKind::InvalidArgument, "monomial " + mono.to_string() + " outside the ring");
        v[static_cast<std::size_t>(it - columns.begin())] = Rational(c);
    }
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Rational f = v[pivots[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < cols; ++c) {
            if (m[r][c] != 0) v[c] -= f * m[r][c];
        }
    }

    std::vector<bool> pivot(cols, false);
    for (auto p : pivots) pivot[p] = true;
    ReducedClass out;
    out.degree = degree;
    for (std::size_t c = cols; c-- > 0;) {
        if (pivot[c]) continue;
        out.basis.push_back(columns[c]);
        out.coefficients.push_back(v[c]);
    }
    return out;
}

std::vector<ReducedClass> reduced_chern_series(const IdealPresentation& pres, std::size_t up_to) {
    const auto series = equivariant_chern_series(pres.n, std::min(up_to, pres.n));
    std::vector<ReducedClass> out;
    for (std::size_t i = 0; i < series.size(); ++i) out.push_back(reduce_class(pres, series[i], i + 1));
    return out;
}

PoincareReport poincare_check(const GradedQuotient& q, std::size_t n) {
    PoincareReport report;
    if (n == 0) {
        report.passed = false;
        report.problems.push_back("n must be at least 1");
        return report;
    }
    const std::size_t top = n - 1;
    if (q.pieces.size() < top + 1) {
        report.passed = false;
        report.problems.push_back("quotient has " + std::to_string(q.pieces.size()) +
                                  " graded pieces, need degrees through " + std::to_string(2 * top));
        return report;
    }
    for (std::size_t i = 0; i <= top; ++i) {
        if (q.pieces[i].rank != q.pieces[top - i].rank) {
            report.passed = false;
            report.problems.push_back("rank in degree " + std::to_string(2 * i) + " is " +
                                      std::to_string(q.pieces[i].rank) + " but in degree " +
                                      std::to_string(2 * (top - i)) + " it is " + std::to_string(q.pieces[top - i].rank));
        }
    }
    for (const auto& p : q.pieces) {
        if (!p.torsion.empty()) {
            report.passed = false;
            report.problems.push_back("torsion in degree " + std::to_string(2 * p.degree));
        }
    }
    return report;
}

}  // namespace eqfix
