#include "eqfix/localization.hpp"

#include "eqfix/error.hpp"
#include "eqfix/linear_algebra.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace eqfix {

RestrictionAssignment::RestrictionAssignment(std::map<std::string, UniPoly> values) : values_(std::move(values)) {
    for (const auto& [id, poly] : values_) {
        if (poly.is_zero()) continue;
        if (!poly.is_monomial())
            throw Error(ErrorKind::InvalidArgument, "restriction at '" + id + "' is not homogeneous: " + poly.to_string());
        const auto d = static_cast<std::size_t>(poly.degree());
        if (degree_ && *degree_ != d)
            throw Error(ErrorKind::InvalidArgument, "restrictions have mixed degrees (" + std::to_string(*degree_) +
                                                        " and " + std::to_string(d) + ")");
        degree_ = d;
    }
}

const UniPoly& RestrictionAssignment::at(const std::string& id) const {
    const auto it = values_.find(id);
    if (it == values_.end()) throw Error(ErrorKind::InvalidArgument, "no restriction given at '" + id + "'");
    return it->second;
}

namespace {

template <typename Op>
RestrictionAssignment combine(const RestrictionAssignment& a, const RestrictionAssignment& b, Op op) {
    if (a.values().size() != b.values().size())
        throw Error(ErrorKind::InvalidArgument, "restriction assignments over different fixed sets");
    std::map<std::string, UniPoly> out;
    for (const auto& [id, poly] : a.values()) out.emplace(id, op(poly, b.at(id)));
    return RestrictionAssignment(std::move(out));
}

}  // namespace

RestrictionAssignment operator+(const RestrictionAssignment& a, const RestrictionAssignment& b) {
    return combine(a, b, std::plus<UniPoly>{});
}

RestrictionAssignment operator*(const RestrictionAssignment& a, const RestrictionAssignment& b) {
    return combine(a, b, std::multiplies<UniPoly>{});
}

RestrictionAssignment operator*(const Rational& s, const RestrictionAssignment& a) {
    std::map<std::string, UniPoly> out;
    for (const auto& [id, poly] : a.values()) out.emplace(id, poly * s);
    return RestrictionAssignment(std::move(out));
}

RestrictionAssignment RestrictionAssignment::times_x() const {
    std::map<std::string, UniPoly> out;
    for (const auto& [id, poly] : values_) out.emplace(id, poly * UniPoly::x());
    return RestrictionAssignment(std::move(out));
}

RestrictionAssignment RestrictionAssignment::power(unsigned exponent) const {
    std::map<std::string, UniPoly> out;
    for (const auto& [id, poly] : values_) out.emplace(id, pow(poly, exponent));
    return RestrictionAssignment(std::move(out));
}

UniPoly euler_class(std::span<const Weight> weights) {
    Integer product(1);
    for (Weight w : weights) {
        if (w == 0) throw Error(ErrorKind::ZeroWeight, "Euler class of a representation with a zero weight");
        product *= static_cast<long>(w);
    }
    return UniPoly::monomial(Rational(product), weights.size());
}

namespace {

/// sigma_0..sigma_{up_to} of the weights.
std::vector<Integer> elementary_symmetric(std::span<const Weight> weights, std::size_t up_to) {
    std::vector<Integer> e(up_to + 1, Integer(0));
    e[0] = 1;
    std::size_t seen = 0;
    for (Weight w : weights) {
        ++seen;
        for (std::size_t i = std::min(seen, up_to); i >= 1; --i) e[i] += e[i - 1] * static_cast<long>(w);
    }
    return e;
}

}  // namespace

std::vector<UniPoly> rep_chern_classes(std::span<const Weight> weights, std::size_t up_to) {
    const auto e = elementary_symmetric(weights, up_to);
    std::vector<UniPoly> out;
    out.reserve(up_to);
    for (std::size_t i = 1; i <= up_to; ++i) out.push_back(UniPoly::monomial(Rational(e[i]), i));
    return out;
}

RatFunc integrate(const FixedPointData& data, const RestrictionAssignment& alpha) {
    RatFunc total;
    for (const auto& p : data.points) total += RatFunc(alpha.at(p.id), euler_class(p.weights));
    return total;
}

RestrictionAssignment gamma_restrictions(const FixedPointData& data) {
    if (!data.semifree()) throw Error(ErrorKind::NotSemifree, "gamma closed form needs all weights +-1");
    std::map<std::string, UniPoly> out;
    for (const auto& p : data.points) out.emplace(p.id, UniPoly::monomial(Rational(p.negative_count()), 1));
    return RestrictionAssignment(std::move(out));
}

RestrictionAssignment unit_assignment(const FixedPointData& data) {
    std::map<std::string, UniPoly> out;
    for (const auto& p : data.points) out.emplace(p.id, UniPoly::constant(Rational(1)));
    return RestrictionAssignment(std::move(out));
}

RestrictionAssignment euler_assignment(const FixedPointData& data) {
    std::map<std::string, UniPoly> out;
    for (const auto& p : data.points) out.emplace(p.id, euler_class(p.weights));
    return RestrictionAssignment(std::move(out));
}

RestrictionAssignment chern_monomial_assignment(const FixedPointData& data, std::span<const unsigned> exponents) {
    std::map<std::string, UniPoly> out;
    for (const auto& p : data.points) {
        const auto classes = rep_chern_classes(p.weights, exponents.size());
        UniPoly value = UniPoly::constant(Rational(1));
        for (std::size_t i = 0; i < exponents.size(); ++i) value *= pow(classes[i], exponents[i]);
        out.emplace(p.id, std::move(value));
    }
    return RestrictionAssignment(std::move(out));
}

MomentEquationReport verify_moment_equations(const FixedPointData& data) {
    if (!data.semifree()) throw Error(ErrorKind::NotSemifree, "moment equations apply to semifree data");
    const auto N = counts(data).N;
    MomentEquationReport report;
    for (std::size_t l = 0; l < data.n; ++l) {
        Integer sum(0);
        for (std::size_t k = 0; k <= data.n; ++k) {
            Integer term = N[k] * ipow(Integer(static_cast<unsigned long>(k)), l);
            if (k % 2) sum -= term;
            else sum += term;
        }
        if (sum != 0) report.passed = false;
        report.sums.emplace_back(l, sum);
    }
    return report;
}

CountVector predict_counts(std::size_t n, const Integer& N0) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "predict_counts needs n >= 1");
    const auto kernel = vandermonde_kernel(n);
    CountVector out;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational value = kernel[k] * Rational(N0);
        if (k % 2) value = -value;
        if (!is_integer(value)) throw Error(ErrorKind::Inconsistent, "non-integral predicted count");
        out.N.push_back(value.get_num());
    }
    return out;
}

std::vector<std::vector<unsigned>> chern_monomials(std::size_t n, std::size_t max_degree) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> e(n, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t budget) {
        if (i == n) {
            out.push_back(e);
            return;
        }
        const std::size_t weight = i + 1;
        for (std::size_t k = 0; k * weight <= budget; ++k) {
            e[i] = static_cast<unsigned>(k);
            rec(i + 1, budget - k * weight);
        }
        e[i] = 0;
    };
    rec(0, max_degree);
    auto degree = [](const std::vector<unsigned>& v) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < v.size(); ++i) d += (i + 1) * v[i];
        return d;
    };
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        const auto da = degree(a), db = degree(b);
        return da != db ? da < db : a > b;
    });
    return out;
}

std::string MonomialCheck::monomial_name() const {
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "c" + std::to_string(i + 1);
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

bool ConsistencyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const MonomialCheck& c) { return c.passed; });
}

std::vector<MonomialCheck> ConsistencyReport::failures() const {
    std::vector<MonomialCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const MonomialCheck& c) { return !c.passed; });
    return out;
}

namespace {

// Localization data of one fixed point reduced to integers: the integral of
// a Chern monomial of weighted degree d is (sum_F prod sigma_i^{e_i} / prod w)
// times x^{d - n}.
struct PointSymmetric {
    std::vector<Integer> sigma;  // sigma_0..sigma_n
    Integer euler;
};

PointSymmetric point_symmetric(std::span<const Weight> weights) {
    PointSymmetric out{elementary_symmetric(weights, weights.size()), Integer(1)};
    for (Weight w : weights) {
        if (w == 0) throw Error(ErrorKind::ZeroWeight, "zero weight");
        out.euler *= static_cast<long>(w);
    }
    return out;
}

Rational monomial_term(const PointSymmetric& p, std::span<const unsigned> exponents) {
    Integer num(1);
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i]) num *= ipow(p.sigma[i + 1], exponents[i]);
    }
    return make_rational(num, p.euler);
}

std::size_t weighted_degree(std::span<const unsigned> exponents) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) d += (i + 1) * exponents[i];
    return d;
}

bool coefficient_passes(const Rational& coefficient, std::size_t degree, std::size_t n) {
    return degree < n ? coefficient == 0 : is_integer(coefficient);
}

RatFunc scaled_power(const Rational& coefficient, std::size_t degree, std::size_t n) {
    if (degree >= n) return RatFunc(UniPoly::monomial(coefficient, degree - n));
    return RatFunc(UniPoly::constant(coefficient), UniPoly::monomial(Rational(1), n - degree));
}

}  // namespace

ConsistencyReport consistency_check(const FixedPointData& data, std::size_t max_degree) {
    validate(data);
    std::vector<PointSymmetric> points;
    points.reserve(data.points.size());
    for (const auto& p : data.points) points.push_back(point_symmetric(p.weights));

    ConsistencyReport report{max_degree, {}};
    for (auto& e : chern_monomials(data.n, max_degree)) {
        Rational coefficient(0);
        for (const auto& p : points) coefficient += monomial_term(p, e);
        const auto d = weighted_degree(e);
        MonomialCheck check;
        check.degree = d;
        check.integral = scaled_power(coefficient, d, data.n);
        check.passed = coefficient_passes(coefficient, d, data.n);
        check.exponents = std::move(e);
        report.checks.push_back(std::move(check));
    }
    return report;
}

FixedPointData configuration_data(const WeightConfiguration& configuration) {
    FixedPointData data;
    data.n = configuration.empty() ? 0 : configuration.front().size();
    for (std::size_t i = 0; i < configuration.size(); ++i)
        data.points.push_back(FixedPoint{"P" + std::to_string(i), configuration[i], std::nullopt});
    return data;
}

SearchResult search_candidates(std::size_t n, std::size_t num_points, std::size_t weight_bound,
                               std::size_t max_degree, const SearchOptions& options) {
    if (n == 0 || num_points == 0 || weight_bound == 0)
        throw Error(ErrorKind::InvalidArgument, "search needs n, points and bound all >= 1");

    const Integer multisets = binomial(2 * weight_bound + n - 1, n);
    if (multisets > Integer(static_cast<unsigned long>(options.max_candidates)))
        throw Error(ErrorKind::SearchSpaceTooLarge, "too many weight multisets per point: " + multisets.get_str());
    const Integer space = binomial(multisets.get_ui() + num_points - 1, num_points);
    if (space > Integer(static_cast<unsigned long>(options.max_candidates))) {
        throw Error(ErrorKind::SearchSpaceTooLarge, space.get_str() + " configurations exceed the cap of " +
                                                         std::to_string(options.max_candidates));
    }

    std::vector<Weight> values;
    for (auto w = -static_cast<Weight>(weight_bound); w <= static_cast<Weight>(weight_bound); ++w) {
        if (w != 0) values.push_back(w);
    }

    // Sorted weight vectors in lexicographic order.
    std::vector<std::vector<Weight>> point_types;
    {
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            std::vector<Weight> w(n);
            for (std::size_t i = 0; i < n; ++i) w[i] = values[idx[i]];
            point_types.push_back(std::move(w));
            std::size_t pos = n;
            while (pos > 0 && idx[pos - 1] == values.size() - 1) --pos;
            if (pos == 0) break;
            const std::size_t next = idx[pos - 1] + 1;
            for (std::size_t i = pos - 1; i < n; ++i) idx[i] = next;
        }
    }

    auto monomials = chern_monomials(n, max_degree);
    if (!options.include_degree_zero) {
        monomials.erase(std::remove_if(monomials.begin(), monomials.end(),
                                       [](const auto& e) { return weighted_degree(e) == 0; }),
                        monomials.end());
    }

    // terms[t][m]: contribution of one point of type t to monomial m.
    std::vector<std::vector<Rational>> terms(point_types.size());
    for (std::size_t t = 0; t < point_types.size(); ++t) {
        const auto ps = point_symmetric(point_types[t]);
        terms[t].reserve(monomials.size());
        for (const auto& e : monomials) terms[t].push_back(monomial_term(ps, e));
    }
    std::vector<std::size_t> degrees;
    for (const auto& e : monomials) degrees.push_back(weighted_degree(e));

    std::vector<std::vector<std::size_t>> candidates;
    {
        std::vector<std::size_t> idx(num_points, 0);
        for (;;) {
            candidates.push_back(idx);
            std::size_t pos = num_points;
            while (pos > 0 && idx[pos - 1] == point_types.size() - 1) --pos;
            if (pos == 0) break;
            const std::size_t next = idx[pos - 1] + 1;
            for (std::size_t i = pos - 1; i < num_points; ++i) idx[i] = next;
        }
    }

    std::vector<char> passes(candidates.size(), 0);
    auto evaluate = [&](std::size_t begin, std::size_t end) {
        Rational sum;
        for (std::size_t c = begin; c < end; ++c) {
            bool ok = true;
            for (std::size_t m = 0; m < monomials.size() && ok; ++m) {
                sum = 0;
                for (auto t : candidates[c]) sum += terms[t][m];
                ok = coefficient_passes(sum, degrees[m], n);
            }
            passes[c] = ok ? 1 : 0;
        }
    };

    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1 || candidates.size() < 2 * threads) {
        evaluate(0, candidates.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (candidates.size() + threads - 1) / threads;
        for (unsigned i = 0; i < threads; ++i) {
            const std::size_t begin = i * chunk;
            const std::size_t end = std::min(candidates.size(), begin + chunk);
            if (begin < end) pool.emplace_back(evaluate, begin, end);
        }
    }

    SearchResult result;
    result.examined = candidates.size();
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!passes[c]) continue;
        WeightConfiguration config;
        for (auto t : candidates[c]) config.push_back(point_types[t]);
        result.passing.push_back(std::move(config));
    }
    return result;
}

}  // namespace eqfix
