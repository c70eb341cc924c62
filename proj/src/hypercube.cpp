#include "eqfix/hypercube.hpp"

#include "eqfix/error.hpp"
#include "eqfix/linear_algebra.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace eqfix {

Subset Subset::from_elements(const std::vector<int>& elements) {
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > 31) throw Error(ErrorKind::InvalidArgument, "subset element out of range: " + std::to_string(e));
        bits |= 1U << (e - 1);
    }
    return Subset(bits);
}

Subset Subset::full(std::size_t n) {
    if (n > 31) throw Error(ErrorKind::InvalidArgument, "n > 31 unsupported");
    return Subset(n == 0 ? 0U : (0xFFFFFFFFU >> (32 - n)));
}

std::size_t Subset::size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
        if ((bits_ >> i) & 1U) out.push_back(i + 1);
    }
    return out;
}

std::string Subset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

Subset Subset::parse(const std::string& text) {
    std::string body;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) body += c;
    }
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw Error(ErrorKind::Parse, "subset must look like {1,2}: '" + text + "'");
    body = body.substr(1, body.size() - 2);
    std::vector<int> elements;
    if (body.empty()) return Subset();
    std::size_t pos = 0;
    while (true) {
        const auto comma = body.find(',', pos);
        const std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const bool digits = !item.empty() && item.size() <= 2 &&
                            std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (!digits || std::stoi(item) < 1 || std::stoi(item) > 31)
            throw Error(ErrorKind::Parse, "bad subset element in '" + text + "'");
        elements.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return from_elements(elements);
}

std::strong_ordering operator<=>(Subset a, Subset b) noexcept {
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    const auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa <=> sb;
    // Equal size: the set holding the smallest element of the symmetric
    // difference comes first lexicographically.
    const std::uint32_t diff = a.bits_ ^ b.bits_;
    const std::uint32_t lowest = diff & (~diff + 1U);
    return (a.bits_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Subset> all_subsets(std::size_t n) {
    if (n > 31) throw Error(ErrorKind::InvalidArgument, "n > 31 unsupported");
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) out.emplace_back(static_cast<std::uint32_t>(bits));
    std::sort(out.begin(), out.end());
    return out;
}

std::string CubeMonomial::to_string() const {
    std::string out;
    for (int e : support.elements()) {
        if (!out.empty()) out += "*";
        out += "a" + std::to_string(e);
    }
    if (y_power > 0) {
        if (!out.empty()) out += "*";
        out += "y";
        if (y_power > 1) out += "^" + std::to_string(y_power);
    }
    return out.empty() ? "1" : out;
}

std::strong_ordering operator<=>(const CubeMonomial& a, const CubeMonomial& b) noexcept {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.support <=> b.support; c != 0) return c;
    return a.y_power <=> b.y_power;
}

CubeClass CubeClass::unit() { return monomial(CubeMonomial{}); }

CubeClass CubeClass::monomial(const CubeMonomial& m, const Integer& coefficient) {
    CubeClass out;
    out.add_term(m, coefficient);
    return out;
}

CubeClass CubeClass::a(int i) { return monomial(CubeMonomial{Subset::from_elements({i}), 0}); }

CubeClass CubeClass::y() { return monomial(CubeMonomial{Subset(), 1}); }

void CubeClass::add_term(const CubeMonomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<std::size_t> CubeClass::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const auto d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        if (m.degree() != d) return std::nullopt;
    }
    return d;
}

Integer CubeClass::coefficient(const CubeMonomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

CubeClass& CubeClass::operator+=(const CubeClass& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

CubeClass& CubeClass::operator-=(const CubeClass& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, Integer(-c));
    return *this;
}

CubeClass& CubeClass::operator*=(const CubeClass& other) {
    CubeClass out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : other.terms_) {
            // a_i^2 = a_i y for each shared index.
            const Subset shared = m1.support & m2.support;
            const CubeMonomial m{m1.support | m2.support,
                                 static_cast<unsigned>(m1.y_power + m2.y_power + shared.size())};
            out.add_term(m, c1 * c2);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

CubeClass& CubeClass::operator*=(const Integer& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

CubeClass CubeClass::operator-() const {
    CubeClass out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

std::string CubeClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Integer magnitude = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        const bool is_one = m.support.size() == 0 && m.y_power == 0;
        if (magnitude != 1 || is_one) {
            out += magnitude.get_str();
            if (!is_one) out += "*";
        }
        if (!is_one) out += m.to_string();
    }
    return out;
}

CubeClass pow(const CubeClass& base, unsigned exponent) {
    CubeClass result = CubeClass::unit();
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

UniPoly restrict_class(const CubeClass& cls, Subset J) {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : cls.terms()) {
        if (!m.support.is_subset_of(J)) continue;
        const auto d = m.degree();
        if (coeffs.size() <= d) coeffs.resize(d + 1, Rational(0));
        coeffs[d] += c;
    }
    return UniPoly(std::move(coeffs));
}

CubeClass alpha_class(Subset J) { return CubeClass::monomial(CubeMonomial{J, 0}); }

CubeClass beta_class(Subset J, std::size_t n) {
    if (!J.is_subset_of(Subset::full(n))) throw Error(ErrorKind::InvalidArgument, "subset exceeds {1..n}");
    CubeClass out = CubeClass::unit();
    for (int j = 1; j <= static_cast<int>(n); ++j) {
        if (!J.contains(j)) out *= CubeClass::y() - CubeClass::a(j);
    }
    return out;
}

std::vector<CubeClass> equivariant_chern_series(std::size_t n, std::size_t up_to) {
    if (up_to > n) throw Error(ErrorKind::InvalidArgument, "Chern series only has classes up to degree n");
    std::vector<CubeClass> coeffs(up_to + 1);
    coeffs[0] = CubeClass::unit();
    for (int i = 1; i <= static_cast<int>(n); ++i) {
        const CubeClass factor = CubeClass::a(i) * Integer(2) - CubeClass::y();
        for (std::size_t k = up_to; k >= 1; --k) coeffs[k] += coeffs[k - 1] * factor;
    }
    coeffs.erase(coeffs.begin());
    return coeffs;
}

BasisExpansion express_in_basis(const CubeClass& cls, std::size_t n) {
    const Subset universe = Subset::full(n);
    for (const auto& [m, c] : cls.terms()) {
        if (!m.support.is_subset_of(universe))
            throw Error(ErrorKind::InvalidArgument, "class uses a generator beyond a_" + std::to_string(n));
    }
    BasisExpansion out;
    for (Subset J : all_subsets(n)) {
        UniPoly residual = restrict_class(cls, J);
        for (const auto& [K, p] : out) {
            if (K != J && K.is_subset_of(J)) residual -= p * UniPoly::monomial(Rational(1), K.size());
        }
        if (residual.is_zero()) continue;
        const std::size_t k = J.size();
        std::vector<Rational> shifted;
        for (std::size_t e = 0; e <= static_cast<std::size_t>(residual.degree()); ++e) {
            const Rational& c = residual.coeff(e);
            if (e < k) {
                if (c != 0)
                    throw Error(ErrorKind::NotInModule, "restriction at " + J.to_string() + " is not divisible by x^" +
                                                            std::to_string(k));
                continue;
            }
            if (!is_integer(c))
                throw Error(ErrorKind::NotInModule, "non-integral coefficient at " + J.to_string());
            shifted.push_back(c);
        }
        out.emplace(J, UniPoly(std::move(shifted)));
    }
    return out;
}

CubeClass from_basis(const BasisExpansion& expansion) {
    CubeClass out;
    for (const auto& [J, p] : expansion) {
        for (std::size_t e = 0; p.degree() >= 0 && e <= static_cast<std::size_t>(p.degree()); ++e) {
            const Rational& c = p.coeff(e);
            if (c == 0) continue;
            if (!is_integer(c)) throw Error(ErrorKind::NotInModule, "non-integral basis coefficient");
            out += pow(CubeClass::y(), static_cast<unsigned>(e)) * alpha_class(J) * Integer(c.get_num());
        }
    }
    return out;
}

bool InjectivityReport::passed() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const DegreeRank& d) { return d.full_row_rank(); });
}

InjectivityReport injectivity_rank_check(std::size_t n, std::size_t max_n) {
    if (n > max_n) throw Error(ErrorKind::InvalidArgument, "n exceeds the configured bound " + std::to_string(max_n));
    const auto points = all_subsets(n);
    InjectivityReport report{n, {}};
    for (std::size_t d = 0; d <= n; ++d) {
        RationalMatrix m;
        for (Subset J : points) {
            if (J.size() > d) continue;
            // alpha_J x^(d-|J|) restricted to J' is x^d exactly when J is inside J'.
            std::vector<Rational> row;
            row.reserve(points.size());
            for (Subset target : points) {
                const UniPoly r = restrict_class(alpha_class(J), target) * UniPoly::monomial(Rational(1), d - J.size());
                row.push_back(r.coeff(d));
            }
            m.push_back(std::move(row));
        }
        const std::size_t rows = m.size();
        report.degrees.push_back(DegreeRank{d, rows, points.size(), rank(std::move(m), points.size())});
    }
    return report;
}

Rational default_offset(std::size_t n) {
    const Rational half(1, 2);
    Rational c = Rational(static_cast<unsigned long>(n)) * half;
    if (n % 2 == 0) c += half;
    return c;
}

FixedPointData hypercube_data(std::size_t n, const std::optional<ModelData>& model) {
    FixedPointData data;
    data.n = n;
    for (Subset J : all_subsets(n)) {
        FixedPoint p;
        p.id = J.to_string();
        for (int i = 1; i <= static_cast<int>(n); ++i) p.weights.push_back(J.contains(i) ? -1 : 1);
        if (model) p.moment = model->moment(J);
        data.points.push_back(std::move(p));
    }
    return data;
}

}  // namespace eqfix
