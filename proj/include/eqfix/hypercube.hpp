#pragma once

#include "eqfix/exact.hpp"
#include "eqfix/fixed_point_data.hpp"
#include "eqfix/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eqfix {

/// Subset J of {1..n}, n <= 31. A fixed point of (P^1)^n sits at the
/// "north" pole of the spheres in J. Ordered by size, then lexicographically
/// on the sorted elements.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
    static Subset from_elements(const std::vector<int>& elements);
    static Subset full(std::size_t n);

    std::uint32_t bits() const noexcept { return bits_; }
    std::size_t size() const noexcept;
    /// 1-based membership.
    bool contains(int element) const noexcept { return element >= 1 && (bits_ >> (element - 1)) & 1U; }
    bool is_subset_of(Subset other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    std::vector<int> elements() const;

    Subset operator|(Subset o) const noexcept { return Subset(bits_ | o.bits_); }
    Subset operator&(Subset o) const noexcept { return Subset(bits_ & o.bits_); }

    /// "{}", "{1}", "{1,3}".
    std::string to_string() const;
    static Subset parse(const std::string& text);

    friend bool operator==(Subset a, Subset b) noexcept { return a.bits_ == b.bits_; }
    friend std::strong_ordering operator<=>(Subset a, Subset b) noexcept;

private:
    std::uint32_t bits_ = 0;
};

/// All subsets of {1..n} in Subset order.
std::vector<Subset> all_subsets(std::size_t n);

/// a_S y^m with S square-free.
struct CubeMonomial {
    Subset support;
    unsigned y_power = 0;

    std::size_t degree() const noexcept { return support.size() + y_power; }
    std::string to_string() const;

    friend bool operator==(const CubeMonomial&, const CubeMonomial&) = default;
    /// (degree, support, y power).
    friend std::strong_ordering operator<=>(const CubeMonomial& a, const CubeMonomial& b) noexcept;
};

/// Element of Z[a_1..a_n, y]/(a_i y - a_i^2), stored on the basis of
/// square-free monomials a_S y^m.
class CubeClass {
public:
    CubeClass() = default;

    static CubeClass unit();
    static CubeClass monomial(const CubeMonomial& m, const Integer& coefficient = Integer(1));
    /// a_i, 1-based.
    static CubeClass a(int i);
    static CubeClass y();

    const std::map<CubeMonomial, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Common degree of all terms, nullopt when zero or inhomogeneous.
    std::optional<std::size_t> homogeneous_degree() const;
    Integer coefficient(const CubeMonomial& m) const;

    CubeClass& operator+=(const CubeClass& other);
    CubeClass& operator-=(const CubeClass& other);
    CubeClass& operator*=(const CubeClass& other);
    CubeClass& operator*=(const Integer& scalar);

    friend CubeClass operator+(CubeClass a, const CubeClass& b) { return a += b; }
    friend CubeClass operator-(CubeClass a, const CubeClass& b) { return a -= b; }
    friend CubeClass operator*(CubeClass a, const CubeClass& b) { return a *= b; }
    friend CubeClass operator*(CubeClass a, const Integer& s) { return a *= s; }
    friend CubeClass operator*(const Integer& s, CubeClass a) { return a *= s; }
    CubeClass operator-() const;

    friend bool operator==(const CubeClass&, const CubeClass&) = default;

    std::string to_string() const;

private:
    void add_term(const CubeMonomial& m, const Integer& c);

    std::map<CubeMonomial, Integer> terms_;
};

CubeClass pow(const CubeClass& base, unsigned exponent);

/// Substitutes a_i -> x for i in J, a_i -> 0 otherwise, y -> x.
UniPoly restrict_class(const CubeClass& cls, Subset J);

/// prod_{j in J} a_j: restricts to x^|J| at J' containing J, 0 elsewhere.
CubeClass alpha_class(Subset J);

/// prod_{j not in J} (y - a_j): restricts to x^(n-|J|) at J' inside J, 0 elsewhere.
CubeClass beta_class(Subset J, std::size_t n);

/// Coefficients of t^1..t^up_to in prod_i (1 + t (2 a_i - y)).
std::vector<CubeClass> equivariant_chern_series(std::size_t n, std::size_t up_to);

/// Module coordinates over the alpha basis: cls = sum_J p_J(y) alpha_class(J).
using BasisExpansion = std::map<Subset, UniPoly>;

/// Upper-triangular solve in the subset order. Throws NotInModule when a
/// coefficient is not an integer polynomial.
BasisExpansion express_in_basis(const CubeClass& cls, std::size_t n);

/// Inverse of express_in_basis: sum_J p_J(y) alpha_class(J).
CubeClass from_basis(const BasisExpansion& expansion);

struct DegreeRank {
    std::size_t degree = 0;  // d; cohomological degree 2d
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    bool full_row_rank() const noexcept { return rank == rows; }
};

struct InjectivityReport {
    std::size_t n = 0;
    std::vector<DegreeRank> degrees;
    bool passed() const;
};

/// For each d <= n, the rank of the restriction matrix of
/// {alpha_class(J) x^(d-|J|) : |J| <= d} to all 2^n fixed points.
InjectivityReport injectivity_rank_check(std::size_t n, std::size_t max_n = 12);

/// Moment map mu(J) = |J| - offset on the fixed points of (P^1)^n.
struct ModelData {
    std::size_t n = 0;
    Rational offset;

    Rational moment(Subset J) const { return Rational(static_cast<unsigned long>(J.size())) - offset; }
};

/// n/2 for odd n, n/2 + 1/2 for even n: never an integer.
Rational default_offset(std::size_t n);

/// Fixed-point data of (P^1)^n: tangent weight -1 on sphere i when i is in J,
/// +1 otherwise. Point ids are Subset::to_string(). With a model, moment
/// values mu(J) are attached.
FixedPointData hypercube_data(std::size_t n, const std::optional<ModelData>& model = std::nullopt);

}  // namespace eqfix
