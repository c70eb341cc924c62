#pragma once

#include "eqfix/exact.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eqfix {

/// Polynomial in the degree-2 generator x of H*(BS^1) with rational
/// coefficients. coefficients()[k] is the coefficient of x^k; the leading
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);
    static UniPoly x() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(std::size_t k) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    /// A single term c*x^d (or zero).
    bool is_monomial() const;
    bool has_integer_coefficients() const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const UniPoly& other);
    UniPoly& operator*=(const Rational& scalar);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
    friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient and remainder over Q. Throws InvalidArgument on a zero divisor.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    Rational evaluate(const Rational& at) const;

    /// Ascending degree with explicit x^k terms, e.g. "1 - 2*x^1 + x^3".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);
UniPoly pow(const UniPoly& base, unsigned exponent);

/// Element of Q(x), stored reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(UniPoly::constant(Rational(1))) {}
    RatFunc(UniPoly numerator);  // NOLINT(google-explicit-constructor)
    RatFunc(UniPoly numerator, UniPoly denominator);

    const UniPoly& numerator() const noexcept { return num_; }
    const UniPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RatFunc& operator+=(const RatFunc& other);
    RatFunc& operator-=(const RatFunc& other);
    RatFunc& operator*=(const RatFunc& other);
    RatFunc& operator/=(const RatFunc& other);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalize();

    UniPoly num_;
    UniPoly den_;
};

/// Throws NotPolynomial when the reduced denominator has positive degree.
UniPoly ratfunc_to_poly(const RatFunc& f);

}  // namespace eqfix
