#include "eqfix/polynomial.hpp"

#include "eqfix/error.hpp"

#include <algorithm>

namespace eqfix {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

const Rational& UniPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

bool UniPoly::is_monomial() const {
    return std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }) <= 1;
}

bool UniPoly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1, Rational(0));
    const Rational& lead = b.coeffs_.back();
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const Rational factor = rem[shift + b.coeffs_.size() - 1] / lead;
        quot[shift] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[shift + j] -= factor * b.coeffs_[j];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * Rational(1 / leading());
}

Rational UniPoly::evaluate(const Rational& at) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
    return acc;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational magnitude = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += eqfix::to_string(magnitude);
        } else {
            if (magnitude != 1) out += eqfix::to_string(magnitude) + "*";
            out += "x^" + std::to_string(k);
        }
    }
    return out;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = UniPoly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
    UniPoly result = UniPoly::constant(Rational(1));
    UniPoly b = base;
    while (exponent > 0) {
        if (exponent & 1U) result *= b;
        exponent >>= 1U;
        if (exponent > 0) b *= b;
    }
    return result;
}

RatFunc::RatFunc(UniPoly numerator) : num_(std::move(numerator)), den_(UniPoly::constant(Rational(1))) {}

RatFunc::RatFunc(UniPoly numerator, UniPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        const UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UniPoly::divmod(num_, g).first;
            den_ = UniPoly::divmod(den_, g).first;
        }
    }
    const Rational lead = den_.leading();
    if (lead != 1) {
        const Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& other) {
    if (den_ == other.den_) {
        num_ -= other.num_;
    } else {
        num_ = num_ * other.den_ - other.num_ * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
    if (other.is_zero()) throw Error(ErrorKind::InvalidArgument, "rational function division by zero");
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

std::string RatFunc::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

UniPoly ratfunc_to_poly(const RatFunc& f) {
    if (!f.is_polynomial())
        throw Error(ErrorKind::NotPolynomial, f.to_string() + " has a denominator of positive degree");
    return f.numerator();
}

}  // namespace eqfix
