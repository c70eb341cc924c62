#include "eqfix/exact.hpp"

#include "eqfix/error.hpp"

#include <cctype>

namespace eqfix {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view text) {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw Error(ErrorKind::Parse, "empty integer in '" + std::string(text) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    return Integer(s, 10);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational rpow(const Rational& base, unsigned long exponent) {
    Rational r(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    r.canonicalize();
    return r;
}

}  // namespace eqfix
