#include "ratdiag/rational.hpp"

#include <cctype>

namespace ratdiag {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Signed decimal integer, no whitespace.
Int parse_integer(std::string_view s, std::string_view whole) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
        digits.remove_prefix(1);
    if (!all_digits(digits))
        raise(Errc::bad_rational,
              "malformed rational literal '" + std::string(whole) + "'");
    return Int(std::string(s));
}

} // namespace

Rational parse_rational(std::string_view text) {
    // trim ends; no interior whitespace allowed
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        raise(Errc::bad_rational, "empty rational literal");

    auto slash = text.find('/');
    Int num, den;
    if (slash == std::string_view::npos) {
        num = parse_integer(text, text);
        den = 1;
    } else {
        num = parse_integer(text.substr(0, slash), text);
        den = parse_integer(text.substr(slash + 1), text);
    }
    if (den == 0)
        raise(Errc::bad_rational,
              "zero denominator in rational literal '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow_rational(const Rational& r, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
    // base is canonical, so num^e / den^e already is
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace ratdiag
