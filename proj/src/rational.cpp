#include <rc/rational.hpp>

#include <stdexcept>

namespace rc {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

struct split_fraction {
    bool negative = false;
    std::string_view num;
    std::string_view den;
    bool has_den = false;
};

split_fraction split(std::string_view text)
{
    split_fraction out;
    if (text.starts_with("\xE2\x88\x92")) { // U+2212 MINUS SIGN
        out.negative = true;
        text.remove_prefix(3);
    } else if (text.starts_with('-')) {
        out.negative = true;
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        out.num = text;
    } else {
        out.num = text.substr(0, slash);
        out.den = text.substr(slash + 1);
        out.has_den = true;
    }
    if (!all_digits(out.num) || (out.has_den && !all_digits(out.den))) {
        throw std::invalid_argument("not an exact fraction: '" + std::string(text) + "'");
    }
    return out;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto parts = split(text);
    Integer num(std::string(parts.num), 10);
    Integer den(1);
    if (parts.has_den) {
        den = Integer(std::string(parts.den), 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    if (parts.negative) {
        num = -num;
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_canonical_fraction(std::string_view text)
{
    const auto parts = split(text);
    if (!parts.has_den) {
        throw std::invalid_argument("expected num/den, got '" + std::string(text) + "'");
    }
    if ((parts.num.size() > 1 && parts.num.front() == '0') || (parts.den.size() > 1 && parts.den.front() == '0')) {
        throw std::invalid_argument("leading zeros in '" + std::string(text) + "'");
    }
    Integer num(std::string(parts.num), 10);
    Integer den(std::string(parts.den), 10);
    if (den < 1) {
        throw std::invalid_argument("denominator must be >= 1 in '" + std::string(text) + "'");
    }
    if (parts.negative && num == 0) {
        throw std::invalid_argument("negative zero in '" + std::string(text) + "'");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        throw std::invalid_argument("fraction not reduced: '" + std::string(text) + "'");
    }
    if (parts.negative) {
        num = -num;
    }
    return Rational(num, den);
}

Rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational &q)
{
    Rational c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace rc
