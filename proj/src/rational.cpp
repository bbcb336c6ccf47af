#include "urn/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace urn {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

BigInt parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw std::invalid_argument("not an integer literal");
    BigInt z(std::string(s), 10);
    return negative ? BigInt(-z) : z;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.empty())
        throw std::invalid_argument("empty rational literal");

    try {
        if (auto slash = text.find('/'); slash != std::string_view::npos) {
            BigInt num = parse_integer(text.substr(0, slash));
            BigInt den = parse_integer(text.substr(slash + 1));
            if (den == 0)
                throw std::invalid_argument("zero denominator");
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view whole = text.substr(0, dot);
            std::string_view frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole.front() == '-';
            if (!whole.empty() && (whole.front() == '-' || whole.front() == '+'))
                whole.remove_prefix(1);
            if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
                (!frac.empty() && !all_digits(frac)))
                throw std::invalid_argument("not a decimal literal");
            BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole), 10);
            BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac), 10);
            BigInt scale;
            mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
            Rational q(w * scale + f, scale);
            q.canonicalize();
            return negative ? Rational(-q) : q;
        }
        return Rational(parse_integer(text));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal '" + std::string(text) + "'");
    }
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

std::string to_decimal(const Rational& q)
{
    // mpf keeps the exponent range that double would lose on tiny tail probabilities.
    mpf_class f(q, 128);
    mp_exp_t exp = 0;
    std::string digits = f.get_str(exp, 10, 17);
    if (digits.empty() || digits == "0")
        return "0";
    bool negative = digits.front() == '-';
    if (negative)
        digits.erase(0, 1);
    std::string out = negative ? "-" : "";
    if (exp > 0 && exp <= 17) {
        if (static_cast<std::size_t>(exp) >= digits.size())
            out += digits + std::string(exp - digits.size(), '0');
        else
            out += digits.substr(0, exp) + "." + digits.substr(exp);
    } else if (exp <= 0 && exp > -5) {
        out += "0." + std::string(-exp, '0') + digits;
    } else {
        out += digits.substr(0, 1);
        if (digits.size() > 1)
            out += "." + digits.substr(1);
        out += "e" + std::to_string(exp - 1);
    }
    return out;
}

Rational ratio(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational pow(const Rational& base, std::int64_t exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("zero raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

} // namespace urn
