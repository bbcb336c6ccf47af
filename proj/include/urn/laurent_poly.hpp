#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "urn/rational.hpp"

namespace urn {

/// Exponent vector, one entry per variable; entries may be negative.
using Exponents = std::vector<std::int32_t>;

/// Multivariate Laurent polynomial with exact rational coefficients over a
/// fixed number of variables. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<Exponents, Rational>;

    explicit LaurentPoly(std::size_t variables = 0) : variables_(variables) {}

    static LaurentPoly constant(std::size_t variables, const Rational& c);
    static LaurentPoly monomial(Exponents exps, const Rational& c = 1);
    /// The single variable x_i.
    static LaurentPoly variable(std::size_t variables, std::size_t i);

    std::size_t variables() const noexcept { return variables_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coefficient(const Exponents& e) const;
    /// Adds c to the coefficient of x^e, dropping the term if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    /// this += a * b, without materialising the product.
    void add_product(const LaurentPoly& a, const LaurentPoly& b, const Rational& scale = 1);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// Integer power; negative exponents require a monomial.
    LaurentPoly pow(std::int64_t e) const;
    /// Inverse of a monomial. Throws std::domain_error otherwise.
    LaurentPoly inverse_monomial() const;

    /// Value with every variable set to 1 (the sum of coefficients).
    Rational at_ones() const;
    /// Fixes variable i to 1, collapsing its exponent.
    LaurentPoly set_to_one(std::size_t i) const;

    bool operator==(const LaurentPoly& o) const;

    /// Terms in descending lexicographic exponent order, e.g.
    /// "1/2*x^2*y - 3*y^-1 + 1".
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t variables_;
    Terms terms_;
};

std::string render_monomial(const Exponents& e, const std::vector<std::string>& names);

/// Default variable names: x, y for two colors; x, y, h for three (as in the
/// classic coupon examples); x1..xk otherwise.
std::vector<std::string> default_variable_names(std::size_t k);

} // namespace urn
