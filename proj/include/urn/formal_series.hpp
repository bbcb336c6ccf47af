#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "urn/laurent_poly.hpp"

namespace urn {

class TruncationTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonUnitLeadingTerm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power series in t truncated after t^order, with Laurent-polynomial
/// coefficients. Coefficient m is the coefficient of t^m.
class FormalSeries {
public:
    FormalSeries(std::size_t variables, std::int64_t order);
    FormalSeries(std::vector<LaurentPoly> coefficients);

    std::size_t variables() const noexcept { return variables_; }
    std::int64_t order() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const LaurentPoly& operator[](std::int64_t m) const { return coeffs_.at(m); }
    LaurentPoly& operator[](std::int64_t m) { return coeffs_.at(m); }
    const std::vector<LaurentPoly>& coefficients() const noexcept { return coeffs_; }

    /// Same series cut after t^order (order must not exceed the current one).
    FormalSeries truncated(std::int64_t order) const;

    FormalSeries& operator+=(const FormalSeries& o);
    FormalSeries& operator*=(const Rational& c);
    friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
    /// Cauchy product truncated at the smaller order.
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

    /// 1/S. Defined when coefficient 0 is a single monomial; throws
    /// NonUnitLeadingTerm otherwise.
    FormalSeries reciprocal() const;
    /// Integer power by repeated multiplication (reciprocal first when e < 0).
    FormalSeries pow(std::int64_t e) const;

    bool operator==(const FormalSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::size_t variables_;
    std::vector<LaurentPoly> coeffs_;
};

} // namespace urn
