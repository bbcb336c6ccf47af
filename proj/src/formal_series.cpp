#include "urn/formal_series.hpp"

#include <algorithm>

namespace urn {

FormalSeries::FormalSeries(std::size_t variables, std::int64_t order)
    : variables_(variables)
{
    if (order < 0)
        throw TruncationTooSmall("FormalSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, LaurentPoly(variables));
}

FormalSeries::FormalSeries(std::vector<LaurentPoly> coefficients)
    : variables_(coefficients.empty() ? 0 : coefficients.front().variables()),
      coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw TruncationTooSmall("FormalSeries: no coefficients");
}

FormalSeries FormalSeries::truncated(std::int64_t order) const
{
    if (order < 0 || order > this->order())
        throw TruncationTooSmall("FormalSeries: cannot truncate to order " + std::to_string(order));
    return FormalSeries(std::vector<LaurentPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o)
{
    const std::int64_t n = std::min(order(), o.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t m = 0; m <= n; ++m)
        coeffs_[m] += o.coeffs_[m];
    return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& c)
{
    for (auto& p : coeffs_)
        p *= c;
    return *this;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
{
    const std::int64_t n = std::min(a.order(), b.order());
    FormalSeries out(a.variables(), n);
    for (std::int64_t i = 0; i <= n; ++i)
        for (std::int64_t j = 0; i + j <= n; ++j)
            out[i + j].add_product(a[i], b[j]);
    return out;
}

FormalSeries FormalSeries::reciprocal() const
{
    if (!coeffs_.front().is_monomial())
        throw NonUnitLeadingTerm("FormalSeries: constant term is not a single monomial");
    const LaurentPoly inv0 = coeffs_.front().inverse_monomial();
    FormalSeries r(variables_, order());
    r[0] = inv0;
    // S * R = 1  =>  R_m = -inv0 * sum_{j=1..m} S_j R_{m-j}
    for (std::int64_t m = 1; m <= order(); ++m) {
        LaurentPoly acc(variables_);
        for (std::int64_t j = 1; j <= m; ++j)
            acc.add_product(coeffs_[j], r[m - j]);
        r[m] = inv0 * acc * Rational(-1);
    }
    return r;
}

FormalSeries FormalSeries::pow(std::int64_t e) const
{
    if (e < 0)
        return reciprocal().pow(-e);
    FormalSeries result(variables_, order());
    result[0] = LaurentPoly::constant(variables_, 1);
    for (std::int64_t i = 0; i < e; ++i)
        result = result * *this;
    return result;
}

} // namespace urn
