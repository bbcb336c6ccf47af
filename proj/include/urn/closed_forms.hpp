#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "urn/rational.hpp"

namespace urn {

/// T(theta, n, k) = [x^k] (1 + x + ... + x^theta)^n, rows filled lazily by
/// the convolution recurrence T(n, k) = sum_{j=0..theta} T(n-1, k-j).
/// Safe to share between threads.
class ExtendedBinomialTable {
public:
    explicit ExtendedBinomialTable(std::int64_t theta);

    std::int64_t theta() const noexcept { return theta_; }
    /// Zero outside 0 <= k <= theta * n.
    BigInt operator()(std::int64_t n, std::int64_t k);
    /// Row n, entries k = 0..theta*n.
    std::vector<BigInt> row(std::int64_t n);

private:
    void fill_to(std::int64_t n);

    std::int64_t theta_;
    std::vector<std::vector<BigInt>> rows_;
    std::mutex mutex_;
};

BigInt extended_binomial(std::int64_t theta, std::int64_t n, std::int64_t k);

/// Coupon collection with delay, black row (-X, X), X ~ Bernoulli(p):
/// P(B_n = b) = sum_{j=b..b0} (-1)^{j-b} C(b0,j) C(j,b) ((s0 - p j)/s0)^n.
Rational coupon_delay_pmf(std::int64_t b0, std::int64_t w0, const Rational& p, std::int64_t n,
                          std::int64_t b);

/// Binomial urn at p = 1/2: B_n = b0 + Bin(theta n, 1/2).
Rational binomial_half_pmf(std::int64_t theta, std::int64_t b0, std::int64_t w0, std::int64_t n,
                           std::int64_t b);

/// Uniform urn: P(B_n = b) = T(theta, n, b - b0) / (theta + 1)^n.
Rational uniform_pmf(std::int64_t theta, std::int64_t b0, std::int64_t w0, std::int64_t n,
                     std::int64_t b);

/// Red-ball law of the three-color coupon urn, evaluated exactly as the
/// alternating double sum
///   (p/(1-p))^r sum_j (-1)^j C(j,r) C(b0,j) (1-p)^j sum_k C(j,k) (-1)^k (k/s0)^n
/// with 0^0 = 1. The sum depends on r0 and g0 only through s0; it matches the
/// urn when r0 = g0 = 0 (see two_type_coupon_red_pmf_general). Requires 0 < p < 1.
Rational two_type_coupon_red_pmf(std::int64_t b0, std::int64_t r0, std::int64_t g0,
                                 const Rational& p, std::int64_t n, std::int64_t r);

/// Coefficient extraction from the same generating function keeping the
/// y^{r0} e^{(r0+g0) z} factor:
///   P(R_n = r0 + m) = p^m sum_j C(b0,j) C(j,m) (1-p)^{j-m}
///                         sum_k C(j,k) (-1)^{j-k} ((k + r0 + g0)/s0)^n.
/// Valid for every 0 <= p <= 1 and every starting configuration.
Rational two_type_coupon_red_pmf_general(std::int64_t b0, std::int64_t r0, std::int64_t g0,
                                         const Rational& p, std::int64_t n, std::int64_t r);

/// Supports of the formulas above, as closed intervals [lo, hi].
struct Support {
    std::int64_t lo;
    std::int64_t hi;
};
Support coupon_delay_support(std::int64_t b0);
Support binomial_half_support(std::int64_t theta, std::int64_t b0, std::int64_t n);
Support uniform_support(std::int64_t theta, std::int64_t b0, std::int64_t n);
Support two_type_coupon_red_support(std::int64_t b0, std::int64_t r0);

} // namespace urn
