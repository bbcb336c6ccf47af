#include "urn/closed_forms.hpp"

#include "urn/errors.hpp"

namespace urn {

ExtendedBinomialTable::ExtendedBinomialTable(std::int64_t theta) : theta_(theta)
{
    if (theta < 1)
        throw DomainError("extended binomial: theta must be at least 1");
    rows_.push_back({BigInt(1)});
}

void ExtendedBinomialTable::fill_to(std::int64_t n)
{
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
        const auto& prev = rows_.back();
        const std::int64_t width = static_cast<std::int64_t>(prev.size()) + theta_;
        std::vector<BigInt> next(width, 0);
        for (std::int64_t k = 0; k < width; ++k)
            for (std::int64_t j = 0; j <= theta_; ++j)
                if (k - j >= 0 && k - j < static_cast<std::int64_t>(prev.size()))
                    next[k] += prev[k - j];
        rows_.push_back(std::move(next));
    }
}

BigInt ExtendedBinomialTable::operator()(std::int64_t n, std::int64_t k)
{
    if (n < 0)
        throw DomainError("extended binomial: negative n");
    if (k < 0 || k > theta_ * n)
        return 0;
    std::lock_guard lock(mutex_);
    fill_to(n);
    return rows_[n][k];
}

std::vector<BigInt> ExtendedBinomialTable::row(std::int64_t n)
{
    if (n < 0)
        throw DomainError("extended binomial: negative n");
    std::lock_guard lock(mutex_);
    fill_to(n);
    return rows_[n];
}

BigInt extended_binomial(std::int64_t theta, std::int64_t n, std::int64_t k)
{
    static std::mutex guard;
    static std::map<std::int64_t, ExtendedBinomialTable> tables;
    ExtendedBinomialTable* table;
    {
        std::lock_guard lock(guard);
        table = &tables.try_emplace(theta, theta).first->second;
    }
    return (*table)(n, k);
}

namespace {

void check_counts(std::initializer_list<std::int64_t> counts, std::int64_t n)
{
    std::int64_t total = 0;
    for (auto c : counts) {
        if (c < 0)
            throw DomainError("ball counts must be nonnegative");
        total += c;
    }
    if (total <= 0)
        throw DomainError("the urn must start nonempty");
    if (n < 0)
        throw DomainError("number of draws must be nonnegative");
}

Rational sign(std::int64_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

} // namespace

Rational coupon_delay_pmf(std::int64_t b0, std::int64_t w0, const Rational& p, std::int64_t n,
                          std::int64_t b)
{
    check_counts({b0, w0}, n);
    if (p < 0 || p > 1)
        throw DomainError("coupon_delay_pmf: p outside [0, 1]");
    if (b < 0 || b > b0)
        return 0;
    const std::int64_t s0 = b0 + w0;
    Rational sum = 0;
    for (std::int64_t j = b; j <= b0; ++j) {
        Rational term = sign(j - b) * Rational(binomial(b0, j) * binomial(j, b));
        sum += term * pow((Rational(s0) - p * j) / s0, n);
    }
    return sum;
}

Rational binomial_half_pmf(std::int64_t theta, std::int64_t b0, std::int64_t w0, std::int64_t n,
                           std::int64_t b)
{
    check_counts({b0, w0}, n);
    if (theta < 1)
        throw DomainError("binomial_half_pmf: theta must be at least 1");
    const std::int64_t trials = theta * n;
    if (b < b0 || b > b0 + trials)
        return 0;
    return Rational(binomial(trials, b - b0)) / pow(Rational(2), trials);
}

Rational uniform_pmf(std::int64_t theta, std::int64_t b0, std::int64_t w0, std::int64_t n,
                     std::int64_t b)
{
    check_counts({b0, w0}, n);
    if (theta < 1)
        throw DomainError("uniform_pmf: theta must be at least 1");
    if (b < b0 || b > b0 + theta * n)
        return 0;
    return Rational(extended_binomial(theta, n, b - b0)) / pow(Rational(theta + 1), n);
}

Rational two_type_coupon_red_pmf(std::int64_t b0, std::int64_t r0, std::int64_t g0,
                                 const Rational& p, std::int64_t n, std::int64_t r)
{
    check_counts({b0, r0, g0}, n);
    if (p <= 0 || p >= 1)
        throw DomainError("two_type_coupon_red_pmf: needs 0 < p < 1; use coupon_delay_pmf at "
                          "the endpoints");
    if (r < 0 || r > b0 + r0)
        return 0;
    const std::int64_t s0 = b0 + r0 + g0;
    Rational sum = 0;
    for (std::int64_t j = 0; j <= b0; ++j) {
        Rational inner = 0;
        for (std::int64_t k = 0; k <= j; ++k)
            inner += sign(k) * Rational(binomial(j, k)) * pow(ratio(k, s0), n);
        sum += sign(j) * Rational(binomial(j, r) * binomial(b0, j)) * pow(1 - p, j) * inner;
    }
    return pow(p / (1 - p), r) * sum;
}

Rational two_type_coupon_red_pmf_general(std::int64_t b0, std::int64_t r0, std::int64_t g0,
                                         const Rational& p, std::int64_t n, std::int64_t r)
{
    check_counts({b0, r0, g0}, n);
    if (p < 0 || p > 1)
        throw DomainError("two_type_coupon_red_pmf_general: p outside [0, 1]");
    const std::int64_t m = r - r0;
    if (m < 0 || m > b0)
        return 0;
    const std::int64_t s0 = b0 + r0 + g0;
    Rational sum = 0;
    for (std::int64_t j = m; j <= b0; ++j) {
        Rational inner = 0;
        for (std::int64_t k = 0; k <= j; ++k)
            inner += sign(j - k) * Rational(binomial(j, k)) * pow(ratio(k + r0 + g0, s0), n);
        sum += Rational(binomial(b0, j) * binomial(j, m)) * pow(1 - p, j - m) * inner;
    }
    return pow(p, m) * sum;
}

Support coupon_delay_support(std::int64_t b0) { return {0, b0}; }

Support binomial_half_support(std::int64_t theta, std::int64_t b0, std::int64_t n)
{
    return {b0, b0 + theta * n};
}

Support uniform_support(std::int64_t theta, std::int64_t b0, std::int64_t n)
{
    return {b0, b0 + theta * n};
}

Support two_type_coupon_red_support(std::int64_t b0, std::int64_t r0) { return {0, b0 + r0}; }

} // namespace urn
