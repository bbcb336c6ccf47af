#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>

#include "urn/scheme.hpp"

namespace urn {

/// Weighted histories aggregated by terminal configuration after `step`
/// draws. Weights are kernel-scaled: they sum to s_0 * s_1 * ... * s_{n-1},
/// and dividing by that product gives probabilities.
struct WeightedStateVector {
    std::int64_t step = 0;
    std::map<Configuration, Rational> weights;

    Rational total_weight() const;
};

/// A positive-probability rule would drive a count negative.
class NegativeCount : public std::runtime_error {
public:
    NegativeCount(Configuration from, std::size_t color, std::vector<std::int64_t> add);
    const Configuration& from() const noexcept { return from_; }
    std::size_t color() const noexcept { return color_; }
    const std::vector<std::int64_t>& add() const noexcept { return add_; }

private:
    Configuration from_;
    std::size_t color_;
    std::vector<std::int64_t> add_;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Pmf = std::map<std::int64_t, Rational>;

WeightedStateVector initial_state(const UrnScheme& scheme);

/// One application of the pick-and-replace operator: every configuration c
/// with weight q sends q * c[i] * p to c + v for each color i and each row-i
/// realization v of probability p. Source configurations are split across
/// `workers` threads; the merge is exact so the result does not depend on it.
WeightedStateVector step(const UrnScheme& scheme, const WeightedStateVector& state,
                         unsigned workers = 1);

WeightedStateVector evolve(const UrnScheme& scheme, std::int64_t n, unsigned workers = 1);

/// Law of the count of `color`; sums to exactly one.
Pmf marginal_pmf(const WeightedStateVector& state, std::size_t color);

/// s_0 * s_1 * ... * s_{n-1} with s_i = s_0 + theta * i.
Rational kernel_total(const UrnScheme& scheme, std::int64_t n);

/// Raw moment E[count^order], order in 1..4.
Rational moments(const WeightedStateVector& state, std::size_t color, int order);

inline constexpr std::int64_t default_brute_force_cap = 8;

/// Test oracle: walks every history of n draws (drawn color weighted by its
/// ball count, then every row realization) without merging states, and
/// aggregates the terminal law of `color`.
Pmf brute_force_pmf(const UrnScheme& scheme, std::int64_t n, std::size_t color,
                    std::int64_t cap = default_brute_force_cap);

} // namespace urn
