#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "urn/scheme.hpp"

namespace urn::presets {

/// (X, 1-X / 1-X, X) with X ~ Bernoulli(p): Polya-Eggenberger at p = 1,
/// Friedman at p = 0.
UrnScheme polya_friedman(const Rational& p, Configuration initial = {1, 1});

/// (-X, X / 0, 0) with X ~ Bernoulli(p): coupon collection where a fresh
/// coupon is lost with probability 1 - p.
UrnScheme coupon_delay(const Rational& p, Configuration initial = {3, 1});

/// (X, theta-X / theta-X, X) with X ~ Bin(theta, p).
UrnScheme binomial(std::int64_t theta, const Rational& p, Configuration initial = {1, 1});

/// (U, theta-U / theta-U, U) with U uniform on {0..theta}.
UrnScheme uniform(std::int64_t theta, Configuration initial = {1, 1});

/// Black row (-1, X, 1-X), red and green rows zero; X ~ Bernoulli(p).
UrnScheme three_color_coupon(const Rational& p, Configuration initial = {1, 0, 0});

/// Deterministic (-2, 2 / 2, -2), theta = 0.
UrnScheme plus_minus_two(Configuration initial = {2, 2});

/// Parses "name" or "name:key=value,key=value", e.g. "binomial:theta=2,p=1/2".
/// Recognised names: polya-friedman (p), coupon (p), binomial (theta, p),
/// uniform (theta), three-color-coupon (p), plus-minus-two.
UrnScheme parse(std::string_view spec);

struct Named {
    std::string label;
    UrnScheme scheme;
};

/// Fixed parameterisations of every preset, used by the cross-engine suites.
std::vector<Named> catalog();

} // namespace urn::presets
