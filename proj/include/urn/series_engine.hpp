#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urn/exact_engine.hpp"
#include "urn/formal_series.hpp"
#include "urn/scheme.hpp"

namespace urn {

struct OdeTerm {
    Rational coefficient;
    Exponents exponents;
};

/// Autonomous polynomial system x_i' = sum of coefficient * prod_j x_j^e_j,
/// one equation per color. Terms are kept in descending exponent order.
struct OdeSystem {
    std::vector<std::vector<OdeTerm>> equations;

    std::size_t colors() const noexcept { return equations.size(); }
};

/// Row i contributes p_v * x_i * prod_j x_j^{v_j} for every realization v of
/// probability p_v. For two colors this is x' = sum pi_k x^{k+1} y^{theta-k},
/// y' = sum tau_k x^{theta-k} y^{k+1}.
OdeSystem build_system(const UrnScheme& scheme);

/// Taylor coefficients 0..order of the solution with symbolic initial values
/// x_i(0) = x_i. Powers of the partial solution are propagated with the
/// J.C.P. Miller recurrence, which needs only the unit leading monomial, so
/// negative exponents are handled the same way as positive ones.
std::vector<FormalSeries> taylor_solve(const OdeSystem& system, std::int64_t order);

/// q_n = n! [z^n] prod_i X_i(z)^{initial_i} for n = 0..order.
std::vector<LaurentPoly> q_coefficients(const std::vector<FormalSeries>& series,
                                        const Configuration& initial, std::int64_t order);

/// One equation per line, e.g. "x' = 1/2*x + 1/2*y".
std::string render_system(const OdeSystem& system, const std::vector<std::string>& names);
std::string render_system(const OdeSystem& system);

/// Weighted state read as a polynomial: sum of weight * prod_i x_i^{c_i}.
LaurentPoly state_polynomial(const WeightedStateVector& state, std::size_t colors);

struct EngineDisagreement {
    std::int64_t n;
    Exponents monomial;
    Rational series_coefficient;
    Rational engine_coefficient;
};

/// Compares q_0..q_order from the series solution with the exact engine's
/// weighted states. Returns the first differing monomial, if any.
std::optional<EngineDisagreement> compare_engines(const UrnScheme& scheme, std::int64_t order);

} // namespace urn
