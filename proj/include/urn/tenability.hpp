#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urn/scheme.hpp"

namespace urn {

enum class TenabilityVerdict { TenableExact, TenableUpToHorizon, Untenable };

std::string to_string(TenabilityVerdict v);

/// One transition along a witness path: from `configuration`, a ball of
/// `color` is drawn and the row realization `add` is applied.
struct WitnessStep {
    Configuration configuration;
    std::size_t color;
    std::vector<std::int64_t> add;
};

/// A negative off-diagonal realization found by the static check.
struct StaticViolation {
    std::size_t row;
    std::size_t column;
    std::int64_t value;
};

struct TenabilityReport {
    TenabilityVerdict verdict = TenabilityVerdict::TenableExact;
    /// Number of draws explored (the full depth of the finite state space
    /// when the verdict is exact).
    std::int64_t horizon = 0;
    std::size_t states_explored = 0;
    /// Shortest path from the initial configuration whose last step
    /// deadlocks. Present whenever a reachable deadlock was found.
    std::optional<std::vector<WitnessStep>> witness;
    std::optional<StaticViolation> static_violation;
};

inline constexpr std::int64_t default_tenability_horizon = 50;

/// Static checks (nonnegative off-diagonal realizations) followed by a
/// breadth-first search over all positive-probability transitions. theta = 0
/// schemes have a finite state space and always get an exact verdict; for
/// theta > 0 the search stops after `horizon` draws.
TenabilityReport check_tenability(const UrnScheme& scheme,
                                  std::int64_t horizon = default_tenability_horizon);

/// Replays a witness from the scheme's initial configuration. True when every
/// step but the last is legal and the last one drives a count below zero.
bool replay_reaches_deadlock(const UrnScheme& scheme, const std::vector<WitnessStep>& witness);

} // namespace urn
