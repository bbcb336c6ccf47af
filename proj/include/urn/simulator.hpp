#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "urn/exact_engine.hpp"
#include "urn/scheme.hpp"

namespace urn {

/// SplitMix64 finaliser (Stafford variant 13):
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^ (z >> 31)
std::uint64_t mix64(std::uint64_t z) noexcept;

/// Seed of history `index`: mix64(master + 0x9E3779B97F4A7C15 * (index + 1)).
/// Depends only on its arguments, so any subset of histories can be rerun.
std::uint64_t history_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// xoshiro256** 1.0. The four state words are the first four outputs of a
/// SplitMix64 stream started at `seed` (state += 0x9E3779B97F4A7C15, then
/// mix64).
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed) noexcept;
    std::uint64_t next() noexcept;

private:
    std::array<std::uint64_t, 4> s_;
};

class DeadlockEncountered : public std::runtime_error {
public:
    DeadlockEncountered(std::int64_t step, Configuration configuration);
    std::int64_t step() const noexcept { return step_; }
    const Configuration& configuration() const noexcept { return configuration_; }

private:
    std::int64_t step_;
    Configuration configuration_;
};

/// Configurations at steps 0..n.
struct Trajectory {
    std::vector<Configuration> states;
};

struct SimulationPlan {
    const UrnScheme* scheme;
    std::int64_t steps;
    std::int64_t histories;
    std::uint64_t master_seed;
};

/// Precomputed integer thresholds for sampling a scheme. Each draw consumes
/// one 64-bit word u for the color and one for the row realization (rows
/// with a single realization consume none). Outcome j is the first one with
/// u < floor(cumulative_j * 2^64); the last outcome takes the remainder.
class UrnSampler {
public:
    explicit UrnSampler(const UrnScheme& scheme);

    /// Advances `c` by one draw, throwing DeadlockEncountered (with `step`)
    /// if the sampled rule cannot be applied.
    void advance(Configuration& c, Xoshiro256& rng, std::int64_t step) const;

    const UrnScheme& scheme() const noexcept { return *scheme_; }

private:
    const UrnScheme* scheme_;
    // Per row: thresholds for all but the last realization.
    std::vector<std::vector<std::uint64_t>> row_thresholds_;
};

Trajectory simulate_history(const UrnScheme& scheme, std::int64_t steps, std::uint64_t seed);

/// All histories of a plan, history i seeded with history_seed(master, i).
/// Output is identical for any worker count.
std::vector<Trajectory> simulate_histories(const SimulationPlan& plan, unsigned workers = 1);

/// Terminal count of `color` for every history, in history order.
std::vector<std::int64_t> terminal_counts(const SimulationPlan& plan, std::size_t color,
                                          unsigned workers = 1);

/// Relative frequencies (count / M) of the terminal count of `color`.
Pmf empirical_pmf(const SimulationPlan& plan, std::size_t color, unsigned workers = 1);

/// Half the L1 distance between two laws.
Rational total_variation(const Pmf& a, const Pmf& b);

} // namespace urn
