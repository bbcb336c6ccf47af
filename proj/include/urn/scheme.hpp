#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "urn/errors.hpp"
#include "urn/rational.hpp"

namespace urn {

/// Ball counts per color.
struct Configuration {
    std::vector<std::int64_t> counts;

    Configuration() = default;
    explicit Configuration(std::vector<std::int64_t> c) : counts(std::move(c)) {}
    Configuration(std::initializer_list<std::int64_t> c) : counts(c) {}

    std::size_t colors() const noexcept { return counts.size(); }
    std::int64_t total() const noexcept;
    std::int64_t operator[](std::size_t i) const { return counts[i]; }
    bool nonnegative() const noexcept;

    Configuration operator+(const std::vector<std::int64_t>& delta) const;

    auto operator<=>(const Configuration&) const = default;
    bool operator==(const Configuration&) const = default;
};

std::string to_string(const Configuration& c);
std::string to_string(const std::vector<std::int64_t>& v);

/// Finite law of a single integer-valued random entry.
class EntryDistribution {
public:
    struct Atom {
        std::int64_t value;
        Rational probability;
    };

    /// Atoms with zero probability are dropped; the rest must be positive,
    /// distinct in value and sum to exactly one.
    explicit EntryDistribution(std::vector<Atom> atoms);

    static EntryDistribution deterministic(std::int64_t value);
    static EntryDistribution bernoulli(const Rational& p);
    static EntryDistribution binomial(std::int64_t trials, const Rational& p);
    /// Uniform on {lo, ..., hi}.
    static EntryDistribution uniform(std::int64_t lo, std::int64_t hi);

    const std::vector<Atom>& support() const noexcept { return atoms_; }
    std::int64_t min_value() const { return atoms_.front().value; }
    std::int64_t max_value() const { return atoms_.back().value; }

    bool operator==(const EntryDistribution& other) const;

private:
    std::vector<Atom> atoms_;
};

/// One row of the replacement matrix as a joint law over k-vectors: a draw of
/// the row yields one addition per column.
class ReplacementRow {
public:
    struct Realization {
        std::vector<std::int64_t> add;
        Rational probability;
    };

    /// Identical add-vectors are merged, zero-probability ones dropped; the
    /// remaining probabilities must be positive and sum to one.
    explicit ReplacementRow(std::vector<Realization> realizations);

    static ReplacementRow deterministic(std::vector<std::int64_t> add);

    /// Row whose column j equals coef[j] * X + offset[j] for a single random
    /// variable X. Expresses couplings such as (X, theta - X) or (-1, X, 1 - X).
    static ReplacementRow affine(const EntryDistribution& variable,
                                 const std::vector<std::int64_t>& coef,
                                 const std::vector<std::int64_t>& offset);

    const std::vector<Realization>& realizations() const noexcept { return realizations_; }
    std::size_t width() const noexcept { return realizations_.front().add.size(); }

    /// Marginal law of column j.
    EntryDistribution column(std::size_t j) const;

private:
    std::vector<Realization> realizations_;
};

/// Balanced urn scheme with random replacement rows. Construction checks the
/// shape, balance and initial-configuration invariants; tenability is left
/// to check_tenability.
class UrnScheme {
public:
    UrnScheme(std::vector<std::string> colors, std::vector<ReplacementRow> rows,
              std::int64_t theta, Configuration initial);

    std::size_t colors() const noexcept { return color_names_.size(); }
    const std::vector<std::string>& color_names() const noexcept { return color_names_; }
    const std::vector<ReplacementRow>& rows() const noexcept { return rows_; }
    const ReplacementRow& row(std::size_t i) const { return rows_[i]; }
    std::int64_t theta() const noexcept { return theta_; }
    const Configuration& initial() const noexcept { return initial_; }
    std::int64_t initial_total() const noexcept { return initial_.total(); }

    /// Total ball count after n draws: s_0 + theta * n.
    std::int64_t total_at(std::int64_t n) const noexcept { return initial_total() + theta_ * n; }

    /// Copy of this scheme started from a different configuration.
    UrnScheme with_initial(Configuration initial) const;

private:
    std::vector<std::string> color_names_;
    std::vector<ReplacementRow> rows_;
    std::int64_t theta_;
    Configuration initial_;
};

/// Common row sum of every realization of every row. Throws BalanceViolation
/// when some realization differs from the scheme's declared theta and
/// NegativeBalance when that common sum is negative.
std::int64_t validate_balance(const UrnScheme& scheme);

/// Same check on bare rows; the common sum is taken from the first realization.
std::int64_t validate_balance(const std::vector<ReplacementRow>& rows);

} // namespace urn
