#include "urn/scheme.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace urn {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ")"
                              : what),
      line_(line), column_(column)
{
}

InvariantError::InvariantError(std::string invariant, const std::string& detail)
    : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant))
{
}

BalanceViolation::BalanceViolation(std::size_t row, std::string realization, long long sum,
                                   long long theta)
    : InvariantError("balance", "row " + std::to_string(row) + " realization " + realization +
                                    " sums to " + std::to_string(sum) + ", expected " +
                                    std::to_string(theta)),
      row_(row), sum_(sum)
{
}

NegativeBalance::NegativeBalance(long long theta)
    : InvariantError("balance", "theta = " + std::to_string(theta) +
                                    " is negative; diminishing urns are not supported")
{
}

// --- Configuration ---------------------------------------------------------

std::int64_t Configuration::total() const noexcept
{
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

bool Configuration::nonnegative() const noexcept
{
    return std::all_of(counts.begin(), counts.end(), [](std::int64_t c) { return c >= 0; });
}

Configuration Configuration::operator+(const std::vector<std::int64_t>& delta) const
{
    Configuration out = *this;
    for (std::size_t j = 0; j < counts.size(); ++j)
        out.counts[j] += delta[j];
    return out;
}

std::string to_string(const std::vector<std::int64_t>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string to_string(const Configuration& c) { return to_string(c.counts); }

// --- EntryDistribution -----------------------------------------------------

EntryDistribution::EntryDistribution(std::vector<Atom> atoms)
{
    std::erase_if(atoms, [](const Atom& a) { return a.probability == 0; });
    if (atoms.empty())
        throw InvariantError("probability sum", "distribution has empty support");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& a, const Atom& b) { return a.value < b.value; });
    Rational sum = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i].probability < 0)
            throw InvariantError("probability sign",
                                 "negative probability " + to_string(atoms[i].probability));
        if (i && atoms[i].value == atoms[i - 1].value)
            throw InvariantError("distinct support",
                                 "value " + std::to_string(atoms[i].value) + " listed twice");
        sum += atoms[i].probability;
    }
    if (sum != 1)
        throw InvariantError("probability sum", "probabilities sum to " + to_string(sum));
    atoms_ = std::move(atoms);
}

EntryDistribution EntryDistribution::deterministic(std::int64_t value)
{
    return EntryDistribution({{value, Rational(1)}});
}

EntryDistribution EntryDistribution::bernoulli(const Rational& p)
{
    if (p < 0 || p > 1)
        throw InvariantError("probability range", "bernoulli p = " + to_string(p));
    return EntryDistribution({{0, Rational(1 - p)}, {1, p}});
}

EntryDistribution EntryDistribution::binomial(std::int64_t trials, const Rational& p)
{
    if (trials < 0)
        throw InvariantError("binomial trials", "negative trial count");
    if (p < 0 || p > 1)
        throw InvariantError("probability range", "binomial p = " + to_string(p));
    std::vector<Atom> atoms;
    for (std::int64_t k = 0; k <= trials; ++k)
        atoms.push_back({k, Rational(urn::binomial(trials, k)) * pow(p, k) * pow(1 - p, trials - k)});
    return EntryDistribution(std::move(atoms));
}

EntryDistribution EntryDistribution::uniform(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo)
        throw InvariantError("uniform range", "empty range");
    std::vector<Atom> atoms;
    Rational mass(1, hi - lo + 1);
    for (std::int64_t v = lo; v <= hi; ++v)
        atoms.push_back({v, mass});
    return EntryDistribution(std::move(atoms));
}

bool EntryDistribution::operator==(const EntryDistribution& other) const
{
    return std::equal(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end(),
                      [](const Atom& a, const Atom& b) {
                          return a.value == b.value && a.probability == b.probability;
                      });
}

// --- ReplacementRow --------------------------------------------------------

ReplacementRow::ReplacementRow(std::vector<Realization> realizations)
{
    if (realizations.empty())
        throw InvariantError("probability sum", "row has no realizations");
    const std::size_t width = realizations.front().add.size();
    std::map<std::vector<std::int64_t>, Rational> merged;
    for (auto& r : realizations) {
        if (r.add.size() != width)
            throw InvariantError("row width", "realizations of one row differ in length");
        if (r.probability < 0)
            throw InvariantError("probability sign",
                                 "negative probability " + to_string(r.probability));
        merged[r.add] += r.probability;
    }
    Rational sum = 0;
    for (auto& [add, p] : merged) {
        sum += p;
        if (p != 0)
            realizations_.push_back({add, p});
    }
    if (sum != 1)
        throw InvariantError("probability sum", "row probabilities sum to " + to_string(sum));
}

ReplacementRow ReplacementRow::deterministic(std::vector<std::int64_t> add)
{
    return ReplacementRow({{std::move(add), Rational(1)}});
}

ReplacementRow ReplacementRow::affine(const EntryDistribution& variable,
                                      const std::vector<std::int64_t>& coef,
                                      const std::vector<std::int64_t>& offset)
{
    if (coef.size() != offset.size())
        throw InvariantError("row width", "coefficient and offset lengths differ");
    std::vector<Realization> out;
    for (const auto& atom : variable.support()) {
        std::vector<std::int64_t> add(coef.size());
        for (std::size_t j = 0; j < coef.size(); ++j)
            add[j] = coef[j] * atom.value + offset[j];
        out.push_back({std::move(add), atom.probability});
    }
    return ReplacementRow(std::move(out));
}

EntryDistribution ReplacementRow::column(std::size_t j) const
{
    std::map<std::int64_t, Rational> law;
    for (const auto& r : realizations_)
        law[r.add.at(j)] += r.probability;
    std::vector<EntryDistribution::Atom> atoms;
    for (auto& [v, p] : law)
        atoms.push_back({v, p});
    return EntryDistribution(std::move(atoms));
}

// --- UrnScheme -------------------------------------------------------------

std::int64_t validate_balance(const std::vector<ReplacementRow>& rows)
{
    if (rows.empty())
        throw InvariantError("row count", "scheme has no rows");
    const auto& first = rows.front().realizations().front().add;
    const std::int64_t theta = std::accumulate(first.begin(), first.end(), std::int64_t{0});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& r : rows[i].realizations()) {
            std::int64_t sum = std::accumulate(r.add.begin(), r.add.end(), std::int64_t{0});
            if (sum != theta)
                throw BalanceViolation(i, to_string(r.add), sum, theta);
        }
    }
    if (theta < 0)
        throw NegativeBalance(theta);
    return theta;
}

std::int64_t validate_balance(const UrnScheme& scheme)
{
    const std::int64_t theta = validate_balance(scheme.rows());
    if (theta != scheme.theta()) {
        const auto& add = scheme.row(0).realizations().front().add;
        throw BalanceViolation(0, to_string(add), theta, scheme.theta());
    }
    return theta;
}

UrnScheme::UrnScheme(std::vector<std::string> colors, std::vector<ReplacementRow> rows,
                     std::int64_t theta, Configuration initial)
    : color_names_(std::move(colors)), rows_(std::move(rows)), theta_(theta),
      initial_(std::move(initial))
{
    const std::size_t k = color_names_.size();
    if (k < 2)
        throw InvariantError("color count", "at least two colors are required");
    if (rows_.size() != k)
        throw InvariantError("row count", std::to_string(rows_.size()) + " rows for " +
                                              std::to_string(k) + " colors");
    for (std::size_t i = 0; i < k; ++i)
        if (rows_[i].width() != k)
            throw InvariantError("row width", "row " + std::to_string(i) + " has " +
                                                  std::to_string(rows_[i].width()) +
                                                  " columns, expected " + std::to_string(k));
    if (theta_ < 0)
        throw NegativeBalance(theta_);
    validate_balance(*this);
    if (initial_.colors() != k)
        throw InvariantError("initial configuration", "expected " + std::to_string(k) +
                                                          " counts, got " +
                                                          std::to_string(initial_.colors()));
    if (!initial_.nonnegative())
        throw InvariantError("initial configuration", "negative ball count in " +
                                                          to_string(initial_));
    if (initial_.total() <= 0)
        throw InvariantError("initial configuration", "urn starts empty");
}

UrnScheme UrnScheme::with_initial(Configuration initial) const
{
    return UrnScheme(color_names_, rows_, theta_, std::move(initial));
}

} // namespace urn
