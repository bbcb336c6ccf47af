#include "urn/tenability.hpp"

#include <deque>
#include <map>

namespace urn {

std::string to_string(TenabilityVerdict v)
{
    switch (v) {
    case TenabilityVerdict::TenableExact:
        return "tenable-exact";
    case TenabilityVerdict::TenableUpToHorizon:
        return "tenable-up-to-horizon";
    case TenabilityVerdict::Untenable:
        return "untenable";
    }
    return "unknown";
}

namespace {

struct Visit {
    std::int64_t depth;
    // Predecessor edge; empty for the root.
    std::optional<WitnessStep> via;
    std::optional<Configuration> parent;
};

std::vector<WitnessStep> path_to(const std::map<Configuration, Visit>& seen, Configuration node,
                                 WitnessStep last)
{
    std::vector<WitnessStep> path{std::move(last)};
    for (;;) {
        const Visit& v = seen.at(node);
        if (!v.parent)
            break;
        path.push_back(*v.via);
        node = *v.parent;
    }
    return {path.rbegin(), path.rend()};
}

std::optional<StaticViolation> find_static_violation(const UrnScheme& scheme)
{
    for (std::size_t i = 0; i < scheme.colors(); ++i)
        for (const auto& r : scheme.row(i).realizations())
            for (std::size_t j = 0; j < r.add.size(); ++j)
                if (j != i && r.add[j] < 0)
                    return StaticViolation{i, j, r.add[j]};
    return std::nullopt;
}

// Repeatedly draws the offending row with the offending realization. When the
// drawn color is present this drains column j and ends in a deadlock.
std::optional<std::vector<WitnessStep>> greedy_witness(const UrnScheme& scheme,
                                                       const StaticViolation& sv)
{
    const ReplacementRow& row = scheme.row(sv.row);
    const std::vector<std::int64_t>* rule = nullptr;
    for (const auto& r : row.realizations())
        if (r.add[sv.column] == sv.value)
            rule = &r.add;
    Configuration c = scheme.initial();
    std::vector<WitnessStep> path;
    const std::int64_t limit = c[sv.column] + 2;
    for (std::int64_t step = 0; step <= limit; ++step) {
        if (c[sv.row] <= 0)
            return std::nullopt;
        path.push_back({c, sv.row, *rule});
        Configuration next = c + *rule;
        if (!next.nonnegative())
            return path;
        c = std::move(next);
    }
    return std::nullopt;
}

} // namespace

TenabilityReport check_tenability(const UrnScheme& scheme, std::int64_t horizon)
{
    TenabilityReport report;
    report.static_violation = find_static_violation(scheme);

    const bool finite = scheme.theta() == 0;
    std::map<Configuration, Visit> seen;
    std::deque<Configuration> frontier;
    seen.emplace(scheme.initial(), Visit{0, std::nullopt, std::nullopt});
    frontier.push_back(scheme.initial());
    std::int64_t deepest = 0;

    while (!frontier.empty()) {
        Configuration c = std::move(frontier.front());
        frontier.pop_front();
        const std::int64_t depth = seen.at(c).depth;
        if (!finite && depth >= horizon)
            continue;
        for (std::size_t i = 0; i < scheme.colors(); ++i) {
            if (c[i] <= 0)
                continue;
            for (const auto& r : scheme.row(i).realizations()) {
                Configuration next = c + r.add;
                WitnessStep edge{c, i, r.add};
                if (!next.nonnegative()) {
                    report.verdict = TenabilityVerdict::Untenable;
                    report.horizon = depth + 1;
                    report.states_explored = seen.size();
                    report.witness = path_to(seen, c, std::move(edge));
                    return report;
                }
                if (seen.contains(next))
                    continue;
                deepest = std::max(deepest, depth + 1);
                seen.emplace(next, Visit{depth + 1, std::move(edge), c});
                frontier.push_back(std::move(next));
            }
        }
    }

    report.states_explored = seen.size();
    if (report.static_violation) {
        report.verdict = TenabilityVerdict::Untenable;
        report.horizon = finite ? deepest : horizon;
        report.witness = greedy_witness(scheme, *report.static_violation);
        return report;
    }
    if (finite) {
        report.verdict = TenabilityVerdict::TenableExact;
        report.horizon = deepest;
    } else {
        report.verdict = TenabilityVerdict::TenableUpToHorizon;
        report.horizon = horizon;
    }
    return report;
}

bool replay_reaches_deadlock(const UrnScheme& scheme, const std::vector<WitnessStep>& witness)
{
    if (witness.empty())
        return false;
    Configuration c = scheme.initial();
    for (std::size_t s = 0; s < witness.size(); ++s) {
        const WitnessStep& step = witness[s];
        if (step.configuration != c || step.color >= scheme.colors() || c[step.color] <= 0)
            return false;
        bool rule_exists = false;
        for (const auto& r : scheme.row(step.color).realizations())
            rule_exists = rule_exists || r.add == step.add;
        if (!rule_exists)
            return false;
        Configuration next = c + step.add;
        const bool last = s + 1 == witness.size();
        if (next.nonnegative() == last)
            return false;
        c = std::move(next);
    }
    return true;
}

} // namespace urn
