#include "urn/simulator.hpp"

#include <algorithm>
#include <thread>

namespace urn {

std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t history_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return mix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

Xoshiro256::Xoshiro256(std::uint64_t seed) noexcept
{
    for (auto& word : s_) {
        seed += 0x9E3779B97F4A7C15ULL;
        word = mix64(seed);
    }
}

std::uint64_t Xoshiro256::next() noexcept
{
    auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

DeadlockEncountered::DeadlockEncountered(std::int64_t step, Configuration configuration)
    : std::runtime_error("deadlock at step " + std::to_string(step) + " in configuration " +
                         to_string(configuration)),
      step_(step), configuration_(std::move(configuration))
{
}

UrnSampler::UrnSampler(const UrnScheme& scheme) : scheme_(&scheme)
{
    BigInt two64;
    mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
    for (const auto& row : scheme.rows()) {
        std::vector<std::uint64_t> thresholds;
        Rational cumulative = 0;
        const auto& rs = row.realizations();
        for (std::size_t j = 0; j + 1 < rs.size(); ++j) {
            cumulative += rs[j].probability;
            BigInt scaled = cumulative.get_num() * two64 / cumulative.get_den();
            std::uint64_t value = 0;
            mpz_export(&value, nullptr, -1, sizeof value, 0, 0, scaled.get_mpz_t());
            thresholds.push_back(value);
        }
        row_thresholds_.push_back(std::move(thresholds));
    }
}

void UrnSampler::advance(Configuration& c, Xoshiro256& rng, std::int64_t step) const
{
    using u128 = unsigned __int128;
    const std::size_t k = c.colors();
    const auto total = static_cast<std::uint64_t>(c.total());

    std::size_t color = k - 1;
    const std::uint64_t u = rng.next();
    std::uint64_t cumulative = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
        cumulative += static_cast<std::uint64_t>(c[i]);
        if (cumulative == total) {
            color = i;
            break;
        }
        const auto threshold = static_cast<std::uint64_t>((u128(cumulative) << 64) / total);
        if (u < threshold) {
            color = i;
            break;
        }
    }

    const auto& rs = scheme_->row(color).realizations();
    std::size_t pick = rs.size() - 1;
    const auto& thresholds = row_thresholds_[color];
    if (!thresholds.empty()) {
        const std::uint64_t v = rng.next();
        for (std::size_t j = 0; j < thresholds.size(); ++j) {
            if (v < thresholds[j]) {
                pick = j;
                break;
            }
        }
    }

    Configuration next = c + rs[pick].add;
    if (!next.nonnegative())
        throw DeadlockEncountered(step, c);
    c = std::move(next);
}

Trajectory simulate_history(const UrnScheme& scheme, std::int64_t steps, std::uint64_t seed)
{
    UrnSampler sampler(scheme);
    Xoshiro256 rng(seed);
    Trajectory t;
    t.states.reserve(static_cast<std::size_t>(steps) + 1);
    Configuration c = scheme.initial();
    t.states.push_back(c);
    for (std::int64_t s = 0; s < steps; ++s) {
        sampler.advance(c, rng, s);
        t.states.push_back(c);
    }
    return t;
}

namespace {

template <typename Fn>
void for_each_history(std::int64_t histories, unsigned workers, Fn&& fn)
{
    workers = std::max(1u, workers);
    if (workers == 1 || histories < 2) {
        for (std::int64_t h = 0; h < histories; ++h)
            fn(h);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::int64_t h = w; h < histories; h += workers)
                    fn(h);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace

std::vector<Trajectory> simulate_histories(const SimulationPlan& plan, unsigned workers)
{
    std::vector<Trajectory> out(static_cast<std::size_t>(plan.histories));
    for_each_history(plan.histories, workers, [&](std::int64_t h) {
        out[h] = simulate_history(*plan.scheme, plan.steps, history_seed(plan.master_seed, h));
    });
    return out;
}

std::vector<std::int64_t> terminal_counts(const SimulationPlan& plan, std::size_t color,
                                          unsigned workers)
{
    const UrnSampler sampler(*plan.scheme);
    std::vector<std::int64_t> out(static_cast<std::size_t>(plan.histories));
    for_each_history(plan.histories, workers, [&](std::int64_t h) {
        Xoshiro256 rng(history_seed(plan.master_seed, h));
        Configuration c = plan.scheme->initial();
        for (std::int64_t s = 0; s < plan.steps; ++s)
            sampler.advance(c, rng, s);
        out[h] = c[color];
    });
    return out;
}

Pmf empirical_pmf(const SimulationPlan& plan, std::size_t color, unsigned workers)
{
    if (plan.histories < 1)
        throw std::invalid_argument("empirical_pmf: at least one history is required");
    std::map<std::int64_t, std::int64_t> tally;
    for (auto v : terminal_counts(plan, color, workers))
        ++tally[v];
    Pmf law;
    for (auto [v, count] : tally)
        law[v] = ratio(count, plan.histories);
    return law;
}

Rational total_variation(const Pmf& a, const Pmf& b)
{
    Rational sum = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            sum += abs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            sum += abs(ib->second);
            ++ib;
        } else {
            sum += abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return sum / 2;
}

} // namespace urn
