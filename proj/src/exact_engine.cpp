#include "urn/exact_engine.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace urn {

NegativeCount::NegativeCount(Configuration from, std::size_t color, std::vector<std::int64_t> add)
    : std::runtime_error("drawing color " + std::to_string(color) + " in " + to_string(from) +
                         " with rule " + to_string(add) + " makes a count negative"),
      from_(std::move(from)), color_(color), add_(std::move(add))
{
}

Rational WeightedStateVector::total_weight() const
{
    Rational sum = 0;
    for (const auto& [c, w] : weights)
        sum += w;
    return sum;
}

WeightedStateVector initial_state(const UrnScheme& scheme)
{
    WeightedStateVector s;
    s.weights.emplace(scheme.initial(), Rational(1));
    return s;
}

namespace {

using Entry = std::map<Configuration, Rational>::const_iterator;

void apply(const UrnScheme& scheme, Entry first, Entry last,
           std::map<Configuration, Rational>& out)
{
    for (auto it = first; it != last; ++it) {
        const auto& [c, q] = *it;
        for (std::size_t i = 0; i < scheme.colors(); ++i) {
            if (c[i] <= 0)
                continue;
            const Rational base = q * c[i];
            for (const auto& r : scheme.row(i).realizations()) {
                Configuration next = c + r.add;
                if (!next.nonnegative())
                    throw NegativeCount(c, i, r.add);
                out[std::move(next)] += base * r.probability;
            }
        }
    }
}

} // namespace

WeightedStateVector step(const UrnScheme& scheme, const WeightedStateVector& state,
                         unsigned workers)
{
    WeightedStateVector next;
    next.step = state.step + 1;
    const std::size_t n = state.weights.size();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n ? n : 1)));

    if (workers == 1) {
        apply(scheme, state.weights.begin(), state.weights.end(), next.weights);
    } else {
        std::vector<Entry> bounds;
        auto it = state.weights.begin();
        for (unsigned w = 0; w < workers; ++w) {
            bounds.push_back(it);
            std::advance(it, n / workers + (w < n % workers ? 1 : 0));
        }
        bounds.push_back(state.weights.end());

        std::vector<std::map<Configuration, Rational>> partial(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    apply(scheme, bounds[w], bounds[w + 1], partial[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto& e : errors)
            if (e)
                std::rethrow_exception(e);
        for (auto& part : partial)
            for (auto& [c, q] : part)
                next.weights[c] += q;
    }

    std::erase_if(next.weights, [](const auto& kv) { return kv.second == 0; });
    return next;
}

WeightedStateVector evolve(const UrnScheme& scheme, std::int64_t n, unsigned workers)
{
    if (n < 0)
        throw std::invalid_argument("evolve: negative step count");
    WeightedStateVector s = initial_state(scheme);
    for (std::int64_t i = 0; i < n; ++i)
        s = step(scheme, s, workers);
    return s;
}

Pmf marginal_pmf(const WeightedStateVector& state, std::size_t color)
{
    Pmf law;
    Rational total = 0;
    for (const auto& [c, w] : state.weights) {
        law[c[color]] += w;
        total += w;
    }
    for (auto& [b, p] : law)
        p /= total;
    return law;
}

Rational kernel_total(const UrnScheme& scheme, std::int64_t n)
{
    BigInt product = 1;
    for (std::int64_t i = 0; i < n; ++i)
        product *= scheme.total_at(i);
    return Rational(product);
}

Rational moments(const WeightedStateVector& state, std::size_t color, int order)
{
    if (order < 1 || order > 4)
        throw std::invalid_argument("moments: order must be in 1..4");
    Rational m = 0;
    for (const auto& [b, p] : marginal_pmf(state, color))
        m += pow(Rational(b), order) * p;
    return m;
}

namespace {

void walk(const UrnScheme& scheme, const Configuration& c, const Rational& prob,
          std::int64_t remaining, std::size_t color, Pmf& law)
{
    if (remaining == 0) {
        law[c[color]] += prob;
        return;
    }
    const std::int64_t total = c.total();
    for (std::size_t i = 0; i < scheme.colors(); ++i) {
        if (c[i] <= 0)
            continue;
        const Rational pick = ratio(c[i], total);
        for (const auto& r : scheme.row(i).realizations()) {
            Configuration next = c + r.add;
            if (!next.nonnegative())
                throw NegativeCount(c, i, r.add);
            walk(scheme, next, prob * pick * r.probability, remaining - 1, color, law);
        }
    }
}

} // namespace

Pmf brute_force_pmf(const UrnScheme& scheme, std::int64_t n, std::size_t color, std::int64_t cap)
{
    if (n > cap)
        throw CapExceeded("brute_force_pmf: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap));
    Pmf law;
    walk(scheme, scheme.initial(), Rational(1), n, color, law);
    std::erase_if(law, [](const auto& kv) { return kv.second == 0; });
    return law;
}

} // namespace urn
