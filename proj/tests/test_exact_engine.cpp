#include <doctest.h>

#include <functional>
#include <random>

#include "generators.hpp"
#include "urn/exact_engine.hpp"
#include "urn/presets.hpp"

using namespace urn;

namespace {

using Law = std::map<Configuration, Rational>;

// Probability law of the full configuration after n draws, by walking every
// history with its exact probability.
void walk(const UrnScheme& s, const Configuration& c, const Rational& prob, std::int64_t left,
          Law& out)
{
    if (left == 0) {
        out[c] += prob;
        return;
    }
    const std::int64_t total = c.total();
    for (std::size_t i = 0; i < s.colors(); ++i) {
        if (c[i] == 0)
            continue;
        for (const auto& r : s.row(i).realizations()) {
            Rational q = prob * Rational(c[i]) / Rational(total) * r.probability;
            q.canonicalize();
            walk(s, c + r.add, q, left - 1, out);
        }
    }
}

Law history_law(const UrnScheme& s, std::int64_t n)
{
    Law out;
    walk(s, s.initial(), 1, n, out);
    return out;
}

Law normalized(const WeightedStateVector& state, const Rational& kernel)
{
    Law out;
    for (const auto& [c, w] : state.weights)
        out[c] = w / kernel;
    return out;
}

UrnScheme deterministic_pair(std::vector<std::int64_t> black, std::vector<std::int64_t> white,
                             Configuration init)
{
    return UrnScheme({"black", "white"},
                     {ReplacementRow::deterministic(std::move(black)),
                      ReplacementRow::deterministic(std::move(white))},
                     1, std::move(init));
}

} // namespace

TEST_CASE("step examples")
{
    SUBCASE("Polya-Eggenberger from (1,1)")
    {
        auto s = presets::polya_friedman(1);
        auto next = step(s, initial_state(s));
        CHECK(next.step == 1);
        CHECK(next.weights == Law{{{2, 1}, 1}, {{1, 2}, 1}});
    }
    SUBCASE("coupon scheme from (1,0)")
    {
        auto s = presets::coupon_delay(Rational(1, 2), {1, 0});
        auto next = step(s, initial_state(s));
        CHECK(next.weights == Law{{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}});
    }
    SUBCASE("negative counts are reported")
    {
        auto s = presets::plus_minus_two({2, 1});
        CHECK_THROWS_AS(step(s, initial_state(s)), NegativeCount);
        try {
            evolve(s, 3);
        } catch (const NegativeCount& e) {
            CHECK(e.from() == Configuration{2, 1});
            CHECK(e.color() == 1);
        }
    }
}

TEST_CASE("evolve examples")
{
    auto s = presets::binomial(1, Rational(1, 2));
    CHECK(evolve(s, 0).weights == Law{{{1, 1}, 1}});

    auto st = evolve(s, 2);
    Pmf law = marginal_pmf(st, 0);
    CHECK(law == Pmf{{1, Rational(1, 4)}, {2, Rational(1, 2)}, {3, Rational(1, 4)}});

    Rational p(1, 3);
    auto three = evolve(presets::three_color_coupon(p, {1, 0, 0}), 1);
    CHECK(three.weights == Law{{{0, 1, 0}, p}, {{0, 0, 1}, 1 - p}});
}

TEST_CASE("marginal_pmf examples")
{
    Pmf pe = marginal_pmf(evolve(presets::polya_friedman(1), 10), 0);
    CHECK(pe.size() == 11);
    for (std::int64_t b = 1; b <= 11; ++b)
        CHECK(pe[b] == Rational(1, 11));

    Pmf u = marginal_pmf(evolve(presets::uniform(2), 2), 0);
    CHECK(u[3] == Rational(1, 3));
    CHECK(u[1] == Rational(1, 9));

    auto s = presets::coupon_delay(Rational(1, 4), {3, 1});
    CHECK(marginal_pmf(evolve(s, 0), 0) == Pmf{{3, 1}});
    CHECK(marginal_pmf(evolve(s, 0), 1) == Pmf{{1, 1}});
}

TEST_CASE("kernel_total examples")
{
    CHECK(kernel_total(presets::polya_friedman(1), 3) == 24);
    CHECK(kernel_total(presets::plus_minus_two({2, 2}), 5) == 1024);
    CHECK(kernel_total(presets::uniform(3), 0) == 1);
    CHECK(kernel_total(presets::uniform(3), 2) == 2 * 5);
}

TEST_CASE("moments examples")
{
    for (std::int64_t theta = 1; theta <= 3; ++theta)
        for (std::int64_t n = 0; n <= 8; ++n) {
            auto s = presets::binomial(theta, Rational(1, 2), {2, 2});
            CHECK(moments(evolve(s, n), 0, 1) == ratio(s.total_at(n), 2));
        }
    auto s = presets::binomial(1, Rational(1, 2));
    for (std::int64_t n = 0; n <= 12; ++n) {
        auto st = evolve(s, n);
        Rational m1 = moments(st, 0, 1);
        CHECK(moments(st, 0, 2) - m1 * m1 == ratio(n, 4));
    }
    auto st0 = evolve(presets::coupon_delay(Rational(1, 2), {3, 1}), 0);
    for (int k = 1; k <= 4; ++k)
        CHECK(moments(st0, 0, k) == pow(Rational(3), k));
    CHECK_THROWS(moments(st0, 0, 5));
}

TEST_CASE("brute_force_pmf examples")
{
    auto pf = presets::polya_friedman(Rational(1, 2));
    CHECK(brute_force_pmf(pf, 0, 0) == Pmf{{1, 1}});
    CHECK(brute_force_pmf(pf, 2, 0) == marginal_pmf(evolve(pf, 2), 0));
    CHECK_THROWS_AS(brute_force_pmf(pf, 9, 0), CapExceeded);

    // Coupon p = 1/2 from (2,0), three draws, by hand: each draw of a black
    // ball converts it with probability 1/2.
    auto coupon = presets::coupon_delay(Rational(1, 2), {2, 0});
    Pmf law = brute_force_pmf(coupon, 3, 0);
    CHECK(law == marginal_pmf(evolve(coupon, 3), 0));
    Rational total = 0;
    for (const auto& [b, q] : law)
        total += q;
    CHECK(total == 1);
    // B stays at 2 only if none of the three black draws converts.
    CHECK(law[2] == Rational(1, 8));
}

TEST_CASE("property: normalization and support shape for n <= 30")
{
    for (const auto& [label, s] : presets::catalog()) {
        CAPTURE(label);
        WeightedStateVector st = initial_state(s);
        Rational kernel = 1;
        for (std::int64_t n = 0; n <= 30; ++n) {
            CHECK(st.total_weight() == kernel);
            for (const auto& [c, w] : st.weights) {
                CHECK(c.total() == s.total_at(n));
                CHECK(w > 0);
            }
            kernel *= s.total_at(n);
            st = step(s, st);
        }
    }
}

TEST_CASE("property: history enumeration equals the engine on random schemes")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        UrnScheme s = testing::random_tenable_scheme(rng, 2 + trial % 2, trial % 3);
        const std::int64_t n = 1 + trial % 5;
        auto st = evolve(s, n);
        CHECK(normalized(st, kernel_total(s, n)) == history_law(s, n));
        for (std::size_t color = 0; color < s.colors(); ++color)
            CHECK(brute_force_pmf(s, n, color) == marginal_pmf(st, color));
    }
}

TEST_CASE("property: Polya-Friedman is the mixture of its two deterministic rules")
{
    const auto polya = deterministic_pair({1, 0}, {0, 1}, {1, 1});
    const auto friedman = deterministic_pair({0, 1}, {1, 0}, {1, 1});
    for (std::int64_t n = 0; n <= 12; ++n) {
        CHECK(evolve(presets::polya_friedman(1), n).weights == evolve(polya, n).weights);
        CHECK(evolve(presets::polya_friedman(0), n).weights == evolve(friedman, n).weights);
    }

    // For each sequence of rule choices run the time-dependent deterministic
    // urn and weight it by p^(#Polya) (1-p)^(#Friedman).
    const Rational p(2, 5);
    const std::int64_t n = 6;
    Law mixture;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Law cur{{{1, 1}, 1}};
        Rational weight = 1;
        for (std::int64_t t = 0; t < n; ++t) {
            const bool use_polya = (mask >> t) & 1u;
            weight *= use_polya ? p : 1 - p;
            const auto& rule = use_polya ? polya : friedman;
            Law next;
            for (const auto& [c, w] : cur)
                for (std::size_t i = 0; i < 2; ++i)
                    if (c[i] > 0)
                        next[c + rule.row(i).realizations()[0].add] += w * c[i];
            cur = std::move(next);
        }
        for (const auto& [c, w] : cur)
            mixture[c] += weight * w;
    }
    for (auto& [c, w] : mixture)
        w.canonicalize();
    CHECK(evolve(presets::polya_friedman(p), n).weights == mixture);
}

TEST_CASE("property: results do not depend on the worker count")
{
    for (const auto& [label, s] : presets::catalog()) {
        CAPTURE(label);
        auto one = evolve(s, 25, 1);
        for (unsigned w : {2u, 3u, 8u})
            CHECK(evolve(s, 25, w).weights == one.weights);
    }
}
