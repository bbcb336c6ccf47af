#include <doctest.h>

#include <thread>

#include "urn/closed_forms.hpp"
#include "urn/exact_engine.hpp"
#include "urn/presets.hpp"

using namespace urn;

namespace {

template <class F>
Rational total_over(Support s, F&& f)
{
    Rational sum = 0;
    for (std::int64_t b = s.lo; b <= s.hi; ++b)
        sum += f(b);
    return sum;
}

// (1 + x + ... + x^theta)^n by repeated polynomial multiplication.
std::vector<BigInt> expand_power(std::int64_t theta, std::int64_t n)
{
    std::vector<BigInt> poly{1};
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<BigInt> next(poly.size() + theta, 0);
        for (std::size_t a = 0; a < poly.size(); ++a)
            for (std::int64_t d = 0; d <= theta; ++d)
                next[a + d] += poly[a];
        poly = std::move(next);
    }
    return poly;
}

} // namespace

TEST_CASE("extended binomial coefficients")
{
    for (std::int64_t n = 0; n <= 12; ++n)
        for (std::int64_t k = -1; k <= n + 1; ++k)
            CHECK(extended_binomial(1, n, k) == binomial(n, k));
    CHECK(extended_binomial(2, 2, 2) == 3);
    CHECK(extended_binomial(2, 0, 0) == 1);
    CHECK(extended_binomial(3, 2, 7) == 0);

    for (std::int64_t theta = 1; theta <= 4; ++theta) {
        ExtendedBinomialTable table(theta);
        for (std::int64_t n = 0; n <= 12; ++n) {
            auto row = table.row(n);
            CHECK(row == expand_power(theta, n));
            BigInt sum = 0;
            for (const auto& v : row)
                sum += v;
            BigInt expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), theta + 1, n);
            CHECK(sum == expected);
            for (std::int64_t k = 0; k <= theta * n; ++k)
                CHECK(table(n, k) == table(n, theta * n - k));
        }
    }
}

TEST_CASE("extended binomial table is safe to fill concurrently")
{
    ExtendedBinomialTable table(3);
    std::vector<std::thread> threads;
    std::vector<BigInt> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { results[t] = table(40 + t % 3, 60); });
    for (auto& th : threads)
        th.join();
    for (int t = 0; t < 8; ++t)
        CHECK(results[t] == expand_power(3, 40 + t % 3)[60]);
}

TEST_CASE("coupon collection with delay")
{
    CHECK(coupon_delay_pmf(1, 1, 1, 1, 0) == Rational(1, 2));
    for (std::int64_t b0 = 0; b0 <= 4; ++b0)
        for (std::int64_t n = 0; n <= 6; ++n)
            CHECK(coupon_delay_pmf(b0, 2, 0, n, b0) == 1);
    CHECK(coupon_delay_pmf(2, 1, Rational(1, 2), 5, 3) == 0);
    CHECK(coupon_delay_pmf(2, 1, Rational(1, 2), 5, -1) == 0);
    CHECK_THROWS_AS(coupon_delay_pmf(2, 1, Rational(3, 2), 5, 1), DomainError);
    CHECK_THROWS_AS(coupon_delay_pmf(-1, 1, Rational(1, 2), 5, 0), DomainError);
    CHECK_THROWS_AS(coupon_delay_pmf(0, 0, Rational(1, 2), 5, 0), DomainError);

    auto s = presets::coupon_delay(Rational(1, 2), {2, 1});
    WeightedStateVector st = initial_state(s);
    for (std::int64_t n = 0; n <= 20; ++n) {
        Pmf law = marginal_pmf(st, 0);
        auto f = [&](std::int64_t b) { return coupon_delay_pmf(2, 1, Rational(1, 2), n, b); };
        CHECK(total_over(coupon_delay_support(2), f) == 1);
        for (std::int64_t b = 0; b <= 2; ++b)
            CHECK(f(b) == (law.contains(b) ? law[b] : Rational(0)));
        st = step(s, st);
    }
}

TEST_CASE("coupon collection at p = 1 matches history enumeration")
{
    for (std::int64_t b0 = 1; b0 <= 3; ++b0)
        for (std::int64_t w0 = 0; w0 <= 2; ++w0) {
            auto s = presets::coupon_delay(1, {b0, w0});
            for (std::int64_t n = 0; n <= 6; ++n) {
                Pmf law = brute_force_pmf(s, n, 0);
                for (std::int64_t b = 0; b <= b0; ++b)
                    CHECK(coupon_delay_pmf(b0, w0, 1, n, b) ==
                          (law.contains(b) ? law[b] : Rational(0)));
            }
        }
}

TEST_CASE("binomial urn at p = 1/2")
{
    CHECK(binomial_half_pmf(1, 1, 1, 2, 2) == Rational(1, 2));
    CHECK(binomial_half_pmf(1, 1, 1, 2, 0) == 0);
    CHECK_THROWS_AS(binomial_half_pmf(0, 1, 1, 2, 1), DomainError);

    auto s = presets::binomial(2, Rational(1, 2), {1, 2});
    WeightedStateVector st = initial_state(s);
    for (std::int64_t n = 0; n <= 12; ++n) {
        Pmf law = marginal_pmf(st, 0);
        auto sup = binomial_half_support(2, 1, n);
        CHECK(sup.lo == 1);
        CHECK(sup.hi == 1 + 2 * n);
        CHECK(total_over(sup, [&](std::int64_t b) { return binomial_half_pmf(2, 1, 2, n, b); }) == 1);
        for (const auto& [b, q] : law)
            CHECK(binomial_half_pmf(2, 1, 2, n, b) == q);
        CHECK(law.size() == static_cast<std::size_t>(2 * n + 1));
        st = step(s, st);
    }
}

TEST_CASE("uniform urn")
{
    for (std::int64_t n = 0; n <= 8; ++n)
        for (std::int64_t b = 1; b <= n + 1; ++b)
            CHECK(uniform_pmf(1, 1, 1, n, b) == Rational(binomial(n, b - 1)) / pow(Rational(2), n));
    CHECK(uniform_pmf(2, 1, 1, 2, 3) == Rational(1, 3));
    CHECK_THROWS_AS(uniform_pmf(0, 1, 1, 2, 3), DomainError);

    auto s = presets::uniform(3, {2, 1});
    WeightedStateVector st = initial_state(s);
    for (std::int64_t n = 0; n <= 10; ++n) {
        Pmf law = marginal_pmf(st, 0);
        auto sup = uniform_support(3, 2, n);
        CHECK(total_over(sup, [&](std::int64_t b) { return uniform_pmf(3, 2, 1, n, b); }) == 1);
        for (std::int64_t b = sup.lo; b <= sup.hi; ++b)
            CHECK(uniform_pmf(3, 2, 1, n, b) == (law.contains(b) ? law[b] : Rational(0)));
        st = step(s, st);
    }
}

TEST_CASE("alternating red-ball formula")
{
    const Rational p(1, 3);
    CHECK(two_type_coupon_red_pmf(1, 0, 0, p, 1, 1) == p);
    CHECK(two_type_coupon_red_pmf(1, 0, 0, p, 0, 0) == 1);
    CHECK(two_type_coupon_red_pmf(2, 1, 1, p, 4, 4) == 0);
    CHECK_THROWS_AS(two_type_coupon_red_pmf(1, 0, 0, 0, 1, 1), DomainError);
    CHECK_THROWS_AS(two_type_coupon_red_pmf(1, 0, 0, 1, 1, 1), DomainError);

    SUBCASE("matches the urn when the urn starts all black")
    {
        for (Rational q : {Rational(1, 4), Rational(1, 3), Rational(1, 2)})
            for (std::int64_t b0 = 1; b0 <= 3; ++b0) {
                auto s = presets::three_color_coupon(q, {b0, 0, 0});
                WeightedStateVector st = initial_state(s);
                for (std::int64_t n = 0; n <= 10; ++n) {
                    Pmf law = marginal_pmf(st, 1);
                    auto sup = two_type_coupon_red_support(b0, 0);
                    auto f = [&](std::int64_t r) { return two_type_coupon_red_pmf(b0, 0, 0, q, n, r); };
                    CHECK(total_over(sup, f) == 1);
                    for (std::int64_t r = sup.lo; r <= sup.hi; ++r)
                        CHECK(f(r) == (law.contains(r) ? law[r] : Rational(0)));
                    st = step(s, st);
                }
            }
    }
    SUBCASE("discrepancy when the urn starts with red or green balls")
    {
        // The stated sum ignores r0 and g0 beyond s0, so it cannot place mass
        // at r0 + m. Already at n = 1 it fails to sum to one.
        auto mass = [&](std::int64_t b0, std::int64_t r0, std::int64_t g0, std::int64_t n) {
            return total_over(two_type_coupon_red_support(b0, r0), [&](std::int64_t r) {
                return two_type_coupon_red_pmf(b0, r0, g0, p, n, r);
            });
        };
        CHECK(mass(2, 1, 1, 1) != 1);
        CHECK(mass(3, 0, 2, 1) != 1);
        Pmf law = marginal_pmf(evolve(presets::three_color_coupon(p, {2, 1, 1}), 3), 1);
        bool differs = false;
        for (std::int64_t r = 0; r <= 3; ++r)
            differs = differs ||
                      two_type_coupon_red_pmf(2, 1, 1, p, 3, r) != (law.contains(r) ? law[r] : Rational(0));
        CHECK(differs);
    }
}

TEST_CASE("general red-ball formula matches the urn for every start")
{
    const std::vector<Configuration> starts{{1, 0, 0}, {2, 1, 1}, {3, 0, 2}, {0, 2, 1}, {2, 2, 0}};
    for (Rational p : {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1)})
        for (const auto& c : starts) {
            auto s = presets::three_color_coupon(p, c);
            WeightedStateVector st = initial_state(s);
            for (std::int64_t n = 0; n <= 10; ++n) {
                Pmf law = marginal_pmf(st, 1);
                auto sup = two_type_coupon_red_support(c[0], c[1]);
                auto f = [&](std::int64_t r) {
                    return two_type_coupon_red_pmf_general(c[0], c[1], c[2], p, n, r);
                };
                CHECK(total_over(sup, f) == 1);
                for (std::int64_t r = sup.lo; r <= sup.hi; ++r)
                    CHECK(f(r) == (law.contains(r) ? law[r] : Rational(0)));
                st = step(s, st);
            }
        }
}
