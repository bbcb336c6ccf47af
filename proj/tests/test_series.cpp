#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "generators.hpp"
#include "urn/presets.hpp"
#include "urn/series_engine.hpp"

using namespace urn;

namespace {

std::string read_file(const std::string& name)
{
    std::ifstream in(std::string(URN_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    if (!text.empty() && text.back() == '\n')
        text.pop_back();
    return text;
}

Rational factorial(std::int64_t m)
{
    Rational f = 1;
    for (std::int64_t j = 2; j <= m; ++j)
        f *= j;
    return f;
}

LaurentPoly var(std::size_t k, std::size_t i) { return LaurentPoly::variable(k, i); }

// [t^m] u/(1 - c P t)^(1/theta) = u (c P)^m (1/theta)(1/theta + 1)...(1/theta + m - 1) / m!
FormalSeries power_law_series(const LaurentPoly& u, const LaurentPoly& cp, std::int64_t theta,
                              std::int64_t order)
{
    std::vector<LaurentPoly> coeffs;
    Rational rising = 1;
    for (std::int64_t m = 0; m <= order; ++m) {
        coeffs.push_back(u * cp.pow(m) * (rising / factorial(m)));
        rising *= Rational(1, theta) + m;
        rising.canonicalize();
    }
    return FormalSeries(coeffs);
}

// Solves x_i' = RHS_i by recomputing every right-hand side from scratch with
// naive series powers at each order.
std::vector<FormalSeries> naive_solve(const OdeSystem& sys, std::int64_t order)
{
    const std::size_t k = sys.colors();
    std::vector<std::vector<LaurentPoly>> coeffs(k);
    for (std::size_t i = 0; i < k; ++i)
        coeffs[i].push_back(var(k, i));
    for (std::int64_t m = 0; m < order; ++m) {
        std::vector<FormalSeries> partial;
        for (std::size_t i = 0; i < k; ++i) {
            auto c = coeffs[i];
            c.emplace_back(k);
            partial.emplace_back(c);
        }
        for (std::size_t i = 0; i < k; ++i) {
            LaurentPoly next(k);
            for (const auto& term : sys.equations[i]) {
                FormalSeries prod(std::vector<LaurentPoly>(m + 1, LaurentPoly(k)));
                prod[0] = LaurentPoly::constant(k, 1);
                for (std::size_t j = 0; j < k; ++j)
                    prod = prod * partial[j].truncated(m).pow(term.exponents[j]);
                next += prod[m] * term.coefficient;
            }
            coeffs[i].push_back(next * Rational(1, m + 1));
        }
    }
    std::vector<FormalSeries> out;
    for (auto& c : coeffs)
        out.emplace_back(c);
    return out;
}

} // namespace

TEST_CASE("LaurentPoly arithmetic")
{
    auto x = var(2, 0), y = var(2, 1);
    auto p = x * y + x.pow(2) * Rational(1, 2);
    CHECK(p.size() == 2);
    CHECK(p.coefficient({2, 0}) == Rational(1, 2));
    CHECK((p - p).is_zero());
    CHECK(y.pow(-2) == LaurentPoly::monomial({0, -2}));
    CHECK(x.pow(3) * x.pow(-3) == LaurentPoly::constant(2, 1));
    CHECK((x + y).pow(2).coefficient({1, 1}) == 2);
    CHECK((x + y).pow(0) == LaurentPoly::constant(2, 1));
    CHECK_THROWS((x + y).pow(-1));
    CHECK((x * Rational(3, 2)).inverse_monomial() == LaurentPoly::monomial({-1, 0}, Rational(2, 3)));
    CHECK((x + y).pow(5).at_ones() == 32);
    CHECK((x * y + x).set_to_one(1) == x * Rational(2));

    LaurentPoly acc(2);
    acc.add_product(x + y, x - y, 3);
    CHECK(acc == (x.pow(2) - y.pow(2)) * Rational(3));

    const std::vector<std::string> names{"x", "y"};
    CHECK(p.to_string(names) == "1/2*x^2 + x*y");
    CHECK((x - y.pow(-1) * Rational(3) + LaurentPoly::constant(2, 1)).to_string(names) ==
          "x + 1 - 3*y^-1");
    CHECK(LaurentPoly(2).to_string(names) == "0");
    CHECK(default_variable_names(3) == std::vector<std::string>{"x", "y", "h"});
    CHECK(default_variable_names(4).back() == "x4");
}

TEST_CASE("FormalSeries arithmetic")
{
    auto x = var(2, 0), y = var(2, 1);
    // 1/(x - y t) = x^-1 sum (y/x)^m t^m
    FormalSeries s({x, y * Rational(-1), LaurentPoly(2), LaurentPoly(2)});
    FormalSeries r = s.reciprocal();
    for (std::int64_t m = 0; m <= 3; ++m)
        CHECK(r[m] == y.pow(m) * x.pow(-m - 1));
    CHECK((s * r)[0] == LaurentPoly::constant(2, 1));
    for (std::int64_t m = 1; m <= 3; ++m)
        CHECK((s * r)[m].is_zero());
    CHECK(s.pow(-1) == r);
    CHECK(s.pow(3) == s * s * s);
    CHECK(s.truncated(1).order() == 1);
    CHECK_THROWS_AS(s.truncated(4), TruncationTooSmall);

    FormalSeries bad({x + y, x});
    CHECK_THROWS_AS(bad.reciprocal(), NonUnitLeadingTerm);
    CHECK_THROWS_AS(FormalSeries(2, -1), TruncationTooSmall);
}

TEST_CASE("build_system and render_system golden files")
{
    CHECK(render_system(build_system(presets::coupon_delay(Rational(1, 2)))) ==
          read_file("coupon_half_system.txt"));
    CHECK(render_system(build_system(presets::uniform(2))) ==
          read_file("uniform_theta2_system.txt"));
    CHECK(render_system(build_system(presets::three_color_coupon(Rational(1, 3)))) ==
          read_file("three_color_third_system.txt"));
    CHECK(render_system(build_system(presets::three_color_coupon(Rational(1, 3))),
                        {"b", "r", "g"}) == "b' = 1/3*r + 2/3*g\nr' = r\ng' = g");
}

TEST_CASE("build_system matches the two-color display term by term")
{
    for (std::int64_t theta = 1; theta <= 3; ++theta) {
        const Rational p(1, 3);
        auto sys = build_system(presets::binomial(theta, p));
        REQUIRE(sys.colors() == 2);
        for (std::size_t eq = 0; eq < 2; ++eq) {
            REQUIRE(sys.equations[eq].size() == static_cast<std::size_t>(theta + 1));
            for (const auto& term : sys.equations[eq]) {
                // x' = sum pi_k x^{k+1} y^{theta-k}, pi_k = C(theta,k) p^k (1-p)^{theta-k}
                const std::int64_t k = eq == 0 ? term.exponents[0] - 1 : term.exponents[1] - 1;
                CHECK(term.exponents[0] + term.exponents[1] == theta + 1);
                CHECK(term.coefficient ==
                      Rational(binomial(theta, k)) * pow(p, k) * pow(1 - p, theta - k));
            }
        }
    }
}

TEST_CASE("taylor_solve examples")
{
    const Rational p(1, 4);
    auto sol = taylor_solve(build_system(presets::coupon_delay(p)), 1);
    REQUIRE(sol.size() == 2);
    CHECK(sol[0].order() == 1);
    CHECK(sol[0][0] == var(2, 0));
    CHECK(sol[0][1] == var(2, 0) * (1 - p) + var(2, 1) * p);
    CHECK(sol[1][1] == var(2, 1));

    // x' = x^2, y' = y^2: X = x/(1 - x t), Y = y/(1 - y t).
    auto pe = taylor_solve(build_system(presets::polya_friedman(1)), 10);
    for (std::int32_t m = 0; m <= 10; ++m) {
        CHECK(pe[0][m] == LaurentPoly::monomial({m + 1, 0}));
        CHECK(pe[1][m] == LaurentPoly::monomial({0, m + 1}));
    }
    CHECK_THROWS_AS(taylor_solve(build_system(presets::coupon_delay(p)), 0), TruncationTooSmall);
}

TEST_CASE("taylor_solve agrees with explicit solutions through order 10")
{
    const std::int64_t order = 10;
    const auto x = var(2, 0), y = var(2, 1);

    SUBCASE("coupon collection with delay")
    {
        for (Rational p : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)}) {
            auto sol = taylor_solve(build_system(presets::coupon_delay(p)), order);
            for (std::int64_t m = 0; m <= order; ++m) {
                // X = y e^t + (x - y) e^{(1-p) t}, Y = y e^t
                const Rational inv = 1 / factorial(m);
                CHECK(sol[0][m] == (y + (x - y) * pow(1 - p, m)) * inv);
                CHECK(sol[1][m] == y * inv);
            }
        }
    }
    SUBCASE("binomial urn at p = 1/2")
    {
        for (std::int64_t theta = 1; theta <= 3; ++theta) {
            auto sol = taylor_solve(build_system(presets::binomial(theta, Rational(1, 2))), order);
            // X = x / (1 - theta ((x+y)/2)^theta t)^{1/theta}
            LaurentPoly cp = ((x + y) * Rational(1, 2)).pow(theta) * Rational(theta);
            CHECK(sol[0] == power_law_series(x, cp, theta, order));
            CHECK(sol[1] == power_law_series(y, cp, theta, order));
        }
    }
    SUBCASE("uniform urn")
    {
        for (std::int64_t theta = 1; theta <= 3; ++theta) {
            auto sol = taylor_solve(build_system(presets::uniform(theta)), order);
            LaurentPoly sum(2);
            for (std::int64_t l = 0; l <= theta; ++l)
                sum += x.pow(l) * y.pow(theta - l);
            LaurentPoly cp = sum * Rational(theta, theta + 1);
            CHECK(sol[0] == power_law_series(x, cp, theta, order));
            CHECK(sol[1] == power_law_series(y, cp, theta, order));
        }
    }
    SUBCASE("three-color coupon")
    {
        const auto x3 = var(3, 0), y3 = var(3, 1), h3 = var(3, 2);
        for (Rational p : {Rational(1, 4), Rational(1, 3), Rational(1, 2)}) {
            auto sol = taylor_solve(build_system(presets::three_color_coupon(p)), order);
            CHECK(sol[0][0] == x3);
            for (std::int64_t m = 1; m <= order; ++m) {
                // X = (p y + (1-p) h)(e^t - 1) + x, Y = y e^t, H = h e^t
                const Rational inv = 1 / factorial(m);
                CHECK(sol[0][m] == (y3 * p + h3 * (1 - p)) * inv);
                CHECK(sol[1][m] == y3 * inv);
                CHECK(sol[2][m] == h3 * inv);
            }
        }
    }
}

TEST_CASE("property: incremental powers agree with naive series powers")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        UrnScheme s = testing::random_tenable_scheme(rng, 2 + trial % 2, trial % 3, 2);
        auto sys = build_system(s);
        CHECK(taylor_solve(sys, 5) == naive_solve(sys, 5));
    }
    auto sys = build_system(presets::plus_minus_two());
    CHECK(taylor_solve(sys, 6) == naive_solve(sys, 6));
}

TEST_CASE("q_coefficients examples")
{
    auto s = presets::binomial(1, Rational(1, 2));
    auto sol = taylor_solve(build_system(s), 8);
    auto q = q_coefficients(sol, s.initial(), 8);
    CHECK(q[0] == LaurentPoly::monomial({1, 1}));
    for (std::int64_t n = 0; n <= 8; ++n) {
        // q_n(x, 1) = n! [z^n] x (1 - ((x+1)/2) z)^{-2}; coefficient of x^b is
        // (n+1)! C(n, b-1) / 2^n.
        LaurentPoly collapsed = q[n].set_to_one(1);
        for (std::int64_t b = 1; b <= n + 1; ++b)
            CHECK(collapsed.coefficient({static_cast<std::int32_t>(b), 0}) ==
                  factorial(n + 1) * Rational(binomial(n, b - 1)) / pow(Rational(2), n));
    }
    CHECK_THROWS_AS(q_coefficients(sol, s.initial(), 9), TruncationTooSmall);
}

TEST_CASE("property: q_n equals the engine state and sums to the kernel")
{
    for (const auto& [label, s] : presets::catalog()) {
        CAPTURE(label);
        auto q = q_coefficients(taylor_solve(build_system(s), 8), s.initial(), 8);
        WeightedStateVector st = initial_state(s);
        for (std::int64_t n = 0; n <= 8; ++n) {
            CHECK(q[n] == state_polynomial(st, s.colors()));
            CHECK(q[n].at_ones() == kernel_total(s, n));
            st = step(s, st);
        }
    }
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        UrnScheme s = testing::random_tenable_scheme(rng, 2 + trial % 2, trial % 3);
        CHECK_FALSE(compare_engines(s, 7));
    }
}
