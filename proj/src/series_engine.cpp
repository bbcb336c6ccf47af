#include "urn/series_engine.hpp"

#include <map>

namespace urn {

OdeSystem build_system(const UrnScheme& scheme)
{
    const std::size_t k = scheme.colors();
    OdeSystem system;
    for (std::size_t i = 0; i < k; ++i) {
        std::map<Exponents, Rational> terms;
        for (const auto& r : scheme.row(i).realizations()) {
            Exponents e(k);
            for (std::size_t j = 0; j < k; ++j)
                e[j] = static_cast<std::int32_t>(r.add[j] + (j == i ? 1 : 0));
            terms[e] += r.probability;
        }
        std::vector<OdeTerm> eq;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
            if (it->second != 0)
                eq.push_back({it->second, it->first});
        system.equations.push_back(std::move(eq));
    }
    return system;
}

namespace {

using Coeffs = std::vector<LaurentPoly>;

// Coefficients of S^alpha, filled one index at a time.
struct PowerSeries {
    std::size_t var;
    std::int32_t alpha;
    Coeffs c;
};

// Coefficients of a product of powers, one running prefix product per factor.
struct TermChain {
    std::vector<const Coeffs*> factors;
    std::vector<Coeffs> prefix;
};

} // namespace

std::vector<FormalSeries> taylor_solve(const OdeSystem& system, std::int64_t order)
{
    if (order < 1)
        throw TruncationTooSmall("taylor_solve: order must be at least 1");
    const std::size_t k = system.colors();

    std::vector<Coeffs> x(k);
    for (std::size_t i = 0; i < k; ++i)
        x[i].push_back(LaurentPoly::variable(k, i));

    std::map<std::pair<std::size_t, std::int32_t>, PowerSeries> powers;
    for (const auto& eq : system.equations)
        for (const auto& term : eq)
            for (std::size_t j = 0; j < k; ++j)
                if (term.exponents[j] != 0 && term.exponents[j] != 1)
                    powers.try_emplace({j, term.exponents[j]},
                                       PowerSeries{j, term.exponents[j], {}});

    const LaurentPoly one = LaurentPoly::constant(k, 1);
    const Coeffs unit_series{one};

    std::vector<std::vector<TermChain>> chains(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& term : system.equations[i]) {
            TermChain chain;
            for (std::size_t j = 0; j < k; ++j) {
                const std::int32_t e = term.exponents[j];
                if (e == 0)
                    continue;
                chain.factors.push_back(e == 1 ? &x[j] : &powers.at({j, e}).c);
            }
            if (chain.factors.empty())
                chain.factors.push_back(&unit_series);
            chain.prefix.resize(chain.factors.size());
            chains[i].push_back(std::move(chain));
        }
    }

    std::vector<LaurentPoly> inv_leading;
    for (std::size_t i = 0; i < k; ++i)
        inv_leading.push_back(x[i][0].inverse_monomial());

    for (std::int64_t m = 0; m < order; ++m) {
        for (auto& [key, p] : powers) {
            const Coeffs& s = x[p.var];
            if (m == 0) {
                p.c.push_back(s[0].pow(p.alpha));
                continue;
            }
            // m S_0 P_m = sum_{j=1..m} ((alpha+1) j - m) S_j P_{m-j}
            LaurentPoly acc(k);
            for (std::int64_t j = 1; j <= m; ++j) {
                Rational w = Rational(p.alpha + 1) * j - m;
                if (w != 0)
                    acc.add_product(s[j], p.c[m - j], w);
            }
            p.c.push_back(inv_leading[p.var] * acc * Rational(1, m));
        }

        for (std::size_t i = 0; i < k; ++i) {
            LaurentPoly rhs(k);
            for (std::size_t t = 0; t < chains[i].size(); ++t) {
                TermChain& chain = chains[i][t];
                const Coeffs& f0 = *chain.factors[0];
                chain.prefix[0].push_back(m < static_cast<std::int64_t>(f0.size()) ? f0[m]
                                                                                    : LaurentPoly(k));
                for (std::size_t f = 1; f < chain.factors.size(); ++f) {
                    const Coeffs& g = *chain.factors[f];
                    LaurentPoly acc(k);
                    for (std::int64_t l = 0; l <= m; ++l)
                        if (m - l < static_cast<std::int64_t>(g.size()))
                            acc.add_product(chain.prefix[f - 1][l], g[m - l]);
                    chain.prefix[f].push_back(std::move(acc));
                }
                rhs.add_product(chain.prefix.back()[m], one,
                                system.equations[i][t].coefficient);
            }
            rhs *= Rational(1, m + 1);
            x[i].push_back(std::move(rhs));
        }
    }

    std::vector<FormalSeries> out;
    for (auto& c : x)
        out.emplace_back(std::move(c));
    return out;
}

std::vector<LaurentPoly> q_coefficients(const std::vector<FormalSeries>& series,
                                        const Configuration& initial, std::int64_t order)
{
    if (series.size() != initial.colors())
        throw std::invalid_argument("q_coefficients: color count mismatch");
    for (const auto& s : series)
        if (s.order() < order)
            throw TruncationTooSmall("q_coefficients: series solved to order " +
                                     std::to_string(s.order()) + " < " + std::to_string(order));
    const std::size_t k = series.size();
    FormalSeries product(k, order);
    product[0] = LaurentPoly::constant(k, 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::int64_t c = 0; c < initial[i]; ++c)
            product = product * series[i].truncated(order);

    std::vector<LaurentPoly> q;
    BigInt factorial = 1;
    for (std::int64_t n = 0; n <= order; ++n) {
        if (n > 0)
            factorial *= n;
        q.push_back(product[n] * Rational(factorial));
    }
    return q;
}

std::string render_system(const OdeSystem& system, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < system.colors(); ++i) {
        LaurentPoly rhs(system.colors());
        for (const auto& t : system.equations[i])
            rhs.add_term(t.exponents, t.coefficient);
        if (i)
            out += "\n";
        out += names.at(i) + "' = " + rhs.to_string(names);
    }
    return out;
}

std::string render_system(const OdeSystem& system)
{
    return render_system(system, default_variable_names(system.colors()));
}

LaurentPoly state_polynomial(const WeightedStateVector& state, std::size_t colors)
{
    LaurentPoly p(colors);
    for (const auto& [c, w] : state.weights) {
        Exponents e(c.counts.begin(), c.counts.end());
        p.add_term(e, w);
    }
    return p;
}

std::optional<EngineDisagreement> compare_engines(const UrnScheme& scheme, std::int64_t order)
{
    const std::size_t k = scheme.colors();
    auto series = taylor_solve(build_system(scheme), std::max<std::int64_t>(order, 1));
    auto q = q_coefficients(series, scheme.initial(), order);
    WeightedStateVector state = initial_state(scheme);
    for (std::int64_t n = 0; n <= order; ++n) {
        if (n > 0)
            state = step(scheme, state);
        LaurentPoly engine = state_polynomial(state, k);
        if (engine == q[n])
            continue;
        // First monomial, in exponent order, whose coefficients differ.
        std::map<Exponents, bool> keys;
        for (const auto& [e, c] : engine.terms())
            keys[e] = true;
        for (const auto& [e, c] : q[n].terms())
            keys[e] = true;
        for (const auto& [e, unused] : keys) {
            Rational a = q[n].coefficient(e), b = engine.coefficient(e);
            if (a != b)
                return EngineDisagreement{n, e, a, b};
        }
    }
    return std::nullopt;
}

} // namespace urn
