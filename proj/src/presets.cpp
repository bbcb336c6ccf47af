#include "urn/presets.hpp"

#include <map>
#include <sstream>

namespace urn::presets {

namespace {

const std::vector<std::string> two_colors{"black", "white"};

UrnScheme symmetric(const EntryDistribution& law, std::int64_t theta, Configuration initial)
{
    return UrnScheme(two_colors,
                     {ReplacementRow::affine(law, {1, -1}, {0, theta}),
                      ReplacementRow::affine(law, {-1, 1}, {theta, 0})},
                     theta, std::move(initial));
}

} // namespace

UrnScheme polya_friedman(const Rational& p, Configuration initial)
{
    return symmetric(EntryDistribution::bernoulli(p), 1, std::move(initial));
}

UrnScheme coupon_delay(const Rational& p, Configuration initial)
{
    return UrnScheme(two_colors,
                     {ReplacementRow::affine(EntryDistribution::bernoulli(p), {-1, 1}, {0, 0}),
                      ReplacementRow::deterministic({0, 0})},
                     0, std::move(initial));
}

UrnScheme binomial(std::int64_t theta, const Rational& p, Configuration initial)
{
    return symmetric(EntryDistribution::binomial(theta, p), theta, std::move(initial));
}

UrnScheme uniform(std::int64_t theta, Configuration initial)
{
    return symmetric(EntryDistribution::uniform(0, theta), theta, std::move(initial));
}

UrnScheme three_color_coupon(const Rational& p, Configuration initial)
{
    return UrnScheme(
        {"black", "red", "green"},
        {ReplacementRow::affine(EntryDistribution::bernoulli(p), {0, 1, -1}, {-1, 0, 1}),
         ReplacementRow::deterministic({0, 0, 0}), ReplacementRow::deterministic({0, 0, 0})},
        0, std::move(initial));
}

UrnScheme plus_minus_two(Configuration initial)
{
    return UrnScheme(two_colors,
                     {ReplacementRow::deterministic({-2, 2}), ReplacementRow::deterministic({2, -2})},
                     0, std::move(initial));
}

UrnScheme parse(std::string_view spec)
{
    std::string name(spec.substr(0, spec.find(':')));
    std::map<std::string, std::string> params;
    if (auto colon = spec.find(':'); colon != std::string_view::npos) {
        std::stringstream ss{std::string(spec.substr(colon + 1))};
        for (std::string kv; std::getline(ss, kv, ',');) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw ParseError("preset parameter '" + kv + "' is not key=value");
            params[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
    }
    auto take = [&](const std::string& key) -> std::string {
        auto it = params.find(key);
        if (it == params.end())
            throw ParseError("preset '" + name + "' needs parameter '" + key + "'");
        std::string v = it->second;
        params.erase(it);
        return v;
    };
    auto rational = [&](const std::string& key) {
        std::string v = take(key);
        try {
            return parse_rational(v);
        } catch (const std::invalid_argument& e) {
            throw ParseError("preset parameter " + key + ": " + e.what());
        }
    };
    auto integer = [&](const std::string& key) {
        Rational q = rational(key);
        if (q.get_den() != 1 || !q.get_num().fits_slong_p())
            throw ParseError("preset parameter " + key + " must be an integer");
        return static_cast<std::int64_t>(q.get_num().get_si());
    };

    auto done = [&](UrnScheme s) {
        if (!params.empty())
            throw ParseError("preset '" + name + "' does not take parameter '" +
                             params.begin()->first + "'");
        return s;
    };

    if (name == "polya-friedman")
        return done(polya_friedman(rational("p")));
    if (name == "coupon")
        return done(coupon_delay(rational("p")));
    if (name == "binomial") {
        auto theta = integer("theta");
        return done(binomial(theta, rational("p")));
    }
    if (name == "uniform")
        return done(uniform(integer("theta")));
    if (name == "three-color-coupon")
        return done(three_color_coupon(rational("p")));
    if (name == "plus-minus-two")
        return done(plus_minus_two());
    throw ParseError("unknown preset '" + name + "'");
}

std::vector<Named> catalog()
{
    std::vector<Named> out;
    for (const char* p : {"0", "2/5", "1/2", "4/5", "1"})
        out.push_back({std::string("polya-friedman:p=") + p, polya_friedman(Rational(p))});
    out.push_back({"coupon:p=1/2", coupon_delay(Rational(1, 2))});
    out.push_back({"coupon:p=3/4", coupon_delay(Rational(3, 4), {2, 1})});
    for (std::int64_t theta = 1; theta <= 3; ++theta) {
        out.push_back({"binomial:theta=" + std::to_string(theta) + ",p=1/2",
                       binomial(theta, Rational(1, 2))});
        out.push_back({"uniform:theta=" + std::to_string(theta), uniform(theta)});
    }
    out.push_back({"binomial:theta=2,p=1/3", binomial(2, Rational(1, 3), {1, 2})});
    out.push_back({"three-color-coupon:p=1/3", three_color_coupon(Rational(1, 3), {2, 1, 1})});
    out.push_back({"plus-minus-two", plus_minus_two()});
    return out;
}

} // namespace urn::presets
