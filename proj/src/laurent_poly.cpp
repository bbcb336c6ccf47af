#include "urn/laurent_poly.hpp"

#include <stdexcept>

namespace urn {

LaurentPoly LaurentPoly::constant(std::size_t variables, const Rational& c)
{
    LaurentPoly p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponents exps, const Rational& c)
{
    LaurentPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t variables, std::size_t i)
{
    Exponents e(variables, 0);
    e.at(i) = 1;
    return monomial(std::move(e));
}

Rational LaurentPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0)
        return;
    if (e.size() != variables_)
        throw std::invalid_argument("LaurentPoly: exponent vector has the wrong length");
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b, const Rational& scale)
{
    if (scale == 0)
        return;
    Exponents e(variables_);
    Rational c;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < variables_; ++i)
                e[i] = ea[i] + eb[i];
            c = ca * cb;
            if (scale != 1)
                c *= scale;
            add_term(e, c);
        }
    }
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out(a.variables());
    out.add_product(a, b);
    return out;
}

LaurentPoly LaurentPoly::inverse_monomial() const
{
    if (!is_monomial())
        throw std::domain_error("LaurentPoly: only a single monomial is invertible");
    const auto& [e, c] = *terms_.begin();
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        neg[i] = -e[i];
    return monomial(std::move(neg), 1 / c);
}

LaurentPoly LaurentPoly::pow(std::int64_t e) const
{
    if (e < 0)
        return inverse_monomial().pow(-e);
    LaurentPoly result = constant(variables_, 1);
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

Rational LaurentPoly::at_ones() const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_)
        s += c;
    return s;
}

LaurentPoly LaurentPoly::set_to_one(std::size_t i) const
{
    LaurentPoly out(variables_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.at(i) = 0;
        out.add_term(f, c);
    }
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const
{
    return variables_ == o.variables_ && terms_ == o.terms_;
}

std::string render_monomial(const Exponents& e, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names.at(i);
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        std::string mono = render_monomial(e, names);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (mono.empty())
            out += urn::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += urn::to_string(mag) + "*" + mono;
    }
    return out;
}

std::vector<std::string> default_variable_names(std::size_t k)
{
    if (k == 2)
        return {"x", "y"};
    if (k == 3)
        return {"x", "y", "h"};
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

} // namespace urn
