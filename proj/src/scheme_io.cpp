#include "urn/scheme_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace urn {

using nlohmann::json;

namespace {

struct Affine {
    std::int64_t coef = 0;
    std::int64_t constant = 0;
};

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

// expr := [sign] term { sign term } ; term := INT ['*' atom] | atom ; atom := X | theta
Affine parse_affine(std::string_view text, std::int64_t theta)
{
    Affine out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto error = [&](const std::string& msg) -> ParseError {
        return ParseError("expression '" + std::string(text) + "': " + msg + " at offset " +
                          std::to_string(pos));
    };
    auto read_word = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
            ++pos;
        return text.substr(start, pos - start);
    };

    bool first = true;
    skip();
    if (pos == text.size())
        throw error("empty expression");
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            throw error("expected '+' or '-'");
        }
        first = false;

        std::int64_t factor = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            factor = std::stoll(std::string(text.substr(start, pos - start)));
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip();
            } else {
                out.constant += sign * factor;
                continue;
            }
        }
        std::string_view word = read_word();
        if (word == "X" || word == "x")
            out.coef += sign * factor;
        else if (word == "theta")
            out.constant += sign * factor * theta;
        else
            throw error(word.empty() ? "expected a term" : "unknown symbol '" + std::string(word) + "'");
        skip();
    }
    return out;
}

Affine parse_entry(const json& e, std::int64_t theta)
{
    if (e.is_number_integer())
        return {0, e.get<std::int64_t>()};
    if (e.is_string())
        return parse_affine(e.get<std::string>(), theta);
    fail("row entry must be an integer or an expression string, got " + e.dump());
}

Rational parse_rational_value(const json& v, const char* what)
{
    try {
        if (v.is_number_integer())
            return Rational(std::to_string(v.get<std::int64_t>()));
        if (v.is_string())
            return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(std::string(what) + ": " + e.what());
    }
    fail(std::string(what) + " must be an integer or a \"num/den\" string, got " + v.dump());
}

std::int64_t parse_int_or_theta(const json& v, std::int64_t theta, const char* what)
{
    if (v.is_number_integer())
        return v.get<std::int64_t>();
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "theta")
            return theta;
        try {
            Rational q = parse_rational(s);
            if (q.get_den() == 1 && q.get_num().fits_slong_p())
                return q.get_num().get_si();
        } catch (const std::invalid_argument&) {
        }
    }
    fail(std::string(what) + " must be an integer or \"theta\", got " + v.dump());
}

// "bernoulli(1/2)" -> name + raw argument strings.
EntryDistribution parse_distribution_call(const std::string& text, std::int64_t theta)
{
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open ||
        close + 1 != text.size())
        fail("distribution '" + text + "' must look like name(args)");
    std::string name = text.substr(0, open);
    std::vector<json> args;
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    for (std::string a; std::getline(ss, a, ',');) {
        auto b = a.find_first_not_of(" \t");
        auto e = a.find_last_not_of(" \t");
        args.emplace_back(b == std::string::npos ? std::string() : a.substr(b, e - b + 1));
    }
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            fail("distribution '" + text + "' takes " + std::to_string(n) + " argument(s)");
    };
    if (name == "bernoulli") {
        need(1);
        return EntryDistribution::bernoulli(parse_rational_value(args[0], "bernoulli p"));
    }
    if (name == "binomial") {
        need(2);
        return EntryDistribution::binomial(parse_int_or_theta(args[0], theta, "binomial n"),
                                           parse_rational_value(args[1], "binomial p"));
    }
    if (name == "uniform") {
        need(2);
        return EntryDistribution::uniform(parse_int_or_theta(args[0], theta, "uniform lo"),
                                          parse_int_or_theta(args[1], theta, "uniform hi"));
    }
    if (name == "deterministic") {
        need(1);
        return EntryDistribution::deterministic(parse_int_or_theta(args[0], theta, "value"));
    }
    fail("unknown distribution '" + name + "'");
}

EntryDistribution parse_distribution(const json& d, std::int64_t theta)
{
    if (d.is_string())
        return parse_distribution_call(d.get<std::string>(), theta);
    if (!d.is_object() || d.size() != 1)
        fail("distribution must be a string or a single-key object, got " + d.dump());
    const auto& [key, arg] = *d.items().begin();
    if (key == "bernoulli")
        return EntryDistribution::bernoulli(parse_rational_value(arg, "bernoulli p"));
    if (key == "deterministic")
        return EntryDistribution::deterministic(parse_int_or_theta(arg, theta, "value"));
    if (key == "binomial") {
        if (!arg.is_object() || !arg.contains("n") || !arg.contains("p"))
            fail("binomial needs {\"n\": .., \"p\": ..}");
        return EntryDistribution::binomial(parse_int_or_theta(arg["n"], theta, "binomial n"),
                                           parse_rational_value(arg["p"], "binomial p"));
    }
    if (key == "uniform") {
        if (!arg.is_object() || !arg.contains("lo") || !arg.contains("hi"))
            fail("uniform needs {\"lo\": .., \"hi\": ..}");
        return EntryDistribution::uniform(parse_int_or_theta(arg["lo"], theta, "uniform lo"),
                                          parse_int_or_theta(arg["hi"], theta, "uniform hi"));
    }
    if (key == "table") {
        if (!arg.is_array())
            fail("table distribution must be an array");
        std::vector<EntryDistribution::Atom> atoms;
        for (const auto& a : arg) {
            if (!a.is_object() || !a.contains("value") || !a.contains("prob"))
                fail("table atoms need \"value\" and \"prob\"");
            atoms.push_back({parse_int_or_theta(a["value"], theta, "value"),
                             parse_rational_value(a["prob"], "prob")});
        }
        return EntryDistribution(std::move(atoms));
    }
    fail("unknown distribution '" + key + "'");
}

ReplacementRow parse_row(const json& row, std::int64_t theta)
{
    if (!row.is_object())
        fail("row must be an object");
    if (row.contains("table")) {
        const json& table = row["table"];
        if (!table.is_array())
            fail("row table must be an array");
        std::vector<ReplacementRow::Realization> rs;
        for (const auto& r : table) {
            if (!r.is_object() || !r.contains("add") || !r.contains("prob") || !r["add"].is_array())
                fail("table realizations need \"add\" (array) and \"prob\"");
            std::vector<std::int64_t> add;
            for (const auto& e : r["add"]) {
                Affine a = parse_entry(e, theta);
                if (a.coef != 0)
                    fail("table entries cannot reference X");
                add.push_back(a.constant);
            }
            rs.push_back({std::move(add), parse_rational_value(r["prob"], "prob")});
        }
        return ReplacementRow(std::move(rs));
    }
    if (!row.contains("entries") || !row["entries"].is_array())
        fail("row needs \"table\" or \"entries\"");
    std::vector<std::int64_t> coef, offset;
    for (const auto& e : row["entries"]) {
        Affine a = parse_entry(e, theta);
        coef.push_back(a.coef);
        offset.push_back(a.constant);
    }
    if (row.contains("var"))
        return ReplacementRow::affine(parse_distribution(row["var"], theta), coef, offset);
    for (auto c : coef)
        if (c != 0)
            fail("row entries reference X but the row has no \"var\"");
    return ReplacementRow::deterministic(std::move(offset));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace

UrnScheme parse_scheme(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        throw ParseError("malformed JSON", line, column);
    }
    if (!doc.is_object())
        fail("scheme must be a JSON object");
    for (const char* key : {"colors", "theta", "initial", "rows"})
        if (!doc.contains(key))
            fail(std::string("missing field \"") + key + "\"");
    if (!doc["theta"].is_number_integer())
        fail("\"theta\" must be an integer");
    const auto theta = doc["theta"].get<std::int64_t>();
    if (theta < 0)
        throw NegativeBalance(theta);

    std::vector<std::string> colors;
    if (!doc["colors"].is_array())
        fail("\"colors\" must be an array of strings");
    for (const auto& c : doc["colors"]) {
        if (!c.is_string())
            fail("\"colors\" must be an array of strings");
        colors.push_back(c.get<std::string>());
    }

    std::vector<std::int64_t> initial;
    if (!doc["initial"].is_array())
        fail("\"initial\" must be an array of integers");
    for (const auto& c : doc["initial"]) {
        if (!c.is_number_integer())
            fail("\"initial\" must be an array of integers");
        initial.push_back(c.get<std::int64_t>());
    }

    std::vector<ReplacementRow> rows;
    if (!doc["rows"].is_array())
        fail("\"rows\" must be an array");
    for (const auto& r : doc["rows"])
        rows.push_back(parse_row(r, theta));

    return UrnScheme(std::move(colors), std::move(rows), theta, Configuration(std::move(initial)));
}

UrnScheme load_scheme_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open scheme file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scheme(buf.str());
}

std::string scheme_to_json(const UrnScheme& scheme)
{
    json doc;
    doc["colors"] = scheme.color_names();
    doc["theta"] = scheme.theta();
    doc["initial"] = scheme.initial().counts;
    json rows = json::array();
    for (const auto& row : scheme.rows()) {
        json table = json::array();
        for (const auto& r : row.realizations())
            table.push_back({{"add", r.add}, {"prob", to_string(r.probability)}});
        rows.push_back({{"table", table}});
    }
    doc["rows"] = rows;
    return doc.dump();
}

std::string scheme_hash(const UrnScheme& scheme)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : scheme_to_json(scheme)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace urn
