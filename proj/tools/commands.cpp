#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "urn/closed_forms.hpp"
#include "urn/csv.hpp"
#include "urn/exact_engine.hpp"
#include "urn/presets.hpp"
#include "urn/scheme_io.hpp"
#include "urn/series_engine.hpp"
#include "urn/simulator.hpp"
#include "urn/tenability.hpp"

namespace urn::cli {

namespace {

// Thrown for bad flag combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::int64_t> parse_int_list(const std::string& text)
{
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("'" + text + "' is not a comma-separated list of integers");
        }
    }
    return out;
}

UrnScheme load_scheme(const RunConfig& cfg)
{
    if (cfg.scheme_file.empty() == cfg.preset.empty())
        throw UsageError("give exactly one of --scheme or --preset");
    UrnScheme scheme =
        cfg.preset.empty() ? load_scheme_file(cfg.scheme_file) : presets::parse(cfg.preset);
    if (!cfg.initial.empty())
        scheme = scheme.with_initial(Configuration(parse_int_list(cfg.initial)));
    return scheme;
}

std::size_t resolve_color(const UrnScheme& scheme, const std::string& selector)
{
    const auto& names = scheme.color_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == selector)
            return i;
    try {
        std::size_t used = 0;
        long long idx = std::stoll(selector, &used);
        if (used == selector.size() && idx >= 0 && static_cast<std::size_t>(idx) < names.size())
            return static_cast<std::size_t>(idx);
    } catch (const std::exception&) {
    }
    throw UsageError("unknown color '" + selector + "'");
}

std::string scheme_label(const RunConfig& cfg)
{
    return cfg.preset.empty() ? "file=" + cfg.scheme_file : "preset=" + cfg.preset;
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot write '" + path + "'");
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

void print_witness(std::ostream& err, const UrnScheme& scheme, const TenabilityReport& report)
{
    if (report.static_violation) {
        const auto& sv = *report.static_violation;
        err << "static check: row " << scheme.color_names()[sv.row] << " adds " << sv.value
            << " " << scheme.color_names()[sv.column]
            << " balls (negative off-diagonal realization)\n";
    }
    if (!report.witness)
        return;
    err << "witness (" << report.witness->size() << " step"
        << (report.witness->size() == 1 ? "" : "s") << "):\n";
    for (std::size_t s = 0; s < report.witness->size(); ++s) {
        const auto& w = (*report.witness)[s];
        err << "  step " << s + 1 << ": " << to_string(w.configuration) << " draw "
            << scheme.color_names()[w.color] << ", rule " << to_string(w.add) << " -> "
            << to_string(w.configuration + w.add)
            << (s + 1 == report.witness->size() ? " deadlock" : "") << "\n";
    }
}

int cmd_validate(const RunConfig& cfg, std::ostream& out)
{
    UrnScheme scheme = load_scheme(cfg);
    const std::int64_t theta = validate_balance(scheme);
    out << "colors: ";
    for (std::size_t i = 0; i < scheme.colors(); ++i)
        out << (i ? ", " : "") << scheme.color_names()[i];
    out << "\ntheta: " << theta << "\ninitial: " << to_string(scheme.initial()) << "\n";
    for (std::size_t i = 0; i < scheme.colors(); ++i) {
        out << "row " << scheme.color_names()[i] << ":";
        for (std::size_t j = 0; j < scheme.colors(); ++j) {
            EntryDistribution col = scheme.row(i).column(j);
            out << " [" << col.min_value() << "," << col.max_value() << "]";
        }
        out << "  (" << scheme.row(i).realizations().size() << " realization"
            << (scheme.row(i).realizations().size() == 1 ? "" : "s") << ")\n";
    }
    TenabilityReport report = check_tenability(scheme, cfg.horizon);
    out << "verdict: " << to_string(report.verdict) << " (horizon " << report.horizon
        << ", states " << report.states_explored << ")\n";
    print_witness(out, scheme, report);
    return report.verdict == TenabilityVerdict::Untenable ? untenable : ok;
}

int report_deadlock(const UrnScheme& scheme, std::int64_t n, const std::string& what,
                    std::ostream& err)
{
    err << "error: " << what << "\n";
    TenabilityReport report = check_tenability(scheme, std::max<std::int64_t>(n, 1));
    print_witness(err, scheme, report);
    return untenable;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 0)
        throw UsageError("--n is required and must be nonnegative");
    UrnScheme scheme = load_scheme(cfg);
    const std::size_t color = resolve_color(scheme, cfg.color);
    WeightedStateVector state;
    try {
        state = evolve(scheme, cfg.n, cfg.workers);
    } catch (const NegativeCount& e) {
        return report_deadlock(scheme, cfg.n, e.what(), err);
    }
    Pmf law = marginal_pmf(state, color);
    Sink sink(cfg.out, out);
    *sink << provenance_line(scheme_hash(scheme), scheme_label(cfg) + " n=" + std::to_string(cfg.n) +
                                                      " color=" + scheme.color_names()[color])
          << "\n";
    write_distribution_csv(*sink, law);

    const Rational mean = moments(state, color, 1);
    const Rational variance = moments(state, color, 2) - mean * mean;
    std::ostream& summary = sink.to_file() ? out : err;
    summary << "mean: " << to_string(mean) << " (" << to_decimal(mean) << ")\n";
    summary << "variance: " << to_string(variance) << " (" << to_decimal(variance) << ")\n";
    return ok;
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.order < 0)
        throw UsageError("--order is required and must be nonnegative");
    if (int(cfg.emit_system) + int(cfg.emit_q) + int(cfg.check) != 1)
        throw UsageError("choose one of --emit-system, --emit-q, --check");
    UrnScheme scheme = load_scheme(cfg);
    const OdeSystem system = build_system(scheme);
    const auto names = default_variable_names(scheme.colors());

    if (cfg.emit_system) {
        Sink sink(cfg.out, out);
        *sink << render_system(system, names) << "\n";
        return ok;
    }
    if (cfg.emit_q) {
        auto series = taylor_solve(system, std::max<std::int64_t>(cfg.order, 1));
        auto q = q_coefficients(series, scheme.initial(), cfg.order);
        Sink sink(cfg.out, out);
        *sink << provenance_line(scheme_hash(scheme),
                                 scheme_label(cfg) + " order=" + std::to_string(cfg.order))
              << "\nn";
        for (std::size_t i = 0; i < scheme.colors(); ++i)
            *sink << ",exp_color_" << i;
        *sink << ",coefficient_num,coefficient_den\n";
        for (std::size_t n = 0; n < q.size(); ++n)
            for (const auto& [e, c] : q[n].terms()) {
                *sink << n;
                for (auto v : e)
                    *sink << ',' << v;
                *sink << ',' << c.get_num().get_str() << ',' << c.get_den().get_str() << '\n';
            }
        return ok;
    }

    std::optional<EngineDisagreement> diff;
    try {
        diff = compare_engines(scheme, cfg.order);
    } catch (const NegativeCount& e) {
        return report_deadlock(scheme, cfg.order, e.what(), err);
    }
    if (diff) {
        out << "mismatch at n = " << diff->n << ", monomial "
            << render_monomial(diff->monomial, names) << ": series "
            << to_string(diff->series_coefficient) << ", exact engine "
            << to_string(diff->engine_coefficient) << "\n";
        return mismatch;
    }
    out << "series and exact engine agree for n = 0.." << cfg.order << "\n";
    return ok;
}

struct FormulaRun {
    Pmf law;
    UrnScheme scheme;
    std::size_t color;
};

FormulaRun evaluate_formula(const RunConfig& cfg)
{
    const Rational p = parse_rational(cfg.p);
    const std::int64_t n = cfg.n;
    Pmf law;
    auto fill = [&](Support s, auto&& f) {
        for (std::int64_t v = s.lo; v <= s.hi; ++v)
            if (Rational q = f(v); q != 0)
                law[v] = q;
    };
    if (cfg.formula == "coupon-delay") {
        fill(coupon_delay_support(cfg.b0),
             [&](std::int64_t b) { return coupon_delay_pmf(cfg.b0, cfg.w0, p, n, b); });
        return {law, presets::coupon_delay(p, {cfg.b0, cfg.w0}), 0};
    }
    if (cfg.formula == "binomial-half") {
        fill(binomial_half_support(cfg.theta, cfg.b0, n),
             [&](std::int64_t b) { return binomial_half_pmf(cfg.theta, cfg.b0, cfg.w0, n, b); });
        return {law, presets::binomial(cfg.theta, Rational(1, 2), {cfg.b0, cfg.w0}), 0};
    }
    if (cfg.formula == "uniform") {
        fill(uniform_support(cfg.theta, cfg.b0, n),
             [&](std::int64_t b) { return uniform_pmf(cfg.theta, cfg.b0, cfg.w0, n, b); });
        return {law, presets::uniform(cfg.theta, {cfg.b0, cfg.w0}), 0};
    }
    if (cfg.formula == "two-type-coupon-red" || cfg.formula == "two-type-coupon-red-general") {
        const bool general = cfg.formula == "two-type-coupon-red-general";
        fill(two_type_coupon_red_support(cfg.b0, cfg.r0), [&](std::int64_t r) {
            return general ? two_type_coupon_red_pmf_general(cfg.b0, cfg.r0, cfg.g0, p, n, r)
                           : two_type_coupon_red_pmf(cfg.b0, cfg.r0, cfg.g0, p, n, r);
        });
        return {law, presets::three_color_coupon(p, {cfg.b0, cfg.r0, cfg.g0}), 1};
    }
    throw UsageError("unknown formula '" + cfg.formula +
                     "' (coupon-delay, binomial-half, uniform, two-type-coupon-red, "
                     "two-type-coupon-red-general)");
}

int cmd_closed_form(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 0)
        throw UsageError("--n is required and must be nonnegative");
    FormulaRun run = evaluate_formula(cfg);
    Sink sink(cfg.out, out);
    std::ostringstream params;
    params << "formula=" << cfg.formula << " n=" << cfg.n << " theta=" << cfg.theta
           << " b0=" << cfg.b0 << " w0=" << cfg.w0 << " r0=" << cfg.r0 << " g0=" << cfg.g0
           << " p=" << cfg.p;
    *sink << provenance_line(scheme_hash(run.scheme), params.str()) << "\n";
    write_distribution_csv(*sink, run.law);

    if (!cfg.check)
        return ok;
    Pmf exact = marginal_pmf(evolve(run.scheme, cfg.n), run.color);
    std::map<std::int64_t, bool> keys;
    for (const auto& [v, q] : exact)
        keys[v] = true;
    for (const auto& [v, q] : run.law)
        keys[v] = true;
    for (const auto& [v, unused] : keys) {
        Rational a = run.law.contains(v) ? run.law.at(v) : Rational(0);
        Rational b = exact.contains(v) ? exact.at(v) : Rational(0);
        if (a != b) {
            err << "check: mismatch at value " << v << ": formula " << to_string(a)
                << ", exact engine " << to_string(b) << "\n";
            return mismatch;
        }
    }
    err << "check: formula matches the exact engine on " << keys.size() << " support points\n";
    return ok;
}

struct SweepPoint {
    std::string label;
    Rational p;
};

std::vector<SweepPoint> parse_p_list(const std::string& text)
{
    std::vector<SweepPoint> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            out.push_back({item, parse_rational(item)});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (out.empty())
        throw UsageError("empty p list");
    return out;
}

std::string file_label(std::string label)
{
    for (char& c : label)
        if (c == '/')
            c = '_';
    return label;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream f(path);
    if (!f)
        throw UsageError("cannot write '" + path.string() + "'");
    return f;
}

int cmd_figures(const RunConfig& cfg, std::ostream& out)
{
    namespace fs = std::filesystem;
    fs::create_directories(cfg.out_dir);
    Configuration initial{1, 1};
    if (!cfg.initial.empty())
        initial = Configuration(parse_int_list(cfg.initial));

    if (cfg.figure == "fig1") {
        const std::int64_t histories = cfg.histories < 0 ? 100 : cfg.histories;
        const std::int64_t steps = cfg.n < 0 ? 50 : cfg.n;
        auto points = parse_p_list(cfg.sweep_p.empty() ? "0,0.4,0.8,1" : cfg.sweep_p);
        std::vector<fs::path> written;
        for (const auto& pt : points) {
            UrnScheme scheme = presets::polya_friedman(pt.p, initial);
            SimulationPlan plan{&scheme, steps, histories, cfg.seed};
            auto trajectories = simulate_histories(plan, cfg.workers);
            fs::path path = fs::path(cfg.out_dir) / ("fig1_p" + file_label(pt.label) + ".csv");
            auto f = open_output(path);
            f << provenance_line(scheme_hash(scheme),
                                 "figure=fig1 p=" + pt.label + " histories=" +
                                     std::to_string(histories) + " steps=" +
                                     std::to_string(steps) + " seed=" + std::to_string(cfg.seed))
              << "\n";
            write_trajectories_csv(f, trajectories);
            written.push_back(path);
            out << "wrote " << path.string() << "\n";
        }
        if (cfg.gnuplot) {
            fs::path gp = fs::path(cfg.out_dir) / "fig1.gp";
            auto f = open_output(gp);
            f << "set datafile separator ','\nset datafile commentschars '#'\n"
                 "set xlabel 'draws'\nset ylabel 'black balls'\nunset key\n";
            f << "set multiplot layout 1," << written.size() << "\n";
            for (const auto& w : written)
                f << "plot '" << w.filename().string()
                  << "' every ::1 using 2:3 with lines lc rgb '#80000000'\n";
            f << "unset multiplot\n";
            out << "wrote " << gp.string() << "\n";
        }
        return ok;
    }

    if (cfg.figure == "fig2") {
        const std::int64_t n = cfg.n < 0 ? 200 : cfg.n;
        auto points = parse_p_list(cfg.sweep_p.empty()
                                       ? "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1"
                                       : cfg.sweep_p);
        std::vector<fs::path> written;
        for (const auto& pt : points) {
            UrnScheme scheme = presets::polya_friedman(pt.p, initial);
            Pmf law = marginal_pmf(evolve(scheme, n, cfg.workers), 0);
            fs::path path = fs::path(cfg.out_dir) / ("fig2_p" + file_label(pt.label) + ".csv");
            auto f = open_output(path);
            f << provenance_line(scheme_hash(scheme), "figure=fig2 p=" + pt.label +
                                                          " n=" + std::to_string(n) +
                                                          " source=exact")
              << "\n";
            write_distribution_csv(f, law);
            written.push_back(path);
            out << "wrote " << path.string() << "\n";
        }
        if (cfg.gnuplot) {
            fs::path gp = fs::path(cfg.out_dir) / "fig2.gp";
            auto f = open_output(gp);
            f << "set datafile separator ','\nset datafile commentschars '#'\n"
                 "set xlabel 'black balls / draws'\nset ylabel 'normalized probability'\n";
            f << "plot ";
            for (std::size_t i = 0; i < written.size(); ++i)
                f << (i ? ", \\\n     " : "") << "'" << written[i].filename().string()
                  << "' every ::1 using ($1/" << n << "):($4*" << n << ") with lines title '"
                  << points[i].label << "'";
            f << "\n";
            out << "wrote " << gp.string() << "\n";
        }
        return ok;
    }
    throw UsageError("figure must be fig1 or fig2");
}

int simulate_one(const RunConfig& cfg, const UrnScheme& scheme, std::ostream& sink,
                 std::ostream& summary, const std::string& label)
{
    const std::size_t color = resolve_color(scheme, cfg.color);
    SimulationPlan plan{&scheme, cfg.n, cfg.histories, cfg.seed};
    Pmf empirical = empirical_pmf(plan, color, cfg.workers);

    std::optional<Pmf> exact;
    if (cfg.n <= cfg.exact_max_n) {
        try {
            exact = marginal_pmf(evolve(scheme, cfg.n), color);
        } catch (const NegativeCount&) {
        }
    }
    sink << provenance_line(scheme_hash(scheme),
                            label + " n=" + std::to_string(cfg.n) + " histories=" +
                                std::to_string(cfg.histories) + " seed=" +
                                std::to_string(cfg.seed) + " color=" +
                                scheme.color_names()[color])
         << "\n";
    write_histogram_csv(sink, exact ? &*exact : nullptr, empirical);

    Rational mean = 0;
    for (const auto& [v, q] : empirical)
        mean += q * v;
    summary << "histories: " << cfg.histories << ", steps: " << cfg.n << ", seed: " << cfg.seed
            << "\n";
    summary << "empirical mean: " << to_decimal(mean) << "\n";
    if (exact)
        summary << "total variation to exact: " << to_decimal(total_variation(*exact, empirical))
                << "\n";
    return ok;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    if (cfg.n < 0)
        throw UsageError("--n is required and must be nonnegative");
    if (cfg.histories < 1)
        throw UsageError("--histories is required and must be positive");

    try {
        if (cfg.sweep_p.empty()) {
            UrnScheme scheme = load_scheme(cfg);
            Sink sink(cfg.out, out);
            return simulate_one(cfg, scheme, *sink, sink.to_file() ? out : err, scheme_label(cfg));
        }

        if (cfg.preset.empty())
            throw UsageError("--sweep-p needs a --preset with a p parameter");
        namespace fs = std::filesystem;
        fs::create_directories(cfg.out_dir);
        const std::string base = cfg.preset.substr(0, cfg.preset.find(':'));
        std::string rest;
        if (auto colon = cfg.preset.find(':'); colon != std::string::npos) {
            std::stringstream ss(cfg.preset.substr(colon + 1));
            for (std::string kv; std::getline(ss, kv, ',');)
                if (kv.rfind("p=", 0) != 0)
                    rest += kv + ",";
        }
        for (const auto& pt : parse_p_list(cfg.sweep_p)) {
            RunConfig one = cfg;
            one.preset = base + ":" + rest + "p=" + pt.label;
            UrnScheme scheme = load_scheme(one);
            fs::path path = fs::path(cfg.out_dir) / (base + "_p" + file_label(pt.label) + ".csv");
            auto f = open_output(path);
            out << "wrote " << path.string() << "\n";
            simulate_one(one, scheme, f, out, scheme_label(one));
        }
        return ok;
    } catch (const DeadlockEncountered& e) {
        err << "error: " << e.what() << "\n";
        return untenable;
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Exact distributions and simulation for balanced Polya urns with random rules",
                 "urn"};
    app.require_subcommand(1, 1);

    auto scheme_opts = [&](CLI::App* sub) {
        sub->add_option("--scheme", cfg.scheme_file, "JSON scheme file");
        sub->add_option("--preset", cfg.preset,
                        "built-in scheme, e.g. polya-friedman:p=1/2, binomial:theta=2,p=1/2");
        sub->add_option("--initial", cfg.initial, "override the starting counts, e.g. 2,1");
    };

    auto* validate = app.add_subcommand("validate", "check balance and tenability");
    scheme_opts(validate);
    validate->add_option("--horizon", cfg.horizon, "draws explored when theta > 0");

    auto* exact = app.add_subcommand("exact", "exact law of one color after n draws");
    scheme_opts(exact);
    exact->add_option("--n", cfg.n, "number of draws")->required();
    exact->add_option("--color", cfg.color, "color index or name");
    exact->add_option("--out", cfg.out, "CSV output file (default stdout)");
    exact->add_option("--workers", cfg.workers, "threads per step");

    auto* series = app.add_subcommand("series", "differential system and its Taylor solution");
    scheme_opts(series);
    series->add_option("--order", cfg.order, "truncation order")->required();
    series->add_flag("--emit-system", cfg.emit_system, "print the differential system");
    series->add_flag("--emit-q", cfg.emit_q, "print q_0..q_order as CSV");
    series->add_flag("--check", cfg.check, "compare q_n with the exact engine");
    series->add_option("--out", cfg.out, "output file (default stdout)");

    auto* closed = app.add_subcommand("closed-form", "evaluate a closed-form law");
    closed->add_option("name", cfg.formula,
                       "coupon-delay | binomial-half | uniform | two-type-coupon-red | "
                       "two-type-coupon-red-general")
        ->required();
    closed->add_option("--n", cfg.n, "number of draws")->required();
    closed->add_option("--theta", cfg.theta);
    closed->add_option("--b0", cfg.b0);
    closed->add_option("--w0", cfg.w0);
    closed->add_option("--r0", cfg.r0);
    closed->add_option("--g0", cfg.g0);
    closed->add_option("--p", cfg.p);
    closed->add_flag("--check", cfg.check, "cross-check against the exact engine");
    closed->add_option("--out", cfg.out, "CSV output file (default stdout)");

    auto* figures = app.add_subcommand("figures", "emit figure data as CSV");
    figures->add_option("figure", cfg.figure, "fig1 | fig2")->required();
    figures->add_option("--out-dir", cfg.out_dir);
    figures->add_option("--seed", cfg.seed);
    figures->add_option("--n", cfg.n, "steps (fig1, default 50) or draws (fig2, default 200)");
    figures->add_option("--histories", cfg.histories, "fig1 histories (default 100)");
    figures->add_option("--p", cfg.sweep_p, "comma-separated p values");
    figures->add_option("--initial", cfg.initial, "starting counts (default 1,1)");
    figures->add_option("--workers", cfg.workers);
    figures->add_flag("--gnuplot", cfg.gnuplot, "also write a gnuplot script");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo histogram of one color");
    scheme_opts(simulate);
    simulate->add_option("--n", cfg.n, "draws per history")->required();
    simulate->add_option("--histories", cfg.histories, "number of histories")->required();
    simulate->add_option("--seed", cfg.seed);
    simulate->add_option("--color", cfg.color);
    simulate->add_option("--workers", cfg.workers);
    simulate->add_option("--exact-max-n", cfg.exact_max_n,
                         "largest n for which the exact law is added");
    simulate->add_option("--out", cfg.out, "CSV output file (default stdout)");
    simulate->add_option("--sweep-p", cfg.sweep_p, "comma-separated p values; one file each");
    simulate->add_option("--out-dir", cfg.out_dir, "directory for --sweep-p files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    for (auto* sub : app.get_subcommands())
        cfg.subcommand = sub->get_name();

    try {
        if (cfg.subcommand == "validate")
            return cmd_validate(cfg, out);
        if (cfg.subcommand == "exact")
            return cmd_exact(cfg, out, err);
        if (cfg.subcommand == "series")
            return cmd_series(cfg, out, err);
        if (cfg.subcommand == "closed-form")
            return cmd_closed_form(cfg, out, err);
        if (cfg.subcommand == "figures")
            return cmd_figures(cfg, out);
        if (cfg.subcommand == "simulate")
            return cmd_simulate(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return input_error;
    } catch (const InvariantError& e) {
        err << "invalid scheme: " << e.what() << "\n";
        return input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
    err << "error: no subcommand\n";
    return input_error;
}

} // namespace urn::cli
