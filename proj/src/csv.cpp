#include "urn/csv.hpp"

namespace urn {

std::string provenance_line(const std::string& scheme_hash, const std::string& params)
{
    std::string line = std::string("# urn-tool ") + tool_version + " scheme=" + scheme_hash;
    if (!params.empty())
        line += " " + params;
    return line;
}

namespace {

void write_row(std::ostream& out, std::int64_t value, const Rational& p)
{
    out << value << ',' << p.get_num().get_str() << ',' << p.get_den().get_str() << ','
        << to_decimal(p);
}

} // namespace

void write_distribution_csv(std::ostream& out, const Pmf& law)
{
    out << "value,probability_num,probability_den,probability_float\n";
    for (const auto& [v, p] : law) {
        write_row(out, v, p);
        out << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const Pmf* exact, const Pmf& empirical)
{
    out << "value,probability_num,probability_den,probability_float,source\n";
    if (exact)
        for (const auto& [v, p] : *exact) {
            write_row(out, v, p);
            out << ",exact\n";
        }
    for (const auto& [v, p] : empirical) {
        write_row(out, v, p);
        out << ",empirical\n";
    }
}

void write_trajectories_csv(std::ostream& out, const std::vector<Trajectory>& histories)
{
    const std::size_t k = histories.empty() || histories.front().states.empty()
                              ? 0
                              : histories.front().states.front().colors();
    out << "history_id,step";
    for (std::size_t i = 0; i < k; ++i)
        out << ",count_color_" << i;
    out << '\n';
    for (std::size_t h = 0; h < histories.size(); ++h) {
        const auto& states = histories[h].states;
        for (std::size_t s = 0; s < states.size(); ++s) {
            out << h << ',' << s;
            for (auto c : states[s].counts)
                out << ',' << c;
            out << '\n';
        }
    }
}

} // namespace urn
