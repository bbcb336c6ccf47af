#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "urn/exact_engine.hpp"
#include "urn/simulator.hpp"

namespace urn {

inline constexpr const char* tool_version = "1.0.0";

/// "# urn-tool <version> scheme=<hash> <params>" provenance comment.
std::string provenance_line(const std::string& scheme_hash, const std::string& params);

/// `value,probability_num,probability_den,probability_float`, one row per
/// support point in increasing order.
void write_distribution_csv(std::ostream& out, const Pmf& law);

/// Distribution columns plus `source`, exact rows first.
void write_histogram_csv(std::ostream& out, const Pmf* exact, const Pmf& empirical);

/// `history_id,step,count_color_0,...,count_color_{k-1}`.
void write_trajectories_csv(std::ostream& out, const std::vector<Trajectory>& histories);

} // namespace urn
