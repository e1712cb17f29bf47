#ifndef DENSIFY_REPORT_HPP
#define DENSIFY_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "densify/chain.hpp"
#include "densify/graph.hpp"
#include "densify/metrics.hpp"

namespace densify::report {

inline constexpr int kSchemaVersion = 1;

/// {"n", "m", "labels", "edges"} with edges as [u, w], u < w, sorted.
nlohmann::json graph_to_json(const Graph& g);

nlohmann::json load_stats_to_json(const Graph& g, const LoadStats& stats);

/// Chain as innermost-first shells. Each entry carries the shell's members
/// (labels, sorted), the size of B_i, d(B_i, B_{i-1}) and d(B_i) as exact
/// fractions plus decimal renderings. core_k, when given, adds "k" per set.
nlohmann::json chain_to_json(const Graph& g, const Chain& chain,
                             const std::vector<std::size_t>* core_k = nullptr);

/// Inverse of chain_to_json. Throws std::invalid_argument when the document
/// does not describe a valid chain of g or its densities disagree with g.
Chain chain_from_json(const Graph& g, const nlohmann::json& doc);

/// One line per set: index, size, step density, decimal, shell labels.
std::string chain_to_tsv(const Graph& g, const Chain& chain);

/// Rows "i<TAB>fraction<TAB>decimal" with a header line.
std::string profile_to_tsv(const Profile& prof);

/// Decimal rendering used for densities in reports.
std::string decimal(const Rational& r);

}  // namespace densify::report

#endif  // DENSIFY_REPORT_HPP
