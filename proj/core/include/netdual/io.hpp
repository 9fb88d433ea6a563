#pragma once

#include <string>
#include <vector>

#include "netdual/arrangement.hpp"
#include "netdual/betti.hpp"
#include "netdual/nets.hpp"
#include "netdual/polynomial.hpp"

namespace netdual {

/// {"n": int, "multiple_points": [[1-based line indices], ...]}
LineArrangement arrangement_from_json(const std::string& text);
std::string arrangement_to_json(const LineArrangement& arr);

/// One object carrying the arrangement and, when present, the net candidate
/// and coordinates.
std::string catalog_entry_to_json(const CatalogEntry& entry);

/// One line per RationalLine: "a b c", integers or fractions; '#' comments
/// and blank lines ignored.
std::vector<RationalLine> lines_from_text(const std::string& text);

/// First line: vertex count; then one "u v" edge per line (1-based).
SimpleGraph graph_from_text(const std::string& text);

/// {"blocks": [[1-based], ...], "X": [[1-based], ...]}
NetCandidate net_candidate_from_json(const std::string& text);
std::string net_candidate_to_json(const NetCandidate& candidate);

std::string verdict_to_json(const NetVerdict& verdict, const GroundSet& ground);

/// {"subject": "...", "entries": [{"i":..,"j":..,"rank":..}...]} plus the
/// multigraded entries as 1-based index lists when requested.
std::string betti_to_json(const BettiTable& table, bool multigraded);

std::string ideal_to_json(const MonomialIdeal& ideal);
std::string polynomial_to_json(const IntPolynomial& p);
std::string series_to_json(const HilbertSeries& s);

std::string read_file(const std::string& path);

}  // namespace netdual
