#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "twogon/coeffs.hpp"
#include "twogon/conv_analysis.hpp"
#include "twogon/series.hpp"

namespace twogon::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits, '.' separator, independent of the global locale.
std::string format_double(double v);

Json to_json(const coeffs::CoefficientTable& table);
void write_csv(std::ostream& out, const coeffs::CoefficientTable& table);
coeffs::CoefficientTable coefficient_table_from_json(const Json& j);

Json to_json(const conv::GrowthClass& growth);
Json to_json(const conv::ProbabilityEstimate& est);

/// Summary {"mode", "gamma", "limit", "theory"?} followed by the grid.
Json to_json(const series::AsymptoticEstimate& est, std::optional<double> theory = std::nullopt);
void write_csv(std::ostream& out, const series::AsymptoticEstimate& est);

/// Canonical text form used by every JSON command: two-space indent, newline.
std::string dump(const Json& j);

/// Parses a parameter-sequence description. Entries are `modulus[@phase]`;
/// a rule entry `const:x`, `fj:j` or `geom:base,ratio` ends the sequence and
/// generates its tail. Entries are separated by newlines, ';' or ','
/// (a rule keeps its own commas). '#' starts a comment. Throws ArgumentError.
conv::SequenceSpec parse_sequence_spec(std::string_view text);

}  // namespace twogon::io
