#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "tmv/stats.hpp"

namespace tmv {

enum class EmitFormat { kCsv, kJson, kPlotData };

std::optional<EmitFormat> parse_emit_format(std::string_view text);

/// Row-normalised frequencies, 6 decimals, every row of the table.
void write_csv(std::ostream& out, const CountTable& table);

/// Figure-table layout with first column `Tense`. Each table row is one
/// normalisation unit. By default every row becomes a line. With
/// `series_as_columns` the rows become columns and the labels become
/// lines, which is the layout of the per-corpus and per-Konjunktiv figures.
/// Rows with no observations are kept so the axis matches the figure.
void write_plot_data(std::ostream& out, const CountTable& table, bool series_as_columns = false);

/// Counts, exact and fixed-point frequencies, and metadata.
void write_json(std::ostream& out, const CountTable& table, const std::string& metadata_json);

std::string matrix_metadata_json(const CorrespondenceMatrix& m);
std::string distribution_metadata_json(const TenseDistribution& d);

}  // namespace tmv
