#include "tmv/stats_io.hpp"

#include <ostream>

#include "json.hpp"

namespace tmv {

namespace {

using json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json filter_json(const LabelFilter& f) {
  json j;
  j["mood"] = f.mood ? std::string(to_string(*f.mood)) : "any";
  j["voice"] = f.voice ? std::string(to_string(*f.voice)) : "any";
  j["finiteness"] = f.finiteness == FinitenessFilter::kAny      ? "any"
                    : f.finiteness == FinitenessFilter::kFinite ? "finite"
                                                                : "non_finite";
  j["include_imperative"] = f.include_imperative;
  return j;
}

}  // namespace

std::optional<EmitFormat> parse_emit_format(std::string_view text) {
  if (text == "csv") return EmitFormat::kCsv;
  if (text == "json") return EmitFormat::kJson;
  if (text == "plot-data" || text == "plot_data") return EmitFormat::kPlotData;
  return std::nullopt;
}

void write_csv(std::ostream& out, const CountTable& table) {
  out << "Tense";
  for (const auto& c : table.columns) out << ',' << csv_field(c);
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << csv_field(table.rows[r]);
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << ',' << table.row_freq(r, c).fixed();
    out << '\n';
  }
}

void write_plot_data(std::ostream& out, const CountTable& table, bool series_as_columns) {
  if (!series_as_columns) {
    write_csv(out, table);
    return;
  }
  out << "Tense";
  for (const auto& r : table.rows) out << ',' << csv_field(r);
  out << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << csv_field(table.columns[c]);
    for (std::size_t r = 0; r < table.rows.size(); ++r) out << ',' << table.row_freq(r, c).fixed();
    out << '\n';
  }
}

void write_json(std::ostream& out, const CountTable& table, const std::string& metadata_json) {
  json j;
  j["title"] = table.title;
  j["rows"] = table.rows;
  j["columns"] = table.columns;
  j["counts"] = table.counts;
  json totals = json::array();
  json exact = json::array();
  json fixed = json::array();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    totals.push_back(table.row_total(r));
    json er = json::array();
    json fr = json::array();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const Rational q = table.row_freq(r, c);
      er.push_back(q.str());
      fr.push_back(q.fixed());
    }
    exact.push_back(std::move(er));
    fixed.push_back(std::move(fr));
  }
  j["row_totals"] = totals;
  j["total"] = table.total();
  j["row_freq"] = exact;
  j["row_freq_fixed"] = fixed;
  j["metadata"] = metadata_json.empty() ? json::object() : json::parse(metadata_json);
  out << j.dump(2) << '\n';
}

std::string matrix_metadata_json(const CorrespondenceMatrix& m) {
  json j;
  j["kind"] = "correspondence_matrix";
  j["direction"] = std::string(to_string(m.direction()));
  j["corpus_ids"] = m.corpus_ids();
  j["source_filter"] = filter_json(m.source_filter());
  j["target_filter"] = filter_json(m.target_filter());
  if (m.row_filter()) {
    json rows = json::array();
    for (Tense t : m.row_labels()) {
      if (m.row_filter()->count(t)) rows.push_back(std::string(display_label(t)));
    }
    j["row_filter"] = rows;
  } else {
    j["row_filter"] = nullptr;
  }
  j["total_pairs"] = m.total();
  return j.dump();
}

std::string distribution_metadata_json(const TenseDistribution& d) {
  json j;
  j["kind"] = "tense_distribution";
  j["language"] = std::string(to_string(d.language()));
  j["corpus_ids"] = d.corpus_ids();
  j["filter"] = filter_json(d.filter());
  j["total_vcs"] = d.total();
  return j.dump();
}

}  // namespace tmv
