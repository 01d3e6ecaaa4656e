#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "tmv/stats_io.hpp"

namespace tmv {
namespace {

CountTable small_table() {
  CountTable t;
  t.title = "t";
  t.rows = {"presPerf", "past"};
  t.columns = {"Perfekt", "Präsens", "Konj II, past"};
  t.counts = {{1, 1, 0}, {0, 0, 0}};
  return t;
}

TEST(StatsIo, CsvRowNormalisedWithQuoting) {
  std::ostringstream out;
  write_csv(out, small_table());
  EXPECT_EQ(out.str(),
            "Tense,Perfekt,Präsens,\"Konj II, past\"\n"
            "presPerf,0.500000,0.500000,0.000000\n"
            "past,0.000000,0.000000,0.000000\n");
}

TEST(StatsIo, PlotDataSeriesAsColumns) {
  std::ostringstream rows;
  write_plot_data(rows, small_table());
  std::ostringstream csv;
  write_csv(csv, small_table());
  EXPECT_EQ(rows.str(), csv.str());

  std::ostringstream cols;
  write_plot_data(cols, small_table(), true);
  EXPECT_EQ(cols.str(),
            "Tense,presPerf,past\n"
            "Perfekt,0.500000,0.000000\n"
            "Präsens,0.500000,0.000000\n"
            "\"Konj II, past\",0.000000,0.000000\n");
}

TEST(StatsIo, JsonCarriesCountsExactFrequenciesAndMetadata) {
  CorrespondenceMatrix m(Direction::kEnDe, {}, {}, std::set<Tense>{Tense::kPresentPerfect});
  m.add_corpus_id("news");
  TMVLabel en;
  en.tense = Tense::kPresentPerfect;
  TMVLabel de;
  de.language = Language::kGerman;
  de.tense = Tense::kPerfekt;
  m.add(en, de);
  m.add(en, de);
  de.tense = Tense::kPraesens;
  m.add(en, de);

  std::ostringstream out;
  write_json(out, m.table(), matrix_metadata_json(m));
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["rows"], nlohmann::json::array({"presPerf"}));
  EXPECT_EQ(j["total"], 3);
  EXPECT_EQ(j["row_totals"][0], 3);
  const auto& cols = j["columns"];
  const auto perfekt = std::find(cols.begin(), cols.end(), "Perfekt") - cols.begin();
  EXPECT_EQ(j["counts"][0][perfekt], 2);
  EXPECT_EQ(j["row_freq"][0][perfekt], "2/3");
  EXPECT_EQ(j["row_freq_fixed"][0][perfekt], "0.666667");
  EXPECT_EQ(j["metadata"]["kind"], "correspondence_matrix");
  EXPECT_EQ(j["metadata"]["direction"], "en-de");
  EXPECT_EQ(j["metadata"]["corpus_ids"], nlohmann::json::array({"news"}));
  EXPECT_EQ(j["metadata"]["row_filter"], nlohmann::json::array({"presPerf"}));
  EXPECT_EQ(j["metadata"]["source_filter"]["mood"], "any");
}

TEST(StatsIo, DistributionMetadata) {
  LabelFilter f;
  f.mood = Mood::kIndicative;
  f.finiteness = FinitenessFilter::kFinite;
  const TenseDistribution d(Language::kGerman, f, "crawl");
  const auto j = nlohmann::json::parse(distribution_metadata_json(d));
  EXPECT_EQ(j["language"], "de");
  EXPECT_EQ(j["filter"]["mood"], "indicative");
  EXPECT_EQ(j["filter"]["finiteness"], "finite");
  EXPECT_EQ(j["total_vcs"], 0);
}

TEST(StatsIo, EmitFormatNames) {
  EXPECT_EQ(parse_emit_format("csv"), EmitFormat::kCsv);
  EXPECT_EQ(parse_emit_format("json"), EmitFormat::kJson);
  EXPECT_EQ(parse_emit_format("plot-data"), EmitFormat::kPlotData);
  EXPECT_FALSE(parse_emit_format("xml"));
}

}  // namespace
}  // namespace tmv
