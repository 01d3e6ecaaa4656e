#include "tmvtool/reproduce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tmv/tagset.hpp"

namespace tmv::tool {

namespace {

constexpr std::array<std::pair<ReproTable, std::string_view>, 8> kTableNames = {{
    {ReproTable::kPresentPerfect, "present-perfect"},
    {ReproTable::kConditional, "conditional"},
    {ReproTable::kKonjunktiv, "konjunktiv"},
    {ReproTable::kNonFinite, "non-finite"},
    {ReproTable::kOverall, "overall"},
    {ReproTable::kFiniteness, "finiteness"},
    {ReproTable::kDistribution, "distribution"},
    {ReproTable::kSein, "sein"},
}};

constexpr std::array<std::pair<ReferenceCorpus, std::string_view>, 6> kCorpusNames = {{
    {ReferenceCorpus::kNews, "news"},
    {ReferenceCorpus::kEuroparl, "europarl"},
    {ReferenceCorpus::kCrawl, "crawl"},
    {ReferenceCorpus::kPattr, "pattr"},
    {ReferenceCorpus::kCombined, "combined"},
    {ReferenceCorpus::kOther, "other"},
}};

LabelFilter subjunctive_only() {
  LabelFilter f;
  f.mood = Mood::kSubjunctive;
  return f;
}

LabelFilter indicative_active_finite() {
  LabelFilter f;
  f.mood = Mood::kIndicative;
  f.voice = Voice::kActive;
  f.finiteness = FinitenessFilter::kFinite;
  return f;
}

std::set<Tense> present_perfect_rows() {
  return {Tense::kPresentPerfect, Tense::kPresentPerfectProgressive};
}

std::set<Tense> conditional_rows() {
  return {Tense::kConditionalI, Tense::kConditionalIProgressive, Tense::kConditionalII,
          Tense::kConditionalIIProgressive};
}

std::set<Tense> non_finite_rows() { return {Tense::kGerund, Tense::kToInfinitive}; }

// Keeps only the named columns, in the given order.
CountTable select_columns(const CountTable& t, const std::vector<std::string>& names) {
  CountTable out;
  out.title = t.title;
  out.rows = t.rows;
  out.columns = names;
  out.counts.assign(t.rows.size(), std::vector<std::uint64_t>(names.size(), 0));
  for (std::size_t c = 0; c < names.size(); ++c) {
    const auto it = std::find(t.columns.begin(), t.columns.end(), names[c]);
    if (it == t.columns.end()) continue;
    const auto src = static_cast<std::size_t>(it - t.columns.begin());
    for (std::size_t r = 0; r < t.rows.size(); ++r) out.counts[r][c] = t.counts[r][src];
  }
  return out;
}

std::optional<double> lookup(const CountTable& t, const std::string& row, const std::string& col) {
  std::size_t r = 0;
  if (!row.empty()) {
    const auto it = std::find(t.rows.begin(), t.rows.end(), row);
    if (it == t.rows.end()) return std::nullopt;
    r = static_cast<std::size_t>(it - t.rows.begin());
  } else if (t.rows.empty()) {
    return std::nullopt;
  }
  const auto cit = std::find(t.columns.begin(), t.columns.end(), col);
  if (cit == t.columns.end() || t.row_total(r) == 0) return std::nullopt;
  return t.row_freq(r, static_cast<std::size_t>(cit - t.columns.begin())).value();
}

// Column with the largest share in a row; nullopt for an empty row.
std::optional<std::string> argmax(const CountTable& t, const std::string& row) {
  const auto it = std::find(t.rows.begin(), t.rows.end(), row);
  if (it == t.rows.end()) return std::nullopt;
  const auto r = static_cast<std::size_t>(it - t.rows.begin());
  if (t.row_total(r) == 0) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    if (t.counts[r][c] > t.counts[r][best]) best = c;
  }
  return t.columns[best];
}

void add_row(std::vector<ReferenceCell>& out, ReproTable table, const std::string& row,
             const std::vector<std::string>& columns, const std::vector<double>& values) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out.push_back({table, row, columns[i], values[i]});
  }
}

const std::vector<std::string> kFineColumns = {
    "Präsens",     "Präteritum", "Perfekt",     "Pluperfekt",   "Futur I",
    "Futur II",    "Konj I pres", "Konj I past", "Konj II pres", "Konj II past"};

const std::vector<std::string> kCoarseColumns = {
    "Präsens", "Perfekt",      "Präteritum",    "Pluperfekt", "Futur I",
    "Futur II", "Konjunktiv I", "Konjunktiv II", "-"};

const std::vector<std::string> kIndicativeColumns = {"Präsens",    "Präteritum", "Perfekt",
                                                     "Pluperfekt", "Futur I",    "Futur II"};

}  // namespace

std::string_view to_string(ReproTable t) {
  for (const auto& [k, name] : kTableNames) {
    if (k == t) return name;
  }
  return "?";
}

std::optional<ReproTable> parse_repro_table(std::string_view text) {
  for (const auto& [k, name] : kTableNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

const std::vector<ReproTable>& all_repro_tables() {
  static const std::vector<ReproTable> tables = [] {
    std::vector<ReproTable> v;
    for (const auto& entry : kTableNames) v.push_back(entry.first);
    return v;
  }();
  return tables;
}

std::string_view to_string(ReferenceCorpus c) {
  for (const auto& [k, name] : kCorpusNames) {
    if (k == c) return name;
  }
  return "other";
}

std::optional<ReferenceCorpus> parse_reference_corpus(std::string_view text) {
  for (const auto& [k, name] : kCorpusNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::vector<ReferenceCell> reference_cells(ReferenceCorpus corpus) {
  std::vector<ReferenceCell> out;
  using T = ReproTable;
  switch (corpus) {
    case ReferenceCorpus::kEuroparl:
      add_row(out, T::kPresentPerfect, "presPerf", kFineColumns,
              {0.11731, 0.1915, 0.5842, 0.0053, 0.0009, 0.0008, 0.0009, 0.0116, 0.0008, 0.0019});
      add_row(out, T::kPresentPerfect, "presPerfProg", kFineColumns,
              {0.3762, 0.0829, 0.4885, 0.0044, 0.0016, 0.0004, 0.0078, 0.0128, 0.0013, 0.0028});
      add_row(out, T::kNonFinite, "nonFinite", kCoarseColumns,
              {0.5060, 0.0030, 0.0569, 0.0026, 0.0410, 0.0022, 0.0104, 0.0281, 0.3069});
      add_row(out, T::kFiniteness, "English", {"non-finite"}, {0.182});
      add_row(out, T::kFiniteness, "German", {"non-finite"}, {0.062});
      add_row(out, T::kDistribution, "", kIndicativeColumns,
              {0.754, 0.081, 0.107, 0.0049, 0.040, 0.0016});
      break;
    case ReferenceCorpus::kNews:
      add_row(out, T::kConditional, "condI", kCoarseColumns,
              {0.0952110112615, 0.00432260266181, 0.224320327608, 0.00699579115004,
               0.00722329655329, 0.000455010806507, 0.0210442498009, 0.628995563645,
               0.0114321465135});
      add_row(out, T::kConditional, "condIProg", kCoarseColumns,
              {0, 0, 0.2, 0, 0, 0, 0, 0.8, 0});
      add_row(out, T::kConditional, "condII", kCoarseColumns,
              {0.0106809078772, 0.0253671562083, 0.0320427236315, 0.0100133511348,
               0.000667556742323, 0.000667556742323, 0.00133511348465, 0.917222963952,
               0.00200267022697});
      add_row(out, T::kConditional, "condIIProg", kCoarseColumns,
              {0, 0.2, 0, 0, 0, 0, 0, 0.8, 0});
      add_row(out, T::kNonFinite, "nonFinite", kCoarseColumns,
              {0.3070, 0.0365, 0.1019, 0.0069, 0.0408, 0.0025, 0.0101, 0.0531, 0.4407});
      add_row(out, T::kFiniteness, "English", {"non-finite"}, {0.167});
      add_row(out, T::kFiniteness, "German", {"non-finite"}, {0.079});
      add_row(out, T::kDistribution, "", kIndicativeColumns,
              {0.660, 0.199, 0.081, 0.011, 0.0358, 0.0018});
      // 190 composed-past against 10,247 Präteritum occurrences.
      add_row(out, T::kSein, "sein", {"composed past", "Präteritum"},
              {190.0 / 10437.0, 10247.0 / 10437.0});
      break;
    case ReferenceCorpus::kCrawl:
      add_row(out, T::kDistribution, "", kIndicativeColumns,
              {0.794, 0.128, 0.050, 0.0064, 0.015, 0.001});
      break;
    case ReferenceCorpus::kPattr:
      add_row(out, T::kDistribution, "", kIndicativeColumns,
              {0.970, 0.010, 0.016, 0.0006, 0.0013, 0.0003});
      break;
    case ReferenceCorpus::kCombined:
      add_row(out, T::kOverall, "presPerf", kCoarseColumns,
              {0.232838227101, 0.491376142439, 0.125730508897, 0.140980808213, 0.00144027311846,
               0.000160030346495, 0.00429711115589, 0.00317689873043, 0});
      add_row(out, T::kOverall, "condI", kCoarseColumns,
              {0.251467555132, 0.0157140178559, 0.108851484863, 0.00220674137856,
               0.00630291491786, 0.000198318261145, 0.0114087086957, 0.603850258895, 0});
      add_row(out, T::kOverall, "condIProg", kCoarseColumns,
              {0.277693856999, 0.0264350453172, 0.195871097684, 0.00302114803625,
               0.00981873111782, 0.000503524672709, 0.00881168177241, 0.477844914401, 0});
      add_row(out, T::kOverall, "condII", kCoarseColumns,
              {0.0713068375486, 0.0373576930943, 0.0724657440862, 0.0175199400095,
               0.000818051673597, 0.000340854863999, 0.00443111323199, 0.795759765492, 0});
      add_row(out, T::kOverall, "condIIProg", kCoarseColumns,
              {0.0972222222222, 0.0555555555556, 0.166666666667, 0.0138888888889, 0, 0, 0,
               0.666666666667, 0});
      break;
    case ReferenceCorpus::kOther:
      break;
  }
  return out;
}

Reproduction::Reproduction(std::string corpus_id)
    : corpus_id_(std::move(corpus_id)),
      present_perfect_(Direction::kEnDe, {}, {}, present_perfect_rows()),
      conditional_(Direction::kEnDe, {}, {}, conditional_rows()),
      konjunktiv_(Direction::kEnDe, {}, subjunctive_only()),
      non_finite_(Direction::kEnDe, {}, {}, non_finite_rows()),
      overall_(Direction::kEnDe),
      distribution_(Language::kGerman, indicative_active_finite(), corpus_id_),
      sein_("sein", Voice::kActive) {
  for (auto* m : {&present_perfect_, &conditional_, &konjunktiv_, &non_finite_, &overall_}) {
    m->add_corpus_id(corpus_id_);
  }
}

void Reproduction::add(const SentencePairResult& r) {
  for (const auto& p : r.pairing.pairs) {
    for (auto* m : {&present_perfect_, &conditional_, &konjunktiv_, &non_finite_, &overall_}) {
      m->add(p.en.label, p.de.label);
    }
  }
  for (const auto& v : r.en.vcs) en_ratio_.add(v.label);
  for (const auto& v : r.de.vcs) {
    de_ratio_.add(v.label);
    distribution_.add(v.label);
    if (v.vc.main_verb > 0) {
      sein_.add(tags::lemma_of(r.de.sentence.at(v.vc.main_verb), Language::kGerman), v.label);
    }
  }
}

CountTable Reproduction::table(ReproTable t) const {
  switch (t) {
    case ReproTable::kPresentPerfect: {
      CountTable out = present_perfect_.table(false);
      out.title = "German correspondences of presPerf and presPerfProg";
      return out;
    }
    case ReproTable::kConditional: {
      CountTable out = conditional_.table(true);
      out.title = "German correspondences of the conditionals";
      return out;
    }
    case ReproTable::kKonjunktiv: {
      CountTable out = select_columns(konjunktiv_.table(true), {"Konjunktiv I", "Konjunktiv II"});
      out.title = "English tenses over Konjunktiv I and II";
      return out;
    }
    case ReproTable::kNonFinite: {
      const CountTable rows = non_finite_.table(true);
      CountTable out;
      out.title = "German correspondences of gerunds and to-infinitives";
      out.rows = {"nonFinite"};
      out.columns = rows.columns;
      out.counts.assign(1, std::vector<std::uint64_t>(rows.columns.size(), 0));
      for (const auto& row : rows.counts) {
        for (std::size_t c = 0; c < row.size(); ++c) out.counts[0][c] += row[c];
      }
      return out;
    }
    case ReproTable::kOverall: {
      CountTable out = overall_.table(true);
      out.title = "German correspondences of every English tense";
      return out;
    }
    case ReproTable::kFiniteness: {
      CountTable out;
      out.title = "Share of non-finite complexes";
      out.rows = {"English", "German"};
      out.columns = {"non-finite", "finite"};
      out.counts = {{en_ratio_.non_finite, en_ratio_.total - en_ratio_.non_finite},
                    {de_ratio_.non_finite, de_ratio_.total - de_ratio_.non_finite}};
      return out;
    }
    case ReproTable::kDistribution: {
      CountTable out = select_columns(distribution_.table(false), kIndicativeColumns);
      out.title = "German indicative active tenses";
      return out;
    }
    case ReproTable::kSein: {
      CountTable out;
      out.title = "sein in active voice";
      out.rows = {"sein"};
      out.columns = {"composed past", "Präteritum"};
      out.counts = {{sein_.count(Tense::kPerfekt) + sein_.count(Tense::kPlusquamperfekt),
                     sein_.count(Tense::kPraeteritum)}};
      return out;
    }
  }
  return {};
}

bool CellCheck::ok(double tolerance) const {
  // Half a basis point of slack absorbs the rounding of published values.
  return observed && std::fabs(*observed - reference.value) <= tolerance + 5e-5;
}

std::size_t ReproductionReport::cells_within() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [&](const CellCheck& c) { return c.ok(tolerance); }));
}

std::size_t ReproductionReport::cells_compared() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const CellCheck& c) { return c.observed.has_value(); }));
}

bool ReproductionReport::orderings_hold() const {
  return std::all_of(orderings.begin(), orderings.end(),
                     [](const OrderingCheck& o) { return o.holds.value_or(true); });
}

void ReproductionReport::write(std::ostream& out) const {
  out << "table\trow\tcolumn\treference\tobserved\tdiff_pp\tstatus\n";
  for (const auto& c : cells) {
    std::ostringstream line;
    line << std::fixed << std::setprecision(4);
    line << to_string(c.reference.table) << '\t' << (c.reference.row.empty() ? "*" : c.reference.row)
         << '\t' << c.reference.column << '\t' << c.reference.value << '\t';
    if (c.observed) {
      line << *c.observed << '\t' << std::setprecision(2) << (*c.observed - c.reference.value) * 100
           << '\t' << (c.ok(tolerance) ? "ok" : "off");
    } else {
      line << "-\t-\tno data";
    }
    out << line.str() << '\n';
  }
  for (const auto& o : orderings) {
    out << "# ordering: " << o.description << ": "
        << (o.holds ? (*o.holds ? "holds" : "violated") : "no data") << '\n';
  }
  out << "# cells within " << tolerance * 100 << " pp: " << cells_within() << '/' << cells.size()
      << " (" << cells_compared() << " with data)\n";
}

ReproductionReport compare(const Reproduction& repro, ReferenceCorpus corpus,
                           const std::set<ReproTable>& tables, double tolerance) {
  ReproductionReport report;
  report.tolerance = tolerance;
  for (const auto& cell : reference_cells(corpus)) {
    if (!tables.count(cell.table)) continue;
    const CountTable t = repro.table(cell.table);
    report.cells.push_back({cell, lookup(t, cell.row, cell.column)});
  }

  if (tables.count(ReproTable::kPresentPerfect)) {
    const CountTable t = repro.table(ReproTable::kPresentPerfect);
    const auto top = argmax(t, "presPerf");
    report.orderings.push_back(
        {"Perfekt is the most frequent correspondent of presPerf",
         top ? std::optional<bool>(*top == "Perfekt") : std::nullopt});
  }
  if (tables.count(ReproTable::kConditional)) {
    const CountTable t = repro.table(ReproTable::kConditional);
    for (const std::string row : {"condI", "condIProg", "condII", "condIIProg"}) {
      const auto top = argmax(t, row);
      report.orderings.push_back(
          {"Konjunktiv II is the most frequent correspondent of " + row,
           top ? std::optional<bool>(*top == "Konjunktiv II") : std::nullopt});
    }
  }
  if (tables.count(ReproTable::kFiniteness)) {
    const auto& en = repro.en_ratio();
    const auto& de = repro.de_ratio();
    std::optional<bool> holds;
    if (en.total > 0 && de.total > 0) {
      // Cross-multiplied to stay exact.
      holds = en.non_finite * de.total > de.non_finite * en.total;
    }
    report.orderings.push_back({"English non-finite share exceeds German", holds});
  }
  return report;
}

}  // namespace tmv::tool
