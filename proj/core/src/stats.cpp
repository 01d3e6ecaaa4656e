#include "tmv/stats.hpp"

#include <algorithm>
#include <numeric>

#include "tmv/morph.hpp"

namespace tmv {

namespace {

// Coarse German columns: the Konjunktiv present/past split is dropped and
// the infinitive shows as "-".
struct CoarseColumn {
  std::string_view label;
  std::vector<Tense> members;
};

const std::vector<CoarseColumn>& coarse_german() {
  static const std::vector<CoarseColumn> cols = {
      {"Präsens", {Tense::kPraesens}},
      {"Perfekt", {Tense::kPerfekt}},
      {"Präteritum", {Tense::kPraeteritum}},
      {"Pluperfekt", {Tense::kPlusquamperfekt}},
      {"Futur I", {Tense::kFuturI}},
      {"Futur II", {Tense::kFuturII}},
      {"Konjunktiv I", {Tense::kKonjunktivIPresent, Tense::kKonjunktivIPast}},
      {"Konjunktiv II", {Tense::kKonjunktivIIPresent, Tense::kKonjunktivIIPast}},
      {"-", {Tense::kInfinitive}},
  };
  return cols;
}

// Groups of axis positions with their display label.
std::vector<std::pair<std::string, std::vector<std::size_t>>> axis_groups(Language lang,
                                                                          bool coarse) {
  const auto axis = tense_axis(lang);
  std::vector<std::pair<std::string, std::vector<std::size_t>>> out;
  auto pos = [&](Tense t) {
    return static_cast<std::size_t>(std::find(axis.begin(), axis.end(), t) - axis.begin());
  };
  if (coarse && lang == Language::kGerman) {
    for (const auto& c : coarse_german()) {
      std::vector<std::size_t> idx;
      for (Tense t : c.members) idx.push_back(pos(t));
      out.emplace_back(std::string(c.label), std::move(idx));
    }
    return out;
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    out.emplace_back(std::string(display_label(axis[i])), std::vector<std::size_t>{i});
  }
  return out;
}

std::size_t axis_pos(Language lang, Tense t) {
  const auto axis = tense_axis(lang);
  const auto it = std::find(axis.begin(), axis.end(), t);
  if (it == axis.end()) throw std::invalid_argument("tense outside the label axis");
  return static_cast<std::size_t>(it - axis.begin());
}

Language source_language(Direction d) {
  return d == Direction::kEnDe ? Language::kEnglish : Language::kGerman;
}

Language target_language(Direction d) {
  return d == Direction::kEnDe ? Language::kGerman : Language::kEnglish;
}

}  // namespace

Rational Rational::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || num == 0) return {0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

std::string Rational::fixed(int digits) const {
  // Exact long division with half-up rounding, so output never depends on
  // floating point. Counts stay far below the 64-bit overflow bound.
  std::uint64_t whole = num / den;
  std::uint64_t rem = num % den;
  std::string frac;
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    frac += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  if (rem * 2 >= den) {
    int i = static_cast<int>(frac.size()) - 1;
    for (; i >= 0 && frac[static_cast<std::size_t>(i)] == '9'; --i) frac[static_cast<std::size_t>(i)] = '0';
    if (i >= 0) ++frac[static_cast<std::size_t>(i)];
    else ++whole;
  }
  return digits > 0 ? std::to_string(whole) + "." + frac : std::to_string(whole);
}

std::string_view to_string(Direction d) { return d == Direction::kEnDe ? "en-de" : "de-en"; }

std::optional<Direction> parse_direction(std::string_view text) {
  const std::string t = to_lower(text);
  if (t == "en-de" || t == "en_de" || t == "ende") return Direction::kEnDe;
  if (t == "de-en" || t == "de_en" || t == "deen") return Direction::kDeEn;
  return std::nullopt;
}

bool LabelFilter::matches(const TMVLabel& label) const {
  if (label.mood == Mood::kImperative && !include_imperative && mood != Mood::kImperative) {
    return false;
  }
  if (mood && label.mood != *mood) return false;
  if (voice && label.voice != *voice) return false;
  const bool finite = label.finiteness == Finiteness::kFinite;
  if (finiteness == FinitenessFilter::kFinite && !finite) return false;
  if (finiteness == FinitenessFilter::kNonFinite && finite) return false;
  return true;
}

std::string LabelFilter::describe() const {
  std::string out = "mood=";
  out += mood ? std::string(to_string(*mood)) : "any";
  out += ";voice=";
  out += voice ? std::string(to_string(*voice)) : "any";
  out += ";finiteness=";
  out += finiteness == FinitenessFilter::kAny      ? "any"
         : finiteness == FinitenessFilter::kFinite ? "finite"
                                                   : "non_finite";
  if (include_imperative) out += ";imperative=included";
  return out;
}

std::uint64_t CountTable::row_total(std::size_t r) const {
  return std::accumulate(counts[r].begin(), counts[r].end(), std::uint64_t{0});
}

std::uint64_t CountTable::total() const {
  std::uint64_t t = 0;
  for (std::size_t r = 0; r < counts.size(); ++r) t += row_total(r);
  return t;
}

Rational CountTable::row_freq(std::size_t r, std::size_t c) const {
  return Rational::of(counts[r][c], row_total(r));
}

CountTable CountTable::transposed() const {
  CountTable t;
  t.title = title;
  t.rows = columns;
  t.columns = rows;
  t.counts.assign(columns.size(), std::vector<std::uint64_t>(rows.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) t.counts[c][r] = counts[r][c];
  }
  return t;
}

// ------------------------------------------------------------ Correspondence

CorrespondenceMatrix::CorrespondenceMatrix(Direction direction, LabelFilter source_filter,
                                           LabelFilter target_filter,
                                           std::optional<std::set<Tense>> row_filter)
    : direction_(direction),
      source_filter_(source_filter),
      target_filter_(target_filter),
      row_filter_(std::move(row_filter)),
      counts_(tense_axis(source_language(direction)).size() *
                  tense_axis(target_language(direction)).size(),
              0) {}

std::span<const Tense> CorrespondenceMatrix::row_labels() const {
  return tense_axis(source_language(direction_));
}

std::span<const Tense> CorrespondenceMatrix::column_labels() const {
  return tense_axis(target_language(direction_));
}

std::size_t CorrespondenceMatrix::row_pos(Tense t) const {
  return axis_pos(source_language(direction_), t);
}

std::size_t CorrespondenceMatrix::col_pos(Tense t) const {
  return axis_pos(target_language(direction_), t);
}

bool CorrespondenceMatrix::add(const TMVLabel& en, const TMVLabel& de) {
  const TMVLabel& src = direction_ == Direction::kEnDe ? en : de;
  const TMVLabel& tgt = direction_ == Direction::kEnDe ? de : en;
  if (!source_filter_.matches(src) || !target_filter_.matches(tgt)) return false;
  if (row_filter_ && !row_filter_->count(src.tense)) return false;
  ++counts_[row_pos(src.tense) * column_labels().size() + col_pos(tgt.tense)];
  return true;
}

std::uint64_t CorrespondenceMatrix::count(Tense row, Tense column) const {
  return counts_[row_pos(row) * column_labels().size() + col_pos(column)];
}

std::uint64_t CorrespondenceMatrix::row_total(Tense row) const {
  const std::size_t width = column_labels().size();
  const auto begin = counts_.begin() + static_cast<std::ptrdiff_t>(row_pos(row) * width);
  return std::accumulate(begin, begin + static_cast<std::ptrdiff_t>(width), std::uint64_t{0});
}

std::uint64_t CorrespondenceMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Rational CorrespondenceMatrix::row_freq(Tense row, Tense column) const {
  return Rational::of(count(row, column), row_total(row));
}

CountTable CorrespondenceMatrix::table(bool coarse) const {
  CountTable t;
  t.title = std::string(to_string(direction_)) + " correspondence";
  const auto rows = row_labels();
  const auto row_groups = axis_groups(source_language(direction_), coarse);
  const auto col_groups = axis_groups(target_language(direction_), coarse);
  const std::size_t width = column_labels().size();
  for (const auto& [rlabel, rpos] : row_groups) {
    if (row_filter_) {
      const bool keep = std::any_of(rpos.begin(), rpos.end(),
                                    [&](std::size_t p) { return row_filter_->count(rows[p]); });
      if (!keep) continue;
    }
    t.rows.push_back(rlabel);
    std::vector<std::uint64_t> line;
    for (const auto& [clabel, cpos] : col_groups) {
      std::uint64_t n = 0;
      for (std::size_t r : rpos) {
        for (std::size_t c : cpos) n += counts_[r * width + c];
      }
      line.push_back(n);
    }
    t.counts.push_back(std::move(line));
  }
  for (const auto& g : col_groups) t.columns.push_back(g.first);
  return t;
}

CorrespondenceMatrix merge(const CorrespondenceMatrix& a, const CorrespondenceMatrix& b) {
  if (a.direction_ != b.direction_ || a.source_filter_ != b.source_filter_ ||
      a.target_filter_ != b.target_filter_ || a.row_filter_ != b.row_filter_) {
    throw MergeError("correspondence matrices differ in direction or filters");
  }
  CorrespondenceMatrix out = a;
  for (std::size_t i = 0; i < out.counts_.size(); ++i) out.counts_[i] += b.counts_[i];
  out.corpus_ids_.insert(b.corpus_ids_.begin(), b.corpus_ids_.end());
  return out;
}

// -------------------------------------------------------------- Distribution

TenseDistribution::TenseDistribution(Language language, LabelFilter filter, std::string corpus_id)
    : language_(language), filter_(filter), counts_(tense_axis(language).size(), 0) {
  if (!corpus_id.empty()) corpus_ids_.insert(std::move(corpus_id));
}

bool TenseDistribution::add(const TMVLabel& label) {
  if (label.language != language_ || !filter_.matches(label)) return false;
  ++counts_[axis_pos(language_, label.tense)];
  return true;
}

std::span<const Tense> TenseDistribution::labels() const { return tense_axis(language_); }

std::uint64_t TenseDistribution::count(Tense t) const { return counts_[axis_pos(language_, t)]; }

std::uint64_t TenseDistribution::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Rational TenseDistribution::freq(Tense t) const { return Rational::of(count(t), total()); }

CountTable TenseDistribution::table(bool coarse) const {
  CountTable t;
  t.title = std::string(to_string(language_)) + " tense distribution";
  std::string column;
  for (const auto& id : corpus_ids_) column += (column.empty() ? "" : "+") + id;
  if (column.empty()) column = "corpus";
  // A single row (the series) over the label axis, so row_freq is the
  // distribution.
  t.rows.push_back(column);
  std::vector<std::uint64_t> line;
  for (const auto& [label, pos] : axis_groups(language_, coarse)) {
    t.columns.push_back(label);
    std::uint64_t n = 0;
    for (std::size_t p : pos) n += counts_[p];
    line.push_back(n);
  }
  t.counts.push_back(std::move(line));
  return t;
}

TenseDistribution merge(const TenseDistribution& a, const TenseDistribution& b) {
  if (a.language_ != b.language_ || a.filter_ != b.filter_) {
    throw MergeError("distributions differ in language or filter");
  }
  TenseDistribution out = a;
  for (std::size_t i = 0; i < out.counts_.size(); ++i) out.counts_[i] += b.counts_[i];
  out.corpus_ids_.insert(b.corpus_ids_.begin(), b.corpus_ids_.end());
  return out;
}

// ------------------------------------------------------------ Lemma profile

LemmaProfile::LemmaProfile(std::string lemma, std::optional<Voice> voice)
    : lemma_(to_lower(lemma)), voice_(voice) {}

bool LemmaProfile::add(std::string_view lemma, const TMVLabel& label) {
  if (to_lower(lemma) != lemma_) return false;
  if (voice_ && label.voice != *voice_) return false;
  ++counts_[label.tense];
  return true;
}

std::uint64_t LemmaProfile::count(Tense t) const {
  const auto it = counts_.find(t);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t LemmaProfile::total() const {
  std::uint64_t n = 0;
  for (const auto& [t, c] : counts_) n += c;
  return n;
}

LemmaProfile merge(const LemmaProfile& a, const LemmaProfile& b) {
  if (a.lemma_ != b.lemma_ || a.voice_ != b.voice_) {
    throw MergeError("lemma profiles differ in lemma or voice");
  }
  LemmaProfile out = a;
  for (const auto& [t, c] : b.counts_) out.counts_[t] += c;
  return out;
}

// ---------------------------------------------------------------- Finiteness

void FinitenessRatio::add(const TMVLabel& label) {
  ++total;
  if (label.finiteness != Finiteness::kFinite) ++non_finite;
  ratio = Rational::of(non_finite, total);
}

FinitenessRatio merge(const FinitenessRatio& a, const FinitenessRatio& b) {
  FinitenessRatio out;
  out.non_finite = a.non_finite + b.non_finite;
  out.total = a.total + b.total;
  out.ratio = Rational::of(out.non_finite, out.total);
  return out;
}

// ---------------------------------------------------------------- Operations

CorrespondenceMatrix correspondence_matrix(std::span<const PairRecord> pairs, Direction direction,
                                           std::optional<std::set<Tense>> row_filter,
                                           LabelFilter source_filter, LabelFilter target_filter) {
  CorrespondenceMatrix m(direction, source_filter, target_filter, std::move(row_filter));
  for (const auto& p : pairs) m.add(p);
  return m;
}

TenseDistribution tense_distribution(std::span<const TMVLabel> labels, Language language,
                                     const LabelFilter& filter, std::string corpus_id) {
  TenseDistribution d(language, filter, std::move(corpus_id));
  for (const auto& l : labels) d.add(l);
  return d;
}

FinitenessRatio finiteness_ratio(std::span<const TMVLabel> labels) {
  FinitenessRatio r;
  for (const auto& l : labels) r.add(l);
  return r;
}

LemmaProfile lemma_tense_profile(std::span<const AnnotatedRecord> records, std::string_view lemma,
                                 std::optional<Voice> voice) {
  LemmaProfile p{std::string(lemma), voice};
  for (const auto& r : records) p.add(r.main_verb_lemma, r.label);
  return p;
}

}  // namespace tmv
