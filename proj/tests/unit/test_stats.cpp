#include <gtest/gtest.h>

#include <map>
#include <random>

#include "synthetic.hpp"
#include "tmv/stats.hpp"

namespace tmv {
namespace {

TMVLabel en(Tense t) {
  TMVLabel l;
  l.language = Language::kEnglish;
  l.tense = t;
  return l;
}

TMVLabel de(Tense t, Mood m = Mood::kIndicative) {
  TMVLabel l;
  l.language = Language::kGerman;
  l.tense = t;
  l.mood = m;
  return l;
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& s) {
  const auto it = std::find(v.begin(), v.end(), s);
  EXPECT_NE(it, v.end()) << s;
  return static_cast<std::size_t>(it - v.begin());
}

TEST(Rational, ReducesAndFormats) {
  EXPECT_EQ(Rational::of(6, 8), (Rational{3, 4}));
  EXPECT_EQ(Rational::of(0, 5), (Rational{0, 1}));
  EXPECT_EQ(Rational::of(0, 0), (Rational{0, 1}));
  EXPECT_EQ(Rational::of(3, 7).str(), "3/7");
  EXPECT_EQ(Rational::of(3, 7).fixed(), "0.428571");
  EXPECT_EQ(Rational::of(2, 3).fixed(), "0.666667");
  EXPECT_EQ(Rational::of(1, 8).fixed(2), "0.13");
  EXPECT_EQ(Rational::of(1, 1).fixed(), "1.000000");
  EXPECT_EQ(Rational::of(9999999, 10000000).fixed(), "1.000000");
  EXPECT_EQ(Rational::of(1, 3).fixed(0), "0");
}

TEST(Correspondence, HandBuiltThreePairs) {
  CorrespondenceMatrix m(Direction::kEnDe);
  EXPECT_TRUE(m.add(en(Tense::kPresentPerfect), de(Tense::kPerfekt)));
  EXPECT_TRUE(m.add(en(Tense::kPresentPerfect), de(Tense::kPraesens)));
  EXPECT_TRUE(m.add(en(Tense::kPresentSimple), de(Tense::kPraesens)));
  EXPECT_EQ(m.total(), 3u);
  EXPECT_EQ(m.row_freq(Tense::kPresentPerfect, Tense::kPerfekt), Rational::of(1, 2));
  EXPECT_EQ(m.row_freq(Tense::kPresentPerfect, Tense::kPraesens), Rational::of(1, 2));
  EXPECT_EQ(m.row_freq(Tense::kPresentSimple, Tense::kPraesens), Rational::of(1, 1));
  EXPECT_TRUE(m.row_empty(Tense::kPastSimple));
  EXPECT_EQ(m.row_freq(Tense::kPastSimple, Tense::kPraesens), Rational::of(0, 1));

  const CountTable t = m.table();
  const std::size_t r = index_of(t.rows, "presPerf");
  EXPECT_EQ(t.counts[r][index_of(t.columns, "Perfekt")], 1u);
  EXPECT_EQ(t.row_total(r), 2u);
  EXPECT_EQ(t.rows.size(), 19u);
  EXPECT_EQ(t.columns.size(), 11u);

  CorrespondenceMatrix back(Direction::kDeEn);
  back.add(en(Tense::kPresentPerfect), de(Tense::kPraesens));
  back.add(en(Tense::kPresentSimple), de(Tense::kPraesens));
  EXPECT_EQ(back.row_freq(Tense::kPraesens, Tense::kPresentSimple), Rational::of(1, 2));
}

TEST(Correspondence, CoarseColumnsMergeKonjunktivAndShowInfinitiveAsDash) {
  CorrespondenceMatrix m(Direction::kEnDe);
  m.add(en(Tense::kConditionalI), de(Tense::kKonjunktivIIPresent, Mood::kSubjunctive));
  m.add(en(Tense::kConditionalI), de(Tense::kKonjunktivIIPast, Mood::kSubjunctive));
  m.add(en(Tense::kConditionalI), de(Tense::kInfinitive));
  const CountTable t = m.table(true);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"Präsens", "Perfekt", "Präteritum", "Pluperfekt",
                                                 "Futur I", "Futur II", "Konjunktiv I",
                                                 "Konjunktiv II", "-"}));
  const std::size_t r = index_of(t.rows, "condI");
  EXPECT_EQ(t.counts[r][7], 2u);
  EXPECT_EQ(t.counts[r][8], 1u);
}

TEST(Correspondence, RowFilterRestrictsRowsAndCounts) {
  CorrespondenceMatrix m(Direction::kEnDe, {}, {},
                         std::set<Tense>{Tense::kPresentPerfect, Tense::kPresentPerfectProgressive});
  EXPECT_TRUE(m.add(en(Tense::kPresentPerfect), de(Tense::kPerfekt)));
  EXPECT_FALSE(m.add(en(Tense::kPresentSimple), de(Tense::kPraesens)));
  const CountTable t = m.table();
  EXPECT_EQ(t.rows, (std::vector<std::string>{"presPerf", "presPerfProg"}));
}

TEST(Correspondence, FiltersOnBothSides) {
  LabelFilter active;
  active.voice = Voice::kActive;
  LabelFilter subj;
  subj.mood = Mood::kSubjunctive;
  CorrespondenceMatrix m(Direction::kEnDe, active, subj);
  TMVLabel passive = en(Tense::kPresentSimple);
  passive.voice = Voice::kPassive;
  EXPECT_FALSE(m.add(passive, de(Tense::kKonjunktivIPresent, Mood::kSubjunctive)));
  EXPECT_FALSE(m.add(en(Tense::kPresentSimple), de(Tense::kPraesens)));
  EXPECT_TRUE(m.add(en(Tense::kPresentSimple), de(Tense::kKonjunktivIPresent, Mood::kSubjunctive)));
}

TEST(LabelFilter, ImperativesExcludedUnlessRequested) {
  TMVLabel imp = de(Tense::kPraesens, Mood::kImperative);
  EXPECT_FALSE(LabelFilter{}.matches(imp));
  LabelFilter with;
  with.include_imperative = true;
  EXPECT_TRUE(with.matches(imp));
  LabelFilter only;
  only.mood = Mood::kImperative;
  EXPECT_TRUE(only.matches(imp));
  EXPECT_FALSE(only.matches(de(Tense::kPraesens)));
}

TEST(LabelFilter, Finiteness) {
  TMVLabel gerund = en(Tense::kGerund);
  gerund.finiteness = Finiteness::kGerund;
  LabelFilter finite;
  finite.finiteness = FinitenessFilter::kFinite;
  LabelFilter nonfinite;
  nonfinite.finiteness = FinitenessFilter::kNonFinite;
  EXPECT_FALSE(finite.matches(gerund));
  EXPECT_TRUE(nonfinite.matches(gerund));
  EXPECT_TRUE(finite.matches(en(Tense::kPastSimple)));
  EXPECT_EQ(finite.describe(), "mood=any;voice=any;finiteness=finite");
}

// Independent oracle: a map of pair counts. Every non-empty row sums to
// exactly one and each cell equals count / row total.
TEST(CorrespondenceProperty, RowsNormaliseExactly) {
  std::mt19937_64 rng(11);
  for (int corpus = 0; corpus < 100; ++corpus) {
    const Direction dir = corpus % 2 == 0 ? Direction::kEnDe : Direction::kDeEn;
    CorrespondenceMatrix m(dir, {}, {}, std::nullopt);
    std::map<std::pair<Tense, Tense>, std::uint64_t> cells;
    std::map<Tense, std::uint64_t> rows;
    const std::size_t n = 1 + rng() % 300;
    std::uint64_t kept = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const PairRecord r = testing::random_pair_record(rng);
      const bool filtered = r.en.mood == Mood::kImperative || r.de.mood == Mood::kImperative;
      EXPECT_EQ(m.add(r), !filtered);
      if (filtered) continue;
      const Tense src = dir == Direction::kEnDe ? r.en.tense : r.de.tense;
      const Tense tgt = dir == Direction::kEnDe ? r.de.tense : r.en.tense;
      ++cells[{src, tgt}];
      ++rows[src];
      ++kept;
    }
    EXPECT_EQ(m.total(), kept);
    for (Tense row : m.row_labels()) {
      EXPECT_EQ(m.row_total(row), rows[row]);
      if (rows[row] == 0) continue;
      std::uint64_t sum_scaled = 0;
      for (Tense col : m.column_labels()) {
        const Rational f = m.row_freq(row, col);
        EXPECT_EQ(f, Rational::of(cells[{row, col}], rows[row]));
        sum_scaled += f.num * (rows[row] / f.den);
      }
      EXPECT_EQ(sum_scaled, rows[row]);
    }
    for (bool coarse : {false, true}) {
      const CountTable t = m.table(coarse);
      EXPECT_EQ(t.total(), kept);
    }
  }
}

CorrespondenceMatrix random_matrix(std::mt19937_64& rng, const std::string& id) {
  CorrespondenceMatrix m(Direction::kEnDe);
  m.add_corpus_id(id);
  const std::size_t n = rng() % 200;
  for (std::size_t i = 0; i < n; ++i) m.add(testing::random_pair_record(rng));
  return m;
}

TEST(MergeProperty, CorrespondenceIsACommutativeMonoid) {
  std::mt19937_64 rng(3);
  const CorrespondenceMatrix empty(Direction::kEnDe);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_matrix(rng, "a");
    const auto b = random_matrix(rng, "b");
    const auto c = random_matrix(rng, "c");
    EXPECT_EQ(merge(merge(a, b), c), merge(a, merge(b, c)));
    EXPECT_EQ(merge(a, b), merge(b, a));
    EXPECT_EQ(merge(a, empty), a);
    EXPECT_EQ(merge(a, b).total(), a.total() + b.total());
  }
}

TEST(MergeProperty, SplitCorpusMergesToWhole) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<PairRecord> records(rng() % 300);
    for (auto& r : records) r = testing::random_pair_record(rng);
    const std::size_t cut = records.empty() ? 0 : rng() % records.size();
    const std::span<const PairRecord> all(records);
    const auto whole = correspondence_matrix(all, Direction::kEnDe);
    const auto parts = merge(correspondence_matrix(all.first(cut), Direction::kEnDe),
                             correspondence_matrix(all.subspan(cut), Direction::kEnDe));
    EXPECT_EQ(whole, parts);
  }
}

TEST(Merge, MismatchedConfigurationsThrow) {
  LabelFilter f;
  f.voice = Voice::kPassive;
  EXPECT_THROW(merge(CorrespondenceMatrix(Direction::kEnDe), CorrespondenceMatrix(Direction::kDeEn)),
               MergeError);
  EXPECT_THROW(merge(CorrespondenceMatrix(Direction::kEnDe), CorrespondenceMatrix(Direction::kEnDe, f)),
               MergeError);
  EXPECT_THROW(merge(TenseDistribution(Language::kGerman), TenseDistribution(Language::kEnglish)),
               MergeError);
  EXPECT_THROW(merge(LemmaProfile("sein"), LemmaProfile("haben")), MergeError);
  EXPECT_THROW(merge(LemmaProfile("sein"), LemmaProfile("sein", Voice::kActive)), MergeError);
}

TEST(Distribution, CountsOnlyItsLanguageAndFilter) {
  LabelFilter ind;
  ind.mood = Mood::kIndicative;
  TenseDistribution d(Language::kGerman, ind, "news");
  EXPECT_TRUE(d.add(de(Tense::kPraesens)));
  EXPECT_TRUE(d.add(de(Tense::kPraesens)));
  EXPECT_TRUE(d.add(de(Tense::kPerfekt)));
  EXPECT_FALSE(d.add(de(Tense::kKonjunktivIPresent, Mood::kSubjunctive)));
  EXPECT_FALSE(d.add(en(Tense::kPresentSimple)));
  EXPECT_EQ(d.total(), 3u);
  EXPECT_EQ(d.freq(Tense::kPraesens), Rational::of(2, 3));
  const CountTable t = d.table();
  ASSERT_EQ(t.rows, (std::vector<std::string>{"news"}));
  EXPECT_EQ(t.row_freq(0, index_of(t.columns, "Perfekt")), Rational::of(1, 3));

  TenseDistribution e(Language::kGerman, ind, "europarl");
  e.add(de(Tense::kPerfekt));
  const auto both = merge(d, e);
  EXPECT_EQ(both.table().rows, (std::vector<std::string>{"europarl+news"}));
  EXPECT_EQ(both.freq(Tense::kPerfekt), Rational::of(1, 2));
}

TEST(DistributionProperty, MergeIsACommutativeMonoid) {
  std::mt19937_64 rng(21);
  const TenseDistribution empty(Language::kEnglish);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<TenseDistribution> ds;
    for (int k = 0; k < 3; ++k) {
      const auto labels = testing::random_labels(Language::kEnglish, rng() % 100, rng);
      ds.push_back(tense_distribution(labels, Language::kEnglish, {}));
    }
    EXPECT_EQ(merge(merge(ds[0], ds[1]), ds[2]), merge(ds[0], merge(ds[1], ds[2])));
    EXPECT_EQ(merge(ds[0], ds[1]), merge(ds[1], ds[0]));
    EXPECT_EQ(merge(ds[0], empty), ds[0]);
  }
}

TEST(Finiteness, RatioAndMerge) {
  TMVLabel g = en(Tense::kGerund);
  g.finiteness = Finiteness::kGerund;
  const std::vector<TMVLabel> a = {g, en(Tense::kPastSimple), en(Tense::kPastSimple)};
  const std::vector<TMVLabel> b = {g};
  const auto ra = finiteness_ratio(a);
  EXPECT_EQ(ra.ratio, Rational::of(1, 3));
  const auto rab = merge(ra, finiteness_ratio(b));
  EXPECT_EQ(rab.ratio, Rational::of(1, 2));
  EXPECT_EQ(finiteness_ratio(std::vector<TMVLabel>{}).ratio, Rational::of(0, 1));
}

TEST(LemmaProfile, CountsByLemmaAndVoice) {
  std::vector<AnnotatedRecord> records(4);
  records[0].main_verb_lemma = "sein";
  records[0].label = de(Tense::kPraeteritum);
  records[1].main_verb_lemma = "Sein";
  records[1].label = de(Tense::kPerfekt);
  records[2].main_verb_lemma = "haben";
  records[2].label = de(Tense::kPraeteritum);
  records[3].main_verb_lemma = "sein";
  records[3].label = de(Tense::kPraeteritum);
  records[3].label.voice = Voice::kPassive;
  const auto all = lemma_tense_profile(records, "sein");
  EXPECT_EQ(all.total(), 3u);
  const auto active = lemma_tense_profile(records, "sein", Voice::kActive);
  EXPECT_EQ(active.total(), 2u);
  EXPECT_EQ(active.count(Tense::kPraeteritum), 1u);
  EXPECT_EQ(active.count(Tense::kPerfekt), 1u);
  EXPECT_EQ(merge(active, active).count(Tense::kPerfekt), 2u);
}

TEST(CountTable, TransposeSwapsAxes) {
  CountTable t;
  t.rows = {"a", "b"};
  t.columns = {"x", "y", "z"};
  t.counts = {{1, 2, 3}, {4, 5, 6}};
  const CountTable u = t.transposed();
  EXPECT_EQ(u.rows, t.columns);
  EXPECT_EQ(u.columns, t.rows);
  EXPECT_EQ(u.counts[2][1], 6u);
  EXPECT_EQ(u.total(), t.total());
}

TEST(Direction, Names) {
  EXPECT_EQ(parse_direction("en-de"), Direction::kEnDe);
  EXPECT_EQ(parse_direction("DE-EN"), Direction::kDeEn);
  EXPECT_FALSE(parse_direction("fr-en"));
}

}  // namespace
}  // namespace tmv
