#include <gtest/gtest.h>

#include <sstream>

#include "tmv/conll.hpp"

namespace tmv {
namespace {

const char* kTwo =
    "# sent_id = a1\n"
    "# text = She reads .\n"
    "1\tShe\tshe\tPRON\tPRP\tCase=Nom\t2\tnsubj\t_\t_\n"
    "2\treads\tread\tVERB\tVBZ\tTense=Pres\t0\troot\t_\t_\n"
    "3\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n"
    "\n"
    "1\tGo\tgo\tVERB\tVB\tMood=Imp\t0\troot\t_\t_\n"
    "\n";

TEST(Conll, ReadsConllUBlocksAndIds) {
  const auto r = parse_conll(kTwo, Language::kEnglish, {ConllLayout::kConllU, "doc"});
  ASSERT_EQ(r.sentences.size(), 2u);
  EXPECT_FALSE(r.log.has_errors());
  const Sentence& s = r.sentences[0];
  EXPECT_EQ(s.id, "a1");
  EXPECT_EQ(s.language, Language::kEnglish);
  ASSERT_EQ(s.size(), 3);
  EXPECT_EQ(s.at(2).form, "reads");
  EXPECT_EQ(s.at(2).pos, "VBZ");
  EXPECT_EQ(s.at(2).morph.get("tense"), "Pres");
  EXPECT_EQ(s.at(1).head, 2);
  EXPECT_EQ(s.children(2), (std::vector<int>{1, 3}));
  EXPECT_EQ(r.sentences[1].id, "doc-2");
}

TEST(Conll, SkipsMultiwordAndEmptyNodes) {
  const auto r = parse_conll(
      "1-2\tzum\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tzu\tzu\tADP\tAPPR\t_\t0\troot\t_\t_\n"
      "1.1\tx\tx\tX\tX\t_\t_\t_\t_\t_\n"
      "2\tdem\tder\tDET\tART\t_\t1\tdet\t_\t_\n\n",
      Language::kGerman);
  ASSERT_EQ(r.sentences.size(), 1u);
  EXPECT_EQ(r.sentences[0].size(), 2);
}

TEST(Conll, Conll09PrefersGoldColumns) {
  const auto r = parse_conll(
      "1\tEr\ter\t_\tPPER\t_\t_\tcase=nom\t2\t_\tSB\t_\t_\t_\n"
      "2\tliest\t_\tlesen\t_\tVVFIN\t_\tTense=Pres\t_\t0\t_\tROOT\t_\t_\n\n",
      Language::kGerman, {ConllLayout::kConll09, "s"});
  ASSERT_EQ(r.sentences.size(), 1u);
  const Sentence& s = r.sentences[0];
  EXPECT_EQ(s.at(1).lemma, "er");
  EXPECT_EQ(s.at(1).deprel, "SB");
  EXPECT_EQ(s.at(2).lemma, "lesen");
  EXPECT_EQ(s.at(2).pos, "VVFIN");
  EXPECT_EQ(s.at(2).head, 0);
  EXPECT_EQ(s.at(2).deprel, "ROOT");
}

TEST(Conll, RejectsMalformedBlocksButKeepsPosition) {
  std::istringstream in(
      "1\tA\ta\tX\tX\t_\t0\troot\t_\n\n"            // 9 columns
      "1\tB\tb\tX\tX\t_\t3\troot\t_\t_\n\n"         // head outside sentence
      "1\tC\tc\tX\tX\t_\t2\tdep\t_\t_\n"
      "2\tD\td\tX\tX\t_\t1\tdep\t_\t_\n\n"          // cycle
      "1\tE\te\tX\tX\t_\t0\troot\t_\t_\n\n");
  ConllReader reader(in, Language::kEnglish);
  std::vector<bool> kept;
  while (auto block = reader.next()) kept.push_back(block->sentence.has_value());
  EXPECT_EQ(kept, (std::vector<bool>{false, false, false, true}));
  EXPECT_EQ(reader.blocks_read(), 4u);
  EXPECT_GE(reader.log().error_count(), 2u);
  EXPECT_GE(reader.log().warning_count(), 1u);
  EXPECT_EQ(reader.log().entries().front().line, 1u);
}

TEST(Conll, FindCycle) {
  std::vector<Token> t(3);
  for (int i = 0; i < 3; ++i) t[i].index = i + 1;
  t[0].head = 0;
  t[1].head = 1;
  t[2].head = 2;
  EXPECT_EQ(find_cycle(t), 0);
  t[0].head = 3;
  EXPECT_NE(find_cycle(t), 0);
}

TEST(Conll, WriteThenReadRoundTrips) {
  for (ConllLayout layout : {ConllLayout::kConllU, ConllLayout::kConll09}) {
    const auto first = parse_conll(kTwo, Language::kEnglish);
    std::ostringstream out;
    write_conll(out, first.sentences, layout);
    const auto second = parse_conll(out.str(), Language::kEnglish, {layout, "doc"});
    ASSERT_EQ(second.sentences.size(), first.sentences.size());
    for (std::size_t i = 0; i < first.sentences.size(); ++i) {
      EXPECT_EQ(second.sentences[i].id, first.sentences[i].id);
      ASSERT_EQ(second.sentences[i].size(), first.sentences[i].size());
      for (int k = 1; k <= first.sentences[i].size(); ++k) {
        const Token& a = first.sentences[i].at(k);
        const Token& b = second.sentences[i].at(k);
        EXPECT_EQ(a.form, b.form);
        EXPECT_EQ(a.lemma, b.lemma);
        EXPECT_EQ(a.pos, b.pos);
        EXPECT_EQ(a.morph, b.morph);
        EXPECT_EQ(a.head, b.head);
        EXPECT_EQ(a.deprel, b.deprel);
      }
    }
  }
}

TEST(Conll, LayoutNames) {
  EXPECT_EQ(parse_layout("conllu"), ConllLayout::kConllU);
  EXPECT_EQ(parse_layout("conll09"), ConllLayout::kConll09);
  EXPECT_FALSE(parse_layout("auto"));
}

TEST(Morph, ParsesKeyedAndBareItems) {
  const MorphFeatures f = MorphFeatures::parse("Mood=Sub|Tense=Past|sg|3");
  EXPECT_TRUE(f.has("mood", "sub"));
  EXPECT_EQ(f.get("TENSE"), "Past");
  EXPECT_TRUE(f.has_bare("SG"));
  EXPECT_FALSE(f.get("Person"));
  EXPECT_EQ(f.to_string(), "Mood=Sub|Tense=Past|sg|3");
  EXPECT_TRUE(MorphFeatures::parse("_").empty());
  EXPECT_EQ(MorphFeatures().to_string(), "_");
}

}  // namespace
}  // namespace tmv
