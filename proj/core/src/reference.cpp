#include "tmv/reference.hpp"

#include <algorithm>
#include <sstream>

namespace tmv {

namespace {

struct UseGroup {
  Tense german;
  Tense english;
  std::string_view title;
  std::vector<TenseUse> uses;
};

// Usage categories per tense pair. Redirect examples show the tense the
// other language would use instead.
const std::vector<UseGroup>& use_groups() {
  static const std::vector<UseGroup> groups = {
      {Tense::kPraesens,
       Tense::kPresentSimple,
       "Präsens/present tense",
       {{"non-past", "Ich schlafe von 12 bis 7.", false, "I sleep from midnight to seven.", false},
        {"futurate", "Morgen weiß ich das.", false, "future tense (I will know that tomorrow.)",
         true}}},
      {Tense::kPraeteritum,
       Tense::kPastSimple,
       "Präteritum/simple past",
       {{"past time", "Ich schlief den ganzen Tag.", false, "I slept the whole day.", false}}},
      {Tense::kFuturI,
       Tense::kFutureI,
       "Futur I/future tense",
       {{"future time", "Ich werde schlafen.", false, "I will sleep. I am going to sleep.", false}}},
      {Tense::kPerfekt,
       Tense::kPresentPerfect,
       "Perfekt/present perfect",
       {{"resultative", "Jemand hat mein Auto gestohlen.", false, "Someone has stolen my car.",
         false},
        {"existential", "Ich habe (schon mal) Tennis gespielt.", false, "I have played tennis.",
         false},
        {"hot news", "Kanzler Schröder ist zurückgetreten.", false,
         "Chancellor Schröder has resigned.", false},
        {"universal", "Präsens (Ich lebe hier seit 2 jahren.)", true,
         "I have lived here for two years.", false},
        {"narrative", "Ich bin gestern im Theater gewesen.", false,
         "past tense (I was in theater yesterday.)", true}}},
      {Tense::kFuturII,
       Tense::kFutureII,
       "Futur II/future perfect",
       {{"future results", "Ich werde das bis morgen erledigt haben.", false,
         "I will have done this by tomorrow.", false}}},
      {Tense::kPlusquamperfekt,
       Tense::kPastPerfect,
       "Plusquamperfekt/past perfect",
       {{"pre-past", "Ich hatte geschlafen.", false, "I had slept.", false}}},
  };
  return groups;
}

CorrespondenceRow row(std::string morph, std::optional<Tense> en, std::string en_ex,
                      std::optional<Tense> de, std::string de_name, std::string de_ex) {
  CorrespondenceRow r;
  r.morph_tense = std::move(morph);
  r.english = en;
  if (en) r.english_name = std::string(tense_name(*en));
  r.english_examples = std::move(en_ex);
  r.german = de;
  r.german_name = std::move(de_name);
  r.german_examples = std::move(de_ex);
  return r;
}

Tense require(std::string_view label) {
  if (auto t = lookup_tense(label)) return *t;
  std::string msg = "unknown tense label '" + std::string(label) + "'; valid labels:";
  for (const auto& v : valid_labels()) msg += " \"" + v + "\"";
  throw UnknownLabelError(msg);
}

}  // namespace

const std::vector<CorrespondenceRow>& correspondence_rows() {
  using T = Tense;
  static const std::vector<CorrespondenceRow> rows = {
      row("present", T::kPresentSimple, "(I) read", T::kPraesens, "Präsens", "(Ich) lese"),
      row("present", T::kPresentProgressive, "(I) am reading", {}, "", ""),
      row("present", T::kPresentPerfect, "(I) have read", T::kPerfekt, "Perfekt",
          "(Ich) habe gelesen"),
      row("present", T::kPresentPerfectProgressive, "(I) have been reading", {}, "", ""),
      row("present", T::kFutureI, "(I) will read / (I) am going to read", T::kFuturI, "Futur I",
          "(Ich) werde lesen"),
      row("present", T::kFutureIProgressive,
          "(I) will be reading / (I) am going to be reading", {}, "", ""),
      row("present", T::kFutureII, "(I) will have read", T::kFuturII, "Futur II",
          "(Ich) werde gelesen haben"),
      row("present", T::kFutureIIProgressive, "(I) will have been reading", {}, "", ""),
      row("past", T::kPastSimple, "(I) read", T::kPraeteritum, "Präteritum", "(Ich) las"),
      row("past", T::kPastProgressive, "(I) was reading", {}, "", ""),
      row("past", T::kPastPerfect, "(I) had read", T::kPlusquamperfekt, "Plusquamperfekt",
          "(Ich) hatte gelesen"),
      row("past", T::kPastPerfectProgressive, "(I) had been reading", {}, "", ""),
      row("present*", T::kConditionalI, "(I) would read", T::kKonjunktivIIPresent,
          "Konjunktiv II", "(Ich) würde lesen"),
      row("present*", T::kConditionalIProgressive, "(I) would be reading", {}, "", ""),
      row("past*", T::kConditionalII, "(I) would have read", T::kKonjunktivIIPast,
          "Konjunktiv II", "(Ich) hätte gelesen"),
      row("past*", T::kConditionalIIProgressive, "(I) would have been reading", {}, "", ""),
      row("present*", {}, "", T::kKonjunktivIPresent, "Konjunktiv I",
          "(Er) lese / (Er) werde lesen"),
  };
  return rows;
}

std::vector<std::string> valid_labels() {
  std::vector<std::string> out;
  for (Language lang : {Language::kEnglish, Language::kGerman}) {
    for (Tense t : tense_axis(lang)) out.emplace_back(display_label(t));
  }
  return out;
}

Explanation explain(std::string_view label) {
  const Tense t = require(label);
  const bool german = language_of(t) == Language::kGerman;
  Explanation ex;
  ex.title = std::string(display_label(t));
  for (const auto& g : use_groups()) {
    if ((german ? g.german : g.english) != t) continue;
    ex.title = std::string(g.title);
    for (const auto& u : g.uses) {
      if (!(german ? u.german_redirect : u.english_redirect)) ex.uses.push_back(u);
    }
  }
  for (const auto& r : correspondence_rows()) {
    if ((german ? r.german : r.english) == t) ex.rows.push_back(r);
  }
  if (ex.uses.empty()) ex.note = "no usage categories recorded for this tense";
  return ex;
}

Explanation explain(std::string_view english_label, std::string_view german_label) {
  Tense en = require(english_label);
  Tense de = require(german_label);
  if (language_of(en) == Language::kGerman && language_of(de) == Language::kEnglish) {
    std::swap(en, de);
  }
  if (language_of(en) != Language::kEnglish || language_of(de) != Language::kGerman) {
    throw UnknownLabelError("a pair needs one English and one German label");
  }
  Explanation ex;
  ex.title = std::string(display_label(en)) + " / " + std::string(display_label(de));
  for (const auto& r : correspondence_rows()) {
    if (r.english == en && r.german == de) ex.rows.push_back(r);
  }
  if (ex.rows.empty()) {
    ex.note = "no direct morpho-syntactic correspondence; rows for each side follow";
    for (const auto& r : correspondence_rows()) {
      if (r.english == en || r.german == de) ex.rows.push_back(r);
    }
  }
  return ex;
}

std::string Explanation::render() const {
  std::ostringstream out;
  out << title << '\n';
  if (!uses.empty()) {
    out << "uses:\n";
    for (const auto& u : uses) {
      out << "  " << u.category << '\n';
      out << "    DE: " << (u.german_redirect ? "-> " : "") << u.german << '\n';
      out << "    EN: " << (u.english_redirect ? "-> " : "") << u.english << '\n';
    }
  }
  if (!rows.empty()) {
    out << "correspondence:\n";
    for (const auto& r : rows) {
      out << "  [" << r.morph_tense << "] "
          << (r.english ? std::string(display_label(*r.english)) : std::string("-")) << ' '
          << (r.english_examples.empty() ? "" : r.english_examples) << " <-> "
          << (r.german ? r.german_name : std::string("-")) << ' ' << r.german_examples << '\n';
    }
  }
  if (!note.empty()) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace tmv
