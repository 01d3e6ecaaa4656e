#include "tmvtool/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmv/features.hpp"
#include "tmv/morph.hpp"
#include "tmv/pipeline.hpp"
#include "tmv/reference.hpp"
#include "tmv/patterns.hpp"
#include "tmv/stats.hpp"
#include "tmv/stats_io.hpp"
#include "tmv/tagset.hpp"
#include "tmvtool/reproduce.hpp"

namespace tmv::tool {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kMaxShownDiagnostics = 100;

/// A problem with the command line that CLI11 cannot see (bad label names,
/// mismatched list lengths).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Options shared by every subcommand. Set on the top-level app so that
// the config file can provide them.
struct Globals {
  std::string scheme = "chain";
  std::string layout = "conllu";
  std::string indexing = "0";
  std::string matching = "greedy";
  std::string criterion = "any-link";
  std::string modal_preterite = "present";
  unsigned jobs = 1;
  std::size_t batch_size = 1024;
  std::string lexicon;
  std::string temporal_lexicon;
};

struct FilterArgs {
  std::string mood;
  std::string voice;
  std::string finiteness = "any";
};

struct Args {
  Globals g;
  std::string output;
  std::string lang;
  std::vector<std::string> inputs;
  std::string format = "tsv";
  std::string en, de, align;
  std::string annotated_en, annotated_de;
  std::string direction = "en-de";
  std::vector<std::string> rows;
  FilterArgs source, target, filter;
  bool include_imperative = false;
  bool coarse = false;
  bool series_as_columns = false;
  std::string emit = "csv";
  std::vector<std::string> corpus_ids;
  bool ratio = false;
  std::string lemma;
  std::string voice;
  std::vector<std::string> labels;
  std::vector<std::string> conditional_markers;
  bool no_verb_first = false;
  std::string corpus = "other";
  std::vector<std::string> tables;
  std::string out_dir;
  double tolerance = 0.02;
};

/// Loaded lexicons plus the pipeline options built from the globals.
struct Context {
  PipelineOptions pipeline;
  std::unique_ptr<MorphFallbackLexicon> morph;
  std::unique_ptr<TemporalLexicon> temporal;

  [[nodiscard]] const TemporalLexicon& temporal_lexicon() const {
    return temporal ? *temporal : TemporalLexicon::builtin();
  }
};

std::string lexicon_dir_file(const char* name) {
  const char* dir = std::getenv(kLexiconDirEnv);
  if (dir == nullptr || *dir == '\0') return {};
  const fs::path p = fs::path(dir) / name;
  return fs::exists(p) ? p.string() : std::string{};
}

Context make_context(const Globals& g, DiagnosticLog& log) {
  Context ctx;
  auto& o = ctx.pipeline;
  o.scheme = *parse_scheme(g.scheme);
  o.layout = *parse_layout(g.layout);
  o.indexing = *parse_indexing(g.indexing);
  o.pairing.matching = *parse_matching(g.matching);
  o.pairing.criterion = *parse_criterion(g.criterion);
  o.classifier.modal_preterite = *parse_modal_preterite(g.modal_preterite);
  o.jobs = g.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : g.jobs;
  o.batch_size = std::max<std::size_t>(1, g.batch_size);

  const char* env_dir = std::getenv(kLexiconDirEnv);
  if (env_dir != nullptr && *env_dir != '\0' && !fs::is_directory(env_dir)) {
    log.warn(0, std::string(kLexiconDirEnv) + "=" + env_dir + " is not a directory; using built-in lexicons");
  }
  const std::string morph_path =
      g.lexicon.empty() ? lexicon_dir_file("de_morph_lexicon.tsv") : g.lexicon;
  if (!morph_path.empty()) {
    ctx.morph = std::make_unique<MorphFallbackLexicon>(MorphFallbackLexicon::load_file(morph_path));
    o.lexicon = ctx.morph.get();
  }
  const std::string temporal_path =
      g.temporal_lexicon.empty() ? lexicon_dir_file("temporal_lexicon.txt") : g.temporal_lexicon;
  if (!temporal_path.empty()) {
    ctx.temporal = std::make_unique<TemporalLexicon>(TemporalLexicon::load_file(temporal_path));
  }
  return ctx;
}

// Input stream for a path; "-" is stdin.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path == "-") {
      stream_ = &std::cin;
      return;
    }
    if (fs::is_directory(path)) throw InputError("cannot read " + path + ": is a directory");
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot open " + path);
    stream_ = &file_;
  }
  std::istream& get() { return *stream_; }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw InputError("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }
  void close() {
    stream_->flush();
    if (!*stream_) throw InputError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string corpus_name(const std::string& path) {
  if (path == "-") return "stdin";
  return fs::path(path).stem().string();
}

std::vector<std::string> corpus_ids_for(const Args& a) {
  if (!a.corpus_ids.empty() && a.corpus_ids.size() != a.inputs.size()) {
    throw UsageError("--corpus-id given " + std::to_string(a.corpus_ids.size()) +
                     " times for " + std::to_string(a.inputs.size()) + " input(s)");
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < a.inputs.size(); ++i) {
    ids.push_back(a.corpus_ids.empty() ? corpus_name(a.inputs[i]) : a.corpus_ids[i]);
  }
  return ids;
}

LabelFilter make_filter(const FilterArgs& f, bool include_imperative) {
  LabelFilter out;
  if (!f.mood.empty()) out.mood = parse_mood(f.mood);
  if (!f.voice.empty()) out.voice = parse_voice(f.voice);
  if (f.finiteness == "finite") out.finiteness = FinitenessFilter::kFinite;
  if (f.finiteness == "non-finite") out.finiteness = FinitenessFilter::kNonFinite;
  out.include_imperative = include_imperative;
  return out;
}

void emit(std::ostream& out, const CountTable& table, EmitFormat format, bool series_as_columns,
          const std::string& metadata) {
  switch (format) {
    case EmitFormat::kCsv: write_csv(out, table); break;
    case EmitFormat::kPlotData: write_plot_data(out, table, series_as_columns); break;
    case EmitFormat::kJson: write_json(out, table, metadata); break;
  }
}

nlohmann::ordered_json vc_json(const Sentence& s, const LabeledVC& v) {
  nlohmann::ordered_json j;
  j["sentence_id"] = s.id;
  j["members"] = v.vc.members;
  const Language lang = v.label.language;
  if (v.vc.main_verb > 0) {
    const Token& main = s.at(v.vc.main_verb);
    j["main_verb_form"] = main.form;
    j["main_verb_lemma"] = tags::lemma_of(main, lang);
  }
  j["tense"] = tense_name(v.label.tense);
  j["display"] = display_label(v.label.tense);
  j["mood"] = to_string(v.label.mood);
  j["voice"] = to_string(v.label.voice);
  j["finiteness"] = to_string(v.label.finiteness);
  j["progressive"] = v.label.progressive;
  j["flags"] = describe_flags(v.label.flags);
  return j;
}

// ---- subcommands ----------------------------------------------------------

int cmd_annotate(const Args& a, Context& ctx, std::ostream& out, RunSummary& summary) {
  const Language lang = *parse_language(a.lang);
  Input in(a.inputs.front());
  Output sink(a.output, out);
  std::ostream& os = sink.get();
  if (a.format == "json") {
    summary = annotate_stream(in.get(), lang, ctx.pipeline, [&](const AnnotatedSentence& s) {
      for (const auto& v : s.vcs) os << vc_json(s.sentence, v).dump() << '\n';
    });
  } else {
    AnnotatedWriter writer(os);
    summary = annotate_stream(in.get(), lang, ctx.pipeline,
                              [&](const AnnotatedSentence& s) { writer.write(s); });
    writer.finish();
  }
  sink.close();
  return kExitOk;
}

int cmd_pairs(const Args& a, Context& ctx, std::ostream& out, RunSummary& summary) {
  Input en(a.en);
  Input de(a.de);
  Input align(a.align);
  Output sink(a.output, out);
  std::unique_ptr<Output> en_sink;
  std::unique_ptr<Output> de_sink;
  std::unique_ptr<AnnotatedWriter> en_writer;
  std::unique_ptr<AnnotatedWriter> de_writer;
  if (!a.annotated_en.empty()) {
    en_sink = std::make_unique<Output>(a.annotated_en, out);
    en_writer = std::make_unique<AnnotatedWriter>(en_sink->get());
  }
  if (!a.annotated_de.empty()) {
    de_sink = std::make_unique<Output>(a.annotated_de, out);
    de_writer = std::make_unique<AnnotatedWriter>(de_sink->get());
  }
  std::ostream& os = sink.get();
  os << kPairHeader << '\n';
  summary = pair_stream(en.get(), de.get(), align.get(), ctx.pipeline,
                        [&](const SentencePairResult& r) {
                          for (const auto& p : r.pairing.pairs) {
                            os << format_pair_row(p, r.en.sentence, r.de.sentence) << '\n';
                          }
                          if (en_writer) en_writer->write(r.en);
                          if (de_writer) de_writer->write(r.de);
                        });
  if (en_writer) {
    en_writer->finish();
    en_sink->close();
  }
  if (de_writer) {
    de_writer->finish();
    de_sink->close();
  }
  sink.close();
  return kExitOk;
}

std::optional<std::set<Tense>> parse_rows(const std::vector<std::string>& names, Language source) {
  if (names.empty()) return std::nullopt;
  std::set<Tense> rows;
  for (const auto& n : names) {
    const auto t = lookup_tense(n);
    if (!t) {
      std::string msg = "unknown label \"" + n + "\"; valid labels:";
      for (const Tense x : tense_axis(source)) msg += " " + std::string(display_label(x));
      throw UsageError(msg);
    }
    if (language_of(*t) != source) {
      throw UsageError("label \"" + n + "\" is not a " + std::string(to_string(source)) +
                       " tense, but rows name the source side");
    }
    rows.insert(*t);
  }
  return rows;
}

int cmd_stats(const Args& a, Context&, std::ostream& out, RunSummary& summary) {
  const Direction dir = *parse_direction(a.direction);
  const Language source = dir == Direction::kEnDe ? Language::kEnglish : Language::kGerman;
  const auto rows = parse_rows(a.rows, source);
  const auto ids = corpus_ids_for(a);
  const LabelFilter sf = make_filter(a.source, a.include_imperative);
  const LabelFilter tf = make_filter(a.target, a.include_imperative);

  CorrespondenceMatrix total(dir, sf, tf, rows);
  for (std::size_t i = 0; i < a.inputs.size(); ++i) {
    Input in(a.inputs[i]);
    PairReadResult read = read_pairs(in.get());
    summary.log.append(read.log, corpus_name(a.inputs[i]));
    summary.pairs += read.records.size();
    CorrespondenceMatrix m = correspondence_matrix(read.records, dir, rows, sf, tf);
    m.add_corpus_id(ids[i]);
    total = merge(total, m);
  }
  Output sink(a.output, out);
  emit(sink.get(), total.table(a.coarse), *parse_emit_format(a.emit), a.series_as_columns,
       matrix_metadata_json(total));
  sink.close();
  return kExitOk;
}

int cmd_dist(const Args& a, Context&, std::ostream& out, RunSummary& summary) {
  const Language lang = *parse_language(a.lang);
  const auto ids = corpus_ids_for(a);
  const LabelFilter filter = make_filter(a.filter, a.include_imperative);

  std::vector<TenseDistribution> dists;
  std::vector<FinitenessRatio> ratios;
  for (std::size_t i = 0; i < a.inputs.size(); ++i) {
    Input in(a.inputs[i]);
    AnnotatedReadResult read = read_annotated(in.get());
    summary.log.append(read.log, corpus_name(a.inputs[i]));
    TenseDistribution d(lang, filter, ids[i]);
    FinitenessRatio r;
    for (const auto& rec : read.records) {
      if (rec.label.language != lang) continue;
      ++summary.vcs;
      d.add(rec.label);
      r.add(rec.label);
    }
    dists.push_back(std::move(d));
    ratios.push_back(r);
  }

  CountTable table;
  nlohmann::ordered_json meta;
  if (a.ratio) {
    table.title = std::string(to_string(lang)) + " non-finite share";
    table.columns = {"non-finite", "finite"};
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      table.rows.push_back(ids[i]);
      table.counts.push_back({ratios[i].non_finite, ratios[i].total - ratios[i].non_finite});
    }
    meta["language"] = to_string(lang);
    meta["corpus_ids"] = ids;
  } else {
    TenseDistribution merged(lang, filter);
    for (const auto& d : dists) {
      const CountTable t = d.table(a.coarse);
      if (table.columns.empty()) {
        table.title = t.title;
        table.columns = t.columns;
      }
      table.rows.push_back(t.rows.front());
      table.counts.push_back(t.counts.front());
      merged = merge(merged, d);
    }
    meta = nlohmann::ordered_json::parse(distribution_metadata_json(merged));
  }
  Output sink(a.output, out);
  emit(sink.get(), table, *parse_emit_format(a.emit), a.series_as_columns, meta.dump());
  sink.close();
  return kExitOk;
}

int cmd_lemma_profile(const Args& a, Context&, std::ostream& out, RunSummary& summary) {
  const Language lang = *parse_language(a.lang);
  std::optional<Voice> voice;
  if (!a.voice.empty()) voice = parse_voice(a.voice);
  LemmaProfile profile(to_lower(a.lemma), voice);
  for (const auto& path : a.inputs) {
    Input in(path);
    AnnotatedReadResult read = read_annotated(in.get());
    summary.log.append(read.log, corpus_name(path));
    for (const auto& rec : read.records) {
      if (rec.label.language != lang) continue;
      ++summary.vcs;
      profile.add(rec.main_verb_lemma, rec.label);
    }
  }

  CountTable table;
  table.title = "tenses of " + profile.lemma();
  table.rows = {profile.lemma()};
  table.counts.emplace_back();
  for (const Tense t : tense_axis(lang)) {
    table.columns.emplace_back(display_label(t));
    table.counts.front().push_back(profile.count(t));
  }

  Output sink(a.output, out);
  std::ostream& os = sink.get();
  const EmitFormat format = *parse_emit_format(a.emit);
  if (format == EmitFormat::kCsv) {
    os << "Tense,count,frequency\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      os << table.columns[c] << ',' << table.counts[0][c] << ',' << table.row_freq(0, c).fixed()
         << '\n';
    }
  } else {
    nlohmann::ordered_json meta;
    meta["lemma"] = profile.lemma();
    meta["voice"] = voice ? std::string(to_string(*voice)) : std::string("any");
    meta["language"] = to_string(lang);
    emit(os, table, format, true, meta.dump());
  }
  sink.close();
  return kExitOk;
}

int cmd_features(const Args& a, Context& ctx, std::ostream& out, RunSummary& summary) {
  const Language lang = *parse_language(a.lang);
  FeatureOptions fo;
  if (!a.conditional_markers.empty()) {
    fo.conditional_markers.clear();
    for (const auto& m : a.conditional_markers) fo.conditional_markers.push_back(to_lower(m));
  }
  fo.verb_first_conditionals = !a.no_verb_first;
  const TemporalLexicon& lexicon = ctx.temporal_lexicon();

  Input in(a.inputs.front());
  Output sink(a.output, out);
  std::ostream& os = sink.get();
  const bool json = a.format == "json";
  if (!json) os << kFeatureHeader << '\n';
  summary = annotate_stream(in.get(), lang, ctx.pipeline, [&](const AnnotatedSentence& s) {
    for (const auto& v : s.vcs) {
      const FeatureRecord r = extract_context_features(s.sentence, v.vc, v.label, lexicon, fo);
      os << (json ? format_feature_json(r) : format_feature_row(r)) << '\n';
    }
  });
  sink.close();
  return kExitOk;
}

int cmd_explain(const Args& a, std::ostream& out) {
  if (a.labels.size() > 2) throw UsageError("explain takes one label or an English/German pair");
  const Explanation e = a.labels.size() == 1 ? explain(a.labels[0]) : explain(a.labels[0], a.labels[1]);
  out << e.render();
  return kExitOk;
}

int cmd_rules_dump(Context& ctx, const Args& a, std::ostream& out) {
  Output sink(a.output, out);
  dump_rule_table(sink.get(), ctx.pipeline.scheme);
  sink.close();
  return kExitOk;
}

int cmd_reproduce(const Args& a, Context& ctx, std::ostream& out, RunSummary& summary) {
  const ReferenceCorpus corpus = *parse_reference_corpus(a.corpus);
  std::set<ReproTable> tables;
  for (const auto& name : a.tables) {
    const auto t = parse_repro_table(name);
    if (!t) {
      std::string msg = "unknown table \"" + name + "\"; valid tables:";
      for (const ReproTable x : all_repro_tables()) msg += " " + std::string(to_string(x));
      throw UsageError(msg);
    }
    tables.insert(*t);
  }
  if (tables.empty()) tables.insert(all_repro_tables().begin(), all_repro_tables().end());

  Input en(a.en);
  Input de(a.de);
  Input align(a.align);
  Reproduction repro(a.corpus_ids.empty() ? std::string(to_string(corpus)) : a.corpus_ids.front());
  summary = pair_stream(en.get(), de.get(), align.get(), ctx.pipeline,
                        [&](const SentencePairResult& r) { repro.add(r); });

  if (!a.out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(a.out_dir, ec);
    if (ec) throw InputError("cannot create " + a.out_dir + ": " + ec.message());
    for (const ReproTable t : tables) {
      Output file((fs::path(a.out_dir) / (std::string(to_string(t)) + ".csv")).string(), out);
      write_csv(file.get(), repro.table(t));
      file.close();
    }
  }
  const ReproductionReport report = compare(repro, corpus, tables, a.tolerance);
  Output sink(a.output, out);
  for (const ReproTable t : tables) {
    const CountTable table = repro.table(t);
    sink.get() << "## " << to_string(t) << ": " << table.title << '\n';
    write_csv(sink.get(), table);
  }
  sink.get() << "## comparison with reference values (" << to_string(corpus) << ")\n";
  report.write(sink.get());
  sink.close();
  return kExitOk;
}

// ---- option wiring --------------------------------------------------------

const std::vector<std::string> kMoods = {"indicative", "subjunctive", "imperative"};
const std::vector<std::string> kVoices = {"active", "passive"};
const std::vector<std::string> kFiniteness = {"any", "finite", "non-finite"};
const std::vector<std::string> kEmit = {"csv", "json", "plot-data"};
const std::vector<std::string> kLangs = {"en", "de"};

void add_filter_options(CLI::App* app, FilterArgs& f, const std::string& prefix) {
  app->add_option("--" + prefix + "mood", f.mood, "keep only this mood")
      ->check(CLI::IsMember(kMoods));
  app->add_option("--" + prefix + "voice", f.voice, "keep only this voice")
      ->check(CLI::IsMember(kVoices));
  app->add_option("--" + prefix + "finiteness", f.finiteness, "any, finite or non-finite")
      ->check(CLI::IsMember(kFiniteness))
      ->capture_default_str();
}

void print_diagnostics(const DiagnosticLog& log, std::ostream& err) {
  std::size_t shown = 0;
  for (const auto& d : log.entries()) {
    if (shown == kMaxShownDiagnostics) {
      err << "(" << log.entries().size() - shown << " more diagnostics not shown)\n";
      break;
    }
    err << format(d) << '\n';
    ++shown;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tense, mood and voice annotation and contrastive statistics for English-German "
               "parallel corpora",
               "tmvtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value settings; flags given on the command line win");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Args a;
  auto& g = a.g;
  app.add_option("--scheme", g.scheme, "dependency scheme of the parses: chain or ud")
      ->check(CLI::IsMember({"chain", "ud"}))
      ->capture_default_str();
  app.add_option("--layout", g.layout, "CoNLL column layout: conllu or conll09")
      ->check(CLI::IsMember({"conllu", "conll09"}))
      ->capture_default_str();
  app.add_option("--indexing", g.indexing, "alignment index base: 0 or 1")
      ->check(CLI::IsMember({"0", "1"}))
      ->capture_default_str();
  app.add_option("--matching", g.matching, "greedy or exhaustive")
      ->check(CLI::IsMember({"greedy", "exhaustive"}))
      ->capture_default_str();
  app.add_option("--pair-criterion", g.criterion, "any-link or main-verb")
      ->check(CLI::IsMember({"any-link", "main-verb"}))
      ->capture_default_str();
  app.add_option("--modal-preterite", g.modal_preterite,
                 "base of could/might/should: present or past")
      ->check(CLI::IsMember({"present", "past"}))
      ->capture_default_str();
  app.add_option("-j,--jobs", g.jobs, "worker threads (0: one per core)")->capture_default_str();
  app.add_option("--batch-size", g.batch_size, "sentences per worker round")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--lexicon", g.lexicon, "German auxiliary/modal morphology lexicon (TSV)");
  app.add_option("--temporal-lexicon", g.temporal_lexicon, "temporal term lexicon");

  auto* annotate = app.add_subcommand("annotate", "extract and label verbal complexes");
  annotate->add_option("--lang", a.lang, "en or de")->required()->check(CLI::IsMember(kLangs));
  annotate->add_option("--format", a.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  annotate->add_option("-o,--output", a.output, "output file (default stdout)");
  annotate->add_option("input", a.inputs, "CoNLL file, - for stdin")->required()->expected(1);

  auto* pairs = app.add_subcommand("pairs", "pair complexes across aligned sentences");
  pairs->add_option("--en", a.en, "English CoNLL file")->required();
  pairs->add_option("--de", a.de, "German CoNLL file")->required();
  pairs->add_option("--align", a.align, "alignment file, one line per sentence pair")->required();
  pairs->add_option("--annotated-en", a.annotated_en, "also write the English annotation table");
  pairs->add_option("--annotated-de", a.annotated_de, "also write the German annotation table");
  pairs->add_option("-o,--output", a.output, "output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "tense correspondence matrix from pair dumps");
  stats->add_option("--direction", a.direction, "en-de or de-en")
      ->check(CLI::IsMember({"en-de", "de-en"}))
      ->capture_default_str();
  stats->add_option("--rows", a.rows, "source tenses to keep")->delimiter(',');
  add_filter_options(stats, a.source, "source-");
  add_filter_options(stats, a.target, "target-");
  stats->add_flag("--include-imperative", a.include_imperative, "count imperatives too");
  stats->add_flag("--coarse", a.coarse, "merge Konjunktiv present and past columns");
  stats->add_option("--emit", a.emit, "csv, json or plot-data")
      ->check(CLI::IsMember(kEmit))
      ->capture_default_str();
  stats->add_flag("--series-as-columns", a.series_as_columns, "plot-data: one column per row");
  stats->add_option("--corpus-id", a.corpus_ids, "corpus id per input (default: file stem)");
  stats->add_option("-o,--output", a.output, "output file (default stdout)");
  stats->add_option("inputs", a.inputs, "pair dumps")->required();

  auto* dist = app.add_subcommand("dist", "tense distribution from annotation tables");
  dist->add_option("--lang", a.lang, "en or de")->required()->check(CLI::IsMember(kLangs));
  add_filter_options(dist, a.filter, "");
  dist->add_flag("--include-imperative", a.include_imperative, "count imperatives too");
  dist->add_flag("--coarse", a.coarse, "merge Konjunktiv present and past columns");
  dist->add_flag("--ratio", a.ratio, "report the non-finite share instead");
  dist->add_option("--emit", a.emit, "csv, json or plot-data")
      ->check(CLI::IsMember(kEmit))
      ->capture_default_str();
  dist->add_flag("--series-as-columns", a.series_as_columns, "plot-data: one column per corpus");
  dist->add_option("--corpus-id", a.corpus_ids, "corpus id per input (default: file stem)");
  dist->add_option("-o,--output", a.output, "output file (default stdout)");
  dist->add_option("inputs", a.inputs, "annotation tables")->required();

  auto* lemma = app.add_subcommand("lemma-profile", "tense counts of one main-verb lemma");
  lemma->add_option("--lemma", a.lemma, "main verb lemma")->required();
  lemma->add_option("--lang", a.lang, "en or de")->check(CLI::IsMember(kLangs));
  lemma->add_option("--voice", a.voice, "keep only this voice")->check(CLI::IsMember(kVoices));
  lemma->add_option("--emit", a.emit, "csv, json or plot-data")
      ->check(CLI::IsMember(kEmit))
      ->capture_default_str();
  lemma->add_option("-o,--output", a.output, "output file (default stdout)");
  lemma->add_option("inputs", a.inputs, "annotation tables")->required();

  auto* features = app.add_subcommand("features", "context features per verbal complex");
  features->add_option("--lang", a.lang, "en or de")->required()->check(CLI::IsMember(kLangs));
  features->add_option("--format", a.format, "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}))
      ->capture_default_str();
  features->add_option("--conditional-markers", a.conditional_markers,
                       "words that open a conditional clause")
      ->delimiter(',');
  features->add_flag("--no-verb-first", a.no_verb_first,
                     "do not treat German verb-first clauses as conditional");
  features->add_option("-o,--output", a.output, "output file (default stdout)");
  features->add_option("input", a.inputs, "CoNLL file, - for stdin")->required()->expected(1);

  auto* explain_cmd = app.add_subcommand("explain", "uses and correspondences of a tense");
  explain_cmd->add_option("labels", a.labels, "a tense, or an English and a German tense")
      ->required();

  auto* rules = app.add_subcommand("rules-dump", "print the labelled synthetic chain patterns");
  rules->add_option("-o,--output", a.output, "output file (default stdout)");

  auto* repro = app.add_subcommand("reproduce", "corpus-scale tables with reference comparison");
  repro->add_option("--en", a.en, "English CoNLL file")->required();
  repro->add_option("--de", a.de, "German CoNLL file")->required();
  repro->add_option("--align", a.align, "alignment file")->required();
  std::vector<std::string> corpus_names;
  for (const auto c : {ReferenceCorpus::kNews, ReferenceCorpus::kEuroparl, ReferenceCorpus::kCrawl,
                       ReferenceCorpus::kPattr, ReferenceCorpus::kCombined, ReferenceCorpus::kOther}) {
    corpus_names.emplace_back(to_string(c));
  }
  repro->add_option("--corpus", a.corpus, "reference values to compare with")
      ->check(CLI::IsMember(corpus_names))
      ->capture_default_str();
  repro->add_option("--corpus-id", a.corpus_ids, "label for the corpus in the tables")
      ->expected(1);
  repro->add_option("--tables", a.tables, "tables to compute (default: all)")->delimiter(',');
  repro->add_option("--tolerance", a.tolerance, "allowed difference per cell")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  repro->add_option("--out-dir", a.out_dir, "also write one CSV per table here");
  repro->add_option("-o,--output", a.output, "report file (default stdout)");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "tmvtool: unknown subcommand \"" << args.front() << "\"\n" << app.help() << std::flush;
    return kExitUsage;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "tmvtool: " << e.what() << '\n' << app.help() << std::flush;
    return kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  if (name == "lemma-profile" && a.lang.empty()) a.lang = "de";

  RunSummary summary;
  int code = kExitOk;
  bool report_summary = true;
  try {
    DiagnosticLog setup;
    Context ctx = make_context(g, setup);
    if (name == "annotate") {
      code = cmd_annotate(a, ctx, out, summary);
    } else if (name == "pairs") {
      code = cmd_pairs(a, ctx, out, summary);
    } else if (name == "stats") {
      code = cmd_stats(a, ctx, out, summary);
    } else if (name == "dist") {
      code = cmd_dist(a, ctx, out, summary);
    } else if (name == "lemma-profile") {
      code = cmd_lemma_profile(a, ctx, out, summary);
    } else if (name == "features") {
      code = cmd_features(a, ctx, out, summary);
    } else if (name == "explain") {
      report_summary = false;
      code = cmd_explain(a, out);
    } else if (name == "rules-dump") {
      report_summary = false;
      code = cmd_rules_dump(ctx, a, out);
    } else if (name == "reproduce") {
      code = cmd_reproduce(a, ctx, out, summary);
    }
    summary.log.append(setup, "setup");
  } catch (const UsageError& e) {
    err << "tmvtool " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownLabelError& e) {
    err << "tmvtool " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    print_diagnostics(summary.log, err);
    err << "tmvtool " << name << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const std::ios_base::failure& e) {
    err << "tmvtool " << name << ": write failed: " << e.what() << '\n';
    return kExitInput;
  } catch (const MergeError& e) {
    err << "tmvtool " << name << ": " << e.what() << '\n';
    return kExitInput;
  }

  print_diagnostics(summary.log, err);
  if (report_summary) {
    err << "tmvtool " << name << ": ";
    if (name == "stats" || name == "dist" || name == "lemma-profile") {
      err << "records=" << (name == "stats" ? summary.pairs : summary.vcs)
          << " warnings=" << summary.log.warning_count() << " errors=" << summary.log.error_count();
    } else {
      err << summary.describe();
    }
    err << '\n';
  }
  if (code == kExitOk && summary.log.error_count() > 0) code = kExitInput;
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace tmv::tool
