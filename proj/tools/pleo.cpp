// pleo: classify pleonastic "it", evaluate predictions, manage the local corpus.
//
// Option precedence: command-line flags, then PLEO_* environment variables,
// then --config key=value files, then built-in defaults.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "pleo/data.hpp"
#include "pleo/evalstats.hpp"
#include "pleo/pipeline.hpp"

namespace {

using namespace pleo;

struct ClassifyArgs {
  std::vector<std::string> inputs;
  std::string ids;
  std::string backend;
  std::string out;
  std::uint64_t seed = 1;
  double nmin = 10, rexp = 0.15, rscarce = 1000, rzero = 100;
  std::string filters = "all";
  bool pattern3 = false;
  double pattern3_ratio = 2.0;
  std::string system = "web";
  unsigned threads = 1;
  bool no_cache = false;
  bool explode = false;
  double noise = 0;
  std::string stubs, lexicon_dir, pha_config;
};

struct EvalArgs {
  std::string gold, pred, pred2;
  std::size_t bootstrap = 9999;
  std::size_t shuffles = 9999;
  std::string statistic = "all";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool no_intervals = false;
};

struct CorpusArgs {
  std::string corpus;
  std::string index;
  std::string query;
  bool dump_bundle = false;
  std::string stubs;
  bool pattern3 = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key=value lines; keys are long option names without the dashes.
void apply_config_file(CLI::App& sub, const std::string& path) {
  std::size_t lineno = 0;
  for (const auto& raw : split(read_file(path), '\n')) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* opt = sub.get_option_no_throw("--" + key);
    if (!opt || key == "config") throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;  // set on the command line or in the environment
    opt->add_result(value);
    opt->run_callback();
  }
}

std::shared_ptr<const Backend> make_backend(const ClassifyArgs& a) {
  if (a.backend.empty())
    throw UsageError("no backend given; use --backend local-index:<path> or fixture:<path>[,strict]");
  const auto colon = a.backend.find(':');
  const std::string kind = a.backend.substr(0, colon);
  std::string path = colon == std::string::npos ? "" : a.backend.substr(colon + 1);
  std::shared_ptr<const Backend> b;
  if (kind == "local-index") {
    if (path.empty()) throw UsageError("local-index backend needs a path");
    auto idx = std::make_shared<LocalIndex>(LocalIndex::load(path));
    if (a.no_cache)
      b = idx;
    else
      b = std::make_shared<CachingBackend>(idx, path + ".cache");
  } else if (kind == "fixture") {
    bool strict = false;
    if (auto comma = path.rfind(','); comma != std::string::npos && path.substr(comma + 1) == "strict") {
      strict = true;
      path.resize(comma);
    }
    if (path.empty()) throw UsageError("fixture backend needs a path");
    b = std::make_shared<FixtureStore>(FixtureStore::load(path, strict));
  } else {
    throw UsageError("unknown backend '" + kind + "' (expected local-index or fixture)");
  }
  if (a.explode) b = std::make_shared<ExplodingBackend>(b);
  if (a.noise > 0) b = std::make_shared<NoisyBackend>(b, a.seed, a.noise);
  return b;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

int run_classify(const ClassifyArgs& a, bool verbose) {
  if (a.inputs.empty()) throw UsageError("no --input given");
  std::vector<TreebankSentence> sentences;
  for (const auto& in : a.inputs) {
    auto part = read_treebank(in, a.ids.empty() ? std::nullopt : std::optional<std::string>(a.ids));
    for (auto& s : part) sentences.push_back(std::move(s));
  }

  std::vector<SentenceVerdict> verdicts;
  ClassifierConfig cfg;
  if (a.system == "pha") {
    verdicts = pha_classify_all(sentences, a.pha_config.empty() ? PHAConfig::builtin()
                                                                : PHAConfig::from_file(a.pha_config));
  } else if (a.system == "web") {
    cfg.constants = {a.nmin, a.rexp, a.rscarce, a.rzero};
    cfg.constants.validate();
    cfg.filters.flags = FilterFlags::parse(a.filters);
    if (!a.lexicon_dir.empty()) {
      cfg.filters.lexicon = WeatherTimeLexicon::from_directory(a.lexicon_dir);
    }
    if (!a.stubs.empty()) cfg.stubs = StubSet::from_file(a.stubs);
    cfg.pattern3 = a.pattern3;
    cfg.pattern3_ratio = a.pattern3_ratio;
    Classifier clf(cfg, make_backend(a));
    verdicts = clf.classify_all(sentences, a.threads);
  } else {
    throw UsageError("unknown system '" + a.system + "' (expected web or pha)");
  }

  Output out(a.out);
  for (const auto& v : verdicts) {
    out.stream() << to_record(v, a.system, a.system == "web" ? &cfg.constants : nullptr).dump() << '\n';
    if (!verbose) continue;
    for (std::size_t i = 0; i < v.readings.size(); ++i) {
      const auto& ev = v.readings[i].evidence;
      if (!ev) continue;
      for (const auto& q : ev->queries)
        std::cerr << v.sentence_id << " #" << v.token_index << " reading " << i << " [" << to_string(q.purpose)
                  << "] " << q.query << " -> " << q.count << (q.cached ? " (cached)" : "") << '\n';
    }
  }
  if (verbose) std::cerr << sentences.size() << " sentences, " << verdicts.size() << " instances\n";
  return 0;
}

int run_eval(const EvalArgs& a) {
  const LabelMap gold = read_labels(a.gold);
  const LabelMap pred = read_labels(a.pred);
  BootstrapOptions bo;
  bo.replicates = a.bootstrap;
  bo.seed = a.seed;
  bo.threads = a.threads;
  std::cout << format_report(evaluate(gold, pred, bo, !a.no_intervals && a.bootstrap > 0));
  if (a.pred2.empty()) return 0;

  const LabelMap pred2 = read_labels(a.pred2);
  std::vector<MetricKind> stats;
  if (a.statistic == "all")
    stats = {MetricKind::Precision, MetricKind::Recall, MetricKind::F};
  else
    stats = {parse_metric(a.statistic)};
  RandomizationOptions ro;
  ro.shuffles = a.shuffles;
  ro.seed = a.seed;
  ro.threads = a.threads;
  std::cout << "\nsignificance (statistic^sign/p-value; + means the first system is better)\n";
  for (const std::string cat : {"extraposition", "cleft", "weather_time", "overall"}) {
    const auto oa = outcomes_for(gold, pred, cat);
    const auto ob = outcomes_for(gold, pred2, cat);
    std::cout << cat;
    for (auto m : stats) std::cout << '\t' << format_significance(m, approx_randomization(oa, ob, m, ro));
    std::cout << '\n';
  }
  return 0;
}

int run_kappa(const std::string& a_path, const std::string& b_path) {
  const LabelMap a = read_labels(a_path), b = read_labels(b_path);
  if (a.size() != b.size()) throw MisalignedOutputs("annotation files cover different instances");
  std::vector<std::string> la, lb;
  for (const auto& [key, label] : a) {
    auto it = b.find(key);
    if (it == b.end()) throw MisalignedOutputs("second file lacks " + key.sentence_id);
    la.emplace_back(to_string(label));
    lb.emplace_back(to_string(it->second));
  }
  std::printf("kappa %.4f over %zu instances\n", cohen_kappa(la, lb), la.size());
  return 0;
}

int run_corpus_build(const CorpusArgs& a) {
  if (a.corpus.empty() || a.index.empty()) throw UsageError("corpus build needs --corpus and --index");
  auto idx = LocalIndex::from_corpus_file(a.corpus);
  idx.save(a.index);
  std::cout << "indexed " << idx.size() << " sentences into " << a.index << '\n';
  return 0;
}

int run_corpus_query(const CorpusArgs& a) {
  if (a.dump_bundle) {
    // dry run: the argument is a bracketed parse
    ClassifierConfig cfg;
    if (!a.stubs.empty()) cfg.stubs = StubSet::from_file(a.stubs);
    for (const auto& s : load_treebank(a.query, "arg")) {
      for (const auto& inst : find_it_instances(*s.dep, s.id)) {
        std::vector<Reading> readings;
        try {
          readings = generate_readings(inst, s.dep, cfg.filters.syntax);
        } catch (const NoGoverningVerb& e) {
          std::cout << "# it@" << inst.token_index << ": " << e.what() << '\n';
          continue;
        }
        for (std::size_t i = 0; i < readings.size(); ++i) {
          auto verdict = syntactic_verdict(readings[i], cfg.filters);
          std::cout << "# it@" << inst.token_index << " reading " << i << " (" << readings[i].matrix_verb_form()
                    << "): " << to_string(verdict.kind) << '\n';
          if (verdict.kind != VerdictKind::ExtrapositionCandidate) continue;
          auto bundle = build_bundle(*verdict.candidate, cfg.stubs, BackendCapabilities{}, a.pattern3);
          for (const auto& q : bundle.queries) std::cout << to_string(q.purpose) << '\t' << q.serialize() << '\n';
        }
      }
    }
    return 0;
  }
  if (a.index.empty()) throw UsageError("corpus query needs --index");
  auto idx = LocalIndex::load(a.index);
  auto hit = idx.count(Query::parse(a.query));
  std::cout << hit.count << '\n';
  for (const auto& s : hit.snippets) std::cout << s << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pleonastic it detection with corpus hit counts"};
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log every issued query to stderr");

  ClassifyArgs ca;
  std::string classify_config;
  auto* classify = app.add_subcommand("classify", "Classify every 'it' in parsed sentences");
  classify->add_option("--input", ca.inputs, "Bracketed parse file(s)")->check(CLI::ExistingFile);
  classify->add_option("--ids", ca.ids, "Sentence id sidecar (line<TAB>id)")->check(CLI::ExistingFile);
  classify->add_option("--backend", ca.backend, "local-index:<path> or fixture:<path>[,strict]")
      ->envname("PLEO_BACKEND");
  classify->add_option("--out", ca.out, "Output file (JSON lines); stdout by default")->envname("PLEO_OUT");
  classify->add_option("--seed", ca.seed, "Seed for randomized backends")->envname("PLEO_SEED");
  classify->add_option("--nmin", ca.nmin, "Minimum count for a trusted ratio")->envname("PLEO_NMIN");
  classify->add_option("--rexp", ca.rexp, "Expletiveness threshold")->envname("PLEO_REXP");
  classify->add_option("--rscarce", ca.rscarce, "Ratio reported for scarce counts")->envname("PLEO_RSCARCE");
  classify->add_option("--rzero", ca.rzero, "Ratio reported for a zero 'it' count")->envname("PLEO_RZERO");
  classify->add_option("--filters", ca.filters, "Optional filters: perfect,multiple-vp,np-relative,modal | all | none")
      ->envname("PLEO_FILTERS");
  classify->add_flag("--pattern3", ca.pattern3, "Issue Pattern III queries and apply their veto")
      ->envname("PLEO_PATTERN3");
  classify->add_option("--pattern3-ratio", ca.pattern3_ratio, "Det/prep count ratio for the veto")
      ->envname("PLEO_PATTERN3_RATIO");
  classify->add_option("--system", ca.system, "web or pha")->envname("PLEO_SYSTEM");
  classify->add_option("--threads", ca.threads, "Worker threads")->envname("PLEO_THREADS");
  classify->add_flag("--no-cache", ca.no_cache, "Disable the query cache for local-index runs")
      ->envname("PLEO_NO_CACHE");
  classify->add_flag("--explode", ca.explode, "Expand alternations into single queries");
  classify->add_option("--noise", ca.noise, "Relative jitter applied to counts");
  classify->add_option("--stubs", ca.stubs, "Stub list file")->check(CLI::ExistingFile);
  classify->add_option("--lexicon-dir", ca.lexicon_dir, "Directory with weather/time word lists")
      ->check(CLI::ExistingDirectory);
  classify->add_option("--pha-config", ca.pha_config, "Baseline config file")->check(CLI::ExistingFile);
  classify->add_option("--config", classify_config, "key=value defaults file")->check(CLI::ExistingFile);

  EvalArgs ea;
  std::string eval_config;
  auto* eval = app.add_subcommand("eval", "Score predictions against gold labels");
  eval->add_option("--gold", ea.gold, "Gold TSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--pred", ea.pred, "Predictions (JSON lines or TSV)")->required()->check(CLI::ExistingFile);
  eval->add_option("--pred2", ea.pred2, "Second system for significance tests")->check(CLI::ExistingFile);
  eval->add_option("--bootstrap", ea.bootstrap, "Bootstrap replicates")->envname("PLEO_BOOTSTRAP");
  eval->add_option("--shuffles", ea.shuffles, "Randomization shuffles")->envname("PLEO_SHUFFLES");
  eval->add_option("--statistic", ea.statistic, "p, r, f, accuracy or all")->envname("PLEO_STATISTIC");
  eval->add_option("--seed", ea.seed, "Resampling seed")->envname("PLEO_SEED");
  eval->add_option("--threads", ea.threads, "Worker threads")->envname("PLEO_THREADS");
  eval->add_flag("--no-intervals", ea.no_intervals, "Skip confidence intervals");
  eval->add_option("--config", eval_config, "key=value defaults file")->check(CLI::ExistingFile);

  std::string ka, kb;
  auto* kappa = app.add_subcommand("kappa", "Agreement between two annotation files");
  kappa->add_option("first", ka)->required()->check(CLI::ExistingFile);
  kappa->add_option("second", kb)->required()->check(CLI::ExistingFile);

  CorpusArgs co;
  auto* corpus = app.add_subcommand("corpus", "Local corpus index");
  corpus->require_subcommand(1);
  auto* build = corpus->add_subcommand("build", "Index a corpus file (one tokenized sentence per line)");
  build->add_option("--corpus", co.corpus)->required()->check(CLI::ExistingFile);
  build->add_option("--index", co.index)->required();
  auto* query = corpus->add_subcommand("query", "Count a canonical query, or print generated queries");
  query->add_option("--index", co.index)->envname("PLEO_INDEX");
  query->add_flag("--dump-bundle", co.dump_bundle, "Treat the argument as a parse and print its queries");
  query->add_option("--stubs", co.stubs)->check(CLI::ExistingFile);
  query->add_flag("--pattern3", co.pattern3);
  query->add_option("query", co.query, "Canonical query or bracketed parse")->required();

  try {
    app.parse(argc, argv);
    if (*classify) {
      if (!classify_config.empty()) apply_config_file(*classify, classify_config);
      return run_classify(ca, verbose);
    }
    if (*eval) {
      if (!eval_config.empty()) apply_config_file(*eval, eval_config);
      return run_eval(ea);
    }
    if (*kappa) return run_kappa(ka, kb);
    if (*build) return run_corpus_build(co);
    if (*query) return run_corpus_query(co);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const FixtureMiss& e) {
    std::cerr << "error: fixture has no entry for query: " << e.query() << '\n';
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
