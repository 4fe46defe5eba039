// summa: batch extractive summarizer and ROUGE evaluation front end.
//
// summarize  one document through a chosen pipeline
// evaluate   system summary vs reference summaries (CSV report)
// corpus     DUC-layout directory run with aggregate scores

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "summa/centrality.hpp"
#include "summa/eval.hpp"
#include "summa/features.hpp"
#include "summa/ilp.hpp"
#include "summa/lexnet.hpp"
#include "summa/lsa.hpp"
#include "summa/text.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace summa;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitPipeline = 4;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CliError{code, message}; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(kExitIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(kExitIo, "cannot write " + path.string());
  out << content;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct RunConfig {
  std::string method = "lexnet";
  int length = 100;
  double percent = 0;  // overrides length when > 0
  double theta = -1;   // method-dependent default when < 0
  int rank = 0;        // lsa rank; 0 = min(n, 10)
  std::string wsd = "simple";
  std::string centrality = "subgraph";
  double alpha = 0.9;
  std::optional<double> beta;
  double damping = 0.85;
  std::string weights;  // w1,w2,w3,w4,w5
  std::string relevance = "subgraph";
  std::string redundancy = "lexnet";
  double redundancy_scale = 1.0;
  std::string wordnet;
  std::string sentiment_path;
  std::string stoplist_path;
  std::uint64_t seed = 0;
  std::string dump_matrix;    // lsa term x sentence CSV
  std::string dump_network;   // lexical-network adjacency CSV
  std::string dump_instance;  // ilp instance CSV

  text::Stoplist stoplist;
  std::optional<lex::LexDatabase> lexdb;
  std::optional<lex::SentimentLexicon> sentiment;

  void load_resources() {
    stoplist = stoplist_path.empty() ? text::Stoplist::builtin()
                                     : text::Stoplist::load(stoplist_path);
    if (!wordnet.empty()) {
      try {
        lexdb = lex::LexDatabase::load(wordnet);
      } catch (const lex::MissingFile& e) {
        fail(kExitIo, e.what());
      } catch (const lex::ParseError& e) {
        fail(kExitIo, e.what());
      }
    }
    if (!sentiment_path.empty()) {
      try {
        sentiment = lex::SentimentLexicon::load(sentiment_path);
      } catch (const std::exception& e) {
        fail(kExitIo, e.what());
      }
    }
  }

  lexnet::WsdVariant wsd_variant() const {
    if (wsd == "simple") return lexnet::WsdVariant::Simple;
    if (wsd == "adapted") return lexnet::WsdVariant::Adapted;
    if (wsd == "cosine") return lexnet::WsdVariant::Cosine;
    fail(kExitConfig, "unknown --wsd '" + wsd + "' (simple|adapted|cosine)");
  }

  centrality::Params centrality_params() const {
    centrality::Params p;
    p.alpha = alpha;
    p.beta = beta;
    p.damping = damping;
    return p;
  }

  centrality::Measure measure_or_fail(const std::string& name) const {
    const auto m = centrality::measure_from_name(name);
    if (!m) fail(kExitConfig, "unknown centrality measure '" + name + "'");
    return *m;
  }

  features::FeatureWeights feature_weights() const {
    features::FeatureWeights w;
    if (weights.empty()) return w;
    std::vector<double> vals;
    std::stringstream ss(weights);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        vals.push_back(std::stod(item));
      } catch (const std::exception&) {
        fail(kExitConfig, "--weights expects five comma-separated numbers");
      }
    }
    if (vals.size() != 5) fail(kExitConfig, "--weights expects five comma-separated numbers");
    w.position = vals[0];
    w.tfidf = vals[1];
    w.aggregate_sim = vals[2];
    w.centroid = vals[3];
    w.sentiment = vals[4];
    return w;
  }
};

struct PipelineResult {
  Summary summary;
  std::vector<double> scores;  // empty when the method has no score vector
  json params;
};

// Flat "key = value" configuration; command-line flags always win. Unknown
// keys are rejected.
void apply_config_file(const fs::path& path, RunConfig& cfg, const CLI::App* cmd) {
  std::ifstream in(path);
  if (!in) fail(kExitIo, "cannot read config " + path.string());

  const std::map<std::string, std::function<void(const std::string&)>> setters = {
      {"method", [&](const std::string& v) { cfg.method = v; }},
      {"length", [&](const std::string& v) { cfg.length = std::stoi(v); }},
      {"percent", [&](const std::string& v) { cfg.percent = std::stod(v); }},
      {"theta", [&](const std::string& v) { cfg.theta = std::stod(v); }},
      {"rank", [&](const std::string& v) { cfg.rank = std::stoi(v); }},
      {"wsd", [&](const std::string& v) { cfg.wsd = v; }},
      {"centrality", [&](const std::string& v) { cfg.centrality = v; }},
      {"alpha", [&](const std::string& v) { cfg.alpha = std::stod(v); }},
      {"beta", [&](const std::string& v) { cfg.beta = std::stod(v); }},
      {"damping", [&](const std::string& v) { cfg.damping = std::stod(v); }},
      {"weights", [&](const std::string& v) { cfg.weights = v; }},
      {"relevance", [&](const std::string& v) { cfg.relevance = v; }},
      {"redundancy", [&](const std::string& v) { cfg.redundancy = v; }},
      {"redundancy-scale", [&](const std::string& v) { cfg.redundancy_scale = std::stod(v); }},
      {"wordnet", [&](const std::string& v) { cfg.wordnet = v; }},
      {"sentiment-lexicon", [&](const std::string& v) { cfg.sentiment_path = v; }},
      {"stoplist", [&](const std::string& v) { cfg.stoplist_path = v; }},
      {"seed", [&](const std::string& v) { cfg.seed = std::stoull(v); }},
  };

  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      fail(kExitConfig, path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      fail(kExitConfig,
           path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (cmd->count("--" + key) > 0) continue;  // explicit flag wins
    try {
      it->second(value);
    } catch (const std::exception&) {
      fail(kExitConfig,
           path.string() + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
}

int budget_for(const RunConfig& cfg, const text::Document& doc) {
  if (cfg.percent > 0) {
    int total = 0;
    for (const auto& s : doc.sentences) total += s.word_len;
    return std::max(1, static_cast<int>(total * cfg.percent / 100.0));
  }
  return cfg.length;
}

PipelineResult run_hybrid(const RunConfig& cfg, const text::Document& doc) {
  const auto rows = features::compute_features(
      doc, cfg.stoplist, cfg.sentiment ? &*cfg.sentiment : nullptr);
  const auto weights = cfg.feature_weights();
  PipelineResult out;
  out.scores = features::total_scores(rows, weights);
  ExtractionConfig ext;
  ext.theta = cfg.theta < 0 ? 0.1 : cfg.theta;
  ext.budget_words = budget_for(cfg, doc);
  out.summary = features::extract_greedy(out.scores, doc, cfg.stoplist, ext);
  out.params = {{"theta", ext.theta},
                {"budget_words", ext.budget_words},
                {"weights",
                 {weights.position, weights.tfidf, weights.aggregate_sim, weights.centroid,
                  weights.sentiment}}};
  return out;
}

PipelineResult run_lsa(const RunConfig& cfg, const text::Document& doc,
                       const std::string& model) {
  lsa::TermSentenceMatrix matrix;
  try {
    matrix = lsa::build_matrix(doc, cfg.stoplist);
  } catch (const lsa::EmptyVocabulary& e) {
    fail(kExitPipeline, e.what());
  }
  if (!cfg.dump_matrix.empty()) write_file(cfg.dump_matrix, lsa::to_csv(matrix));
  const int n = static_cast<int>(doc.sentences.size());
  const int max_rank = static_cast<int>(std::min(matrix.values.rows(), matrix.values.cols()));
  const int r = std::min(max_rank, cfg.rank > 0 ? cfg.rank : std::min(n, 10));
  const auto factors = lsa::svd(matrix, r);

  ExtractionConfig ext;
  ext.budget_words = budget_for(cfg, doc);
  PipelineResult out;
  out.params = {{"rank", r}, {"budget_words", ext.budget_words}};

  auto order_to_summary = [&](const std::vector<int>& order) {
    ExtractionConfig budget_only = ext;
    budget_only.theta = 1.1;  // these models have no redundancy gate
    return text::select_by_order(order, doc, cfg.stoplist, budget_only);
  };
  auto scores_to_summary = [&](const std::vector<double>& scores) {
    std::vector<int> order(scores.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)]; });
    return order_to_summary(order);
  };

  if (model == "gong") {
    out.summary = order_to_summary(lsa::model_gong_liu(factors, n));
  } else if (model == "murray") {
    out.summary = order_to_summary(lsa::model_murray(factors, n));
  } else if (model == "sj") {
    out.scores = lsa::model_sj(factors);
    out.summary = scores_to_summary(out.scores);
  } else if (model == "cross") {
    out.scores = lsa::model_cross(factors);
    out.summary = scores_to_summary(out.scores);
  } else if (model == "topic") {
    out.summary = order_to_summary(lsa::model_topic(factors, n));
  } else if (model == "mincorr") {
    ext.theta = cfg.theta < 0 ? 0.4 : cfg.theta;
    out.summary = lsa::model_min_correlation(factors, doc, cfg.stoplist, ext);
    out.params["theta"] = ext.theta;
  } else if (model == "lsacs") {
    ext.theta = cfg.theta < 0 ? 0.4 : cfg.theta;
    out.summary = lsa::model_lsacs(factors, lsa::LsacsCase::SigmaVt, doc, cfg.stoplist, ext);
    out.scores = lsa::lsacs_concept_entropies(factors, lsa::LsacsCase::SigmaVt);
    out.params["theta"] = ext.theta;
  } else if (model == "lsass") {
    ext.theta = cfg.theta < 0 ? 0.4 : cfg.theta;
    out.summary = lsa::model_lsass(factors, doc, cfg.stoplist, ext);
    out.scores = lsa::lsass_entropies(factors);
    out.params["theta"] = ext.theta;
  } else {
    fail(kExitConfig, "unknown lsa model '" + model +
                          "' (gong|murray|sj|cross|topic|mincorr|lsacs|lsass)");
  }
  return out;
}

PipelineResult run_lexnet(const RunConfig& cfg, const text::Document& doc) {
  if (!cfg.lexdb) fail(kExitConfig, "--method lexnet requires --wordnet DIR");
  const auto net = lexnet::build_lexnetwork(doc, cfg.wsd_variant(), *cfg.lexdb, cfg.stoplist);
  if (!cfg.dump_network.empty()) write_file(cfg.dump_network, lexnet::to_csv(net));
  ExtractionConfig ext;
  ext.theta = cfg.theta < 0 ? 0.10 : cfg.theta;
  ext.budget_words = budget_for(cfg, doc);
  PipelineResult out;
  const auto measure = cfg.measure_or_fail(cfg.centrality);
  out.scores = centrality::compute(measure, net.graph, cfg.centrality_params());
  out.summary = lexnet::rank_and_extract(net, measure, cfg.centrality_params(), doc,
                                         cfg.stoplist, ext);
  out.params = {{"theta", ext.theta},
                {"budget_words", ext.budget_words},
                {"wsd", cfg.wsd},
                {"centrality", cfg.centrality}};
  return out;
}

PipelineResult run_ilp(const RunConfig& cfg, const text::Document& doc) {
  if (!cfg.lexdb) fail(kExitConfig, "--method ilp requires --wordnet DIR");
  const auto net = lexnet::build_lexnetwork(doc, cfg.wsd_variant(), *cfg.lexdb, cfg.stoplist);
  if (!cfg.dump_network.empty()) write_file(cfg.dump_network, lexnet::to_csv(net));
  const int n = static_cast<int>(doc.sentences.size());

  // relevance: one centrality or "hybrid:a+b"
  std::vector<double> relevance;
  if (cfg.relevance.rfind("hybrid:", 0) == 0) {
    std::vector<std::vector<double>> parts;
    std::stringstream ss(cfg.relevance.substr(7));
    std::string name;
    while (std::getline(ss, name, '+'))
      parts.push_back(centrality::compute(cfg.measure_or_fail(name), net.graph,
                                          cfg.centrality_params()));
    if (parts.empty()) fail(kExitConfig, "--relevance hybrid: needs at least one measure");
    relevance = ilp::hybridize_relevance(parts);
  } else {
    relevance = centrality::compute(cfg.measure_or_fail(cfg.relevance), net.graph,
                                    cfg.centrality_params());
  }

  ilp::IlpInstance inst;
  inst.n = n;
  inst.relevance = relevance;
  inst.budget = budget_for(cfg, doc);
  inst.redundancy = linalg::Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::vector<int> kept;  // empty sentences cannot enter the instance
  for (int i = 0; i < n; ++i)
    if (doc.sentences[static_cast<std::size_t>(i)].word_len > 0) kept.push_back(i);

  if (cfg.redundancy == "lexnet") {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        inst.redundancy(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            net.graph.weight(i, j) * cfg.redundancy_scale;
  } else if (cfg.redundancy == "cosine") {
    std::vector<text::TermVector> vecs;
    for (const auto& s : doc.sentences)
      vecs.push_back(text::TermVector::counts(text::remove_stopwords(s.tokens, cfg.stoplist)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          inst.redundancy(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
              text::cosine_similarity(vecs[static_cast<std::size_t>(i)],
                                      vecs[static_cast<std::size_t>(j)]) *
              cfg.redundancy_scale;
  } else {
    fail(kExitConfig, "unknown --redundancy '" + cfg.redundancy + "' (lexnet|cosine)");
  }

  // restrict to non-empty sentences
  ilp::IlpInstance sub;
  sub.n = static_cast<int>(kept.size());
  sub.budget = inst.budget;
  sub.redundancy = linalg::Matrix(kept.size(), kept.size());
  for (std::size_t a = 0; a < kept.size(); ++a) {
    sub.relevance.push_back(inst.relevance[static_cast<std::size_t>(kept[a])]);
    sub.lengths.push_back(doc.sentences[static_cast<std::size_t>(kept[a])].word_len);
    for (std::size_t b = 0; b < kept.size(); ++b)
      sub.redundancy(a, b) = inst.redundancy(static_cast<std::size_t>(kept[a]),
                                             static_cast<std::size_t>(kept[b]));
  }

  if (!cfg.dump_instance.empty()) write_file(cfg.dump_instance, ilp::to_csv(sub));
  ilp::IlpSolution sol;
  try {
    sol = ilp::solve_lexnet_ilp(sub);
  } catch (const std::exception& e) {
    fail(kExitPipeline, e.what());
  }

  PipelineResult out;
  out.scores = relevance;
  for (int local : sol.selected) out.summary.indices.push_back(kept[static_cast<std::size_t>(local)]);
  std::sort(out.summary.indices.begin(), out.summary.indices.end());
  out.summary.selection_order = out.summary.indices;
  for (int idx : out.summary.indices)
    out.summary.words += doc.sentences[static_cast<std::size_t>(idx)].word_len;
  out.params = {{"budget_words", inst.budget},
                {"relevance", cfg.relevance},
                {"redundancy", cfg.redundancy},
                {"redundancy_scale", cfg.redundancy_scale},
                {"objective", sol.objective},
                {"optimal", sol.optimal},
                {"wsd", cfg.wsd}};
  return out;
}

PipelineResult summarize_document(const RunConfig& cfg, const text::Document& doc) {
  if (cfg.method == "hybrid") return run_hybrid(cfg, doc);
  if (cfg.method.rfind("lsa:", 0) == 0) return run_lsa(cfg, doc, cfg.method.substr(4));
  if (cfg.method == "lexnet") return run_lexnet(cfg, doc);
  if (cfg.method == "ilp") return run_ilp(cfg, doc);
  fail(kExitConfig, "unknown --method '" + cfg.method + "' (hybrid|lsa:<model>|lexnet|ilp)");
}

text::Document load_document(const RunConfig& cfg, const fs::path& path) {
  const std::string raw = read_file(path);
  const std::string body = text::extract_duc_text(raw);
  text::Document doc = text::make_document(path.stem().string(), body,
                                           cfg.lexdb ? &*cfg.lexdb : nullptr, cfg.stoplist);
  if (doc.sentences.empty()) fail(kExitPipeline, "no sentences found in " + path.string());
  return doc;
}

eval::RougeConfig rouge_config(int limit_words, int n_max, std::optional<int> skip_gap) {
  eval::RougeConfig cfg;
  cfg.word_limit = limit_words;
  cfg.n_max = n_max;
  cfg.skip_gap = skip_gap;
  return cfg;
}

// --metrics "1,2,L,W,S,SU": chooses the emitted rows and drives n_max
struct MetricChoice {
  std::set<std::string> names;  // empty = all
  int n_max = 2;
};

MetricChoice parse_metrics(const std::string& spec, int default_n_max) {
  MetricChoice out;
  out.n_max = default_n_max;
  if (spec.empty()) return out;
  out.n_max = 0;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::isdigit(static_cast<unsigned char>(item[0]))) {
      int n = 0;
      try {
        n = std::stoi(item);
      } catch (const std::exception&) {
        fail(kExitConfig, "--metrics: bad entry '" + item + "'");
      }
      if (n < 1 || n > 10) fail(kExitConfig, "--metrics: ROUGE-N order must be 1..10");
      out.n_max = std::max(out.n_max, n);
      out.names.insert("ROUGE-" + std::to_string(n));
    } else if (item == "L") {
      out.names.insert("ROUGE-L");
    } else if (item == "W") {
      out.names.insert("ROUGE-W");
    } else if (item == "S") {
      out.names.insert("ROUGE-S*");
    } else if (item == "SU") {
      out.names.insert("ROUGE-SU*");
    } else {
      fail(kExitConfig, "--metrics: unknown entry '" + item + "' (1..10, L, W, S, SU)");
    }
  }
  out.n_max = std::max(out.n_max, 1);
  return out;
}

bool metric_selected(const MetricChoice& choice, const std::string& name) {
  return choice.names.empty() || choice.names.count(name) > 0;
}

std::string summary_block(const text::Document& doc, const Summary& summary) {
  std::string out;
  for (int idx : summary.indices) {
    out += doc.sentences[static_cast<std::size_t>(idx)].raw;
    out.push_back('\n');
  }
  return out;
}

int cmd_summarize(RunConfig& cfg, const std::string& file, const std::string& output,
                  const std::string& sidecar) {
  cfg.load_resources();
  const text::Document doc = load_document(cfg, file);
  PipelineResult result;
  try {
    result = summarize_document(cfg, doc);
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    fail(kExitPipeline, e.what());
  }

  const std::string block = summary_block(doc, result.summary);
  if (output.empty()) {
    std::cout << block;
  } else {
    write_file(output, block);
  }

  json side;
  side["document"] = doc.id;
  side["method"] = cfg.method;
  side["seed"] = cfg.seed;
  side["parameters"] = result.params;
  side["selected"] = result.summary.indices;
  side["selection_order"] = result.summary.selection_order;
  side["word_count"] = result.summary.words;
  side["sentence_count"] = doc.sentences.size();
  if (!result.scores.empty()) side["scores"] = result.scores;
  const std::string side_path = !sidecar.empty() ? sidecar
                                : !output.empty() ? output + ".json"
                                                  : "";
  if (!side_path.empty())
    write_file(side_path, side.dump(2) + "\n");
  else
    std::cerr << side.dump(2) << "\n";
  return 0;
}

std::vector<eval::MetricResult> evaluate_texts(const std::string& system_text,
                                               const std::vector<std::string>& reference_texts,
                                               const eval::RougeConfig& rc) {
  const auto sys = text::tokenize(system_text);
  std::vector<std::vector<std::string>> refs;
  for (const auto& r : reference_texts) refs.push_back(text::tokenize(r));
  return eval::score_all(sys, refs, rc);
}

int cmd_evaluate(const std::string& system_file, const std::vector<std::string>& reference_files,
                 int limit_words, int n_max, const std::string& metrics,
                 const std::string& output) {
  if (reference_files.empty()) fail(kExitConfig, "evaluate needs at least one --reference");
  const MetricChoice choice = parse_metrics(metrics, n_max);
  const std::string system_text = read_file(system_file);
  std::vector<std::string> refs;
  for (const auto& f : reference_files) refs.push_back(read_file(f));

  std::ostringstream csv;
  csv << "metric,precision,recall,f,ci_low,ci_high\n";
  for (const auto& r : evaluate_texts(system_text, refs,
                                      rouge_config(limit_words, choice.n_max, std::nullopt))) {
    if (!metric_selected(choice, r.metric)) continue;
    csv << r.metric << "," << fmt(r.prf.precision) << "," << fmt(r.prf.recall) << ","
        << fmt(r.prf.f) << ",,\n";
  }
  if (output.empty())
    std::cout << csv.str();
  else
    write_file(output, csv.str());
  return 0;
}

int cmd_corpus(RunConfig& cfg, const std::string& docs_dir, const std::string& models_dir,
               int limit_words, int n_max, const std::string& metrics, bool with_ci,
               const std::string& output) {
  const MetricChoice choice = parse_metrics(metrics, n_max);
  cfg.load_resources();
  if (!fs::is_directory(docs_dir)) fail(kExitIo, "not a directory: " + docs_dir);
  if (!fs::is_directory(models_dir)) fail(kExitIo, "not a directory: " + models_dir);

  std::vector<fs::path> docs;
  for (const auto& entry : fs::directory_iterator(docs_dir))
    if (entry.is_regular_file()) docs.push_back(entry.path());
  std::sort(docs.begin(), docs.end());
  if (docs.empty()) fail(kExitIo, "no documents in " + docs_dir);

  std::vector<fs::path> models;
  for (const auto& entry : fs::directory_iterator(models_dir))
    if (entry.is_regular_file()) models.push_back(entry.path());
  std::sort(models.begin(), models.end());

  const eval::RougeConfig rc = rouge_config(limit_words, choice.n_max, std::nullopt);
  std::ostringstream csv;
  csv << "document,metric,precision,recall,f\n";
  std::map<std::string, std::vector<eval::Prf>> per_metric;
  int failures = 0;

  for (const fs::path& doc_path : docs) {
    const std::string stem = doc_path.stem().string();
    std::vector<std::string> refs;
    for (const fs::path& m : models) {
      const std::string mstem = m.stem().string();
      if (mstem == stem || mstem.rfind(stem + ".", 0) == 0 || mstem.rfind(stem + "_", 0) == 0 ||
          mstem.rfind(stem + "-", 0) == 0)
        refs.push_back(read_file(m));
    }
    if (refs.empty()) {
      std::cerr << "warning: no reference summary for " << doc_path.filename().string()
                << ", skipped\n";
      ++failures;
      continue;
    }
    try {
      const text::Document doc = load_document(cfg, doc_path);
      const PipelineResult result = summarize_document(cfg, doc);
      const std::string system_text = text::summary_text(doc, result.summary);
      for (const auto& r : evaluate_texts(system_text, refs, rc)) {
        if (!metric_selected(choice, r.metric)) continue;
        csv << stem << "," << r.metric << "," << fmt(r.prf.precision) << ","
            << fmt(r.prf.recall) << "," << fmt(r.prf.f) << "\n";
        per_metric[r.metric].push_back(r.prf);
      }
    } catch (const CliError& e) {
      std::cerr << "error: " << doc_path.filename().string() << ": " << e.message << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cerr << "error: " << doc_path.filename().string() << ": " << e.what() << "\n";
      ++failures;
    }
  }

  csv << "document,metric,precision,recall,f,ci_low,ci_high\n";
  for (const auto& [metric, prfs] : per_metric) {
    double p = 0, r = 0, f = 0;
    std::vector<double> fscores;
    for (const auto& x : prfs) {
      p += x.precision;
      r += x.recall;
      f += x.f;
      fscores.push_back(x.f);
    }
    const double k = static_cast<double>(prfs.size());
    csv << "AGGREGATE," << metric << "," << fmt(p / k) << "," << fmt(r / k) << "," << fmt(f / k);
    if (with_ci && fscores.size() >= 2) {
      const auto [lo, hi] = eval::bootstrap_ci(fscores, 1000, cfg.seed);
      csv << "," << fmt(lo) << "," << fmt(hi) << "\n";
    } else {
      csv << ",,\n";
    }
  }

  if (output.empty())
    std::cout << csv.str();
  else
    write_file(output, csv.str());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extractive single-document summarizer and ROUGE toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string file, output, sidecar, config_file;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--method", cfg.method,
                    "hybrid | lsa:<gong|murray|sj|cross|topic|mincorr|lsacs|lsass> | lexnet | ilp");
    cmd->add_option("--length", cfg.length, "summary budget in words")->check(CLI::PositiveNumber);
    cmd->add_option("--percent", cfg.percent, "budget as percent of document words");
    cmd->add_option("--theta", cfg.theta, "cosine redundancy threshold in [0,1]");
    cmd->add_option("--rank", cfg.rank, "retained SVD rank (lsa methods)");
    cmd->add_option("--wsd", cfg.wsd, "simple | adapted | cosine");
    cmd->add_option("--centrality", cfg.centrality,
                    "degree|eigen|closeness|alpha|betweenness|bonpow|hits|subgraph|pagerank");
    cmd->add_option("--alpha", cfg.alpha, "alpha centrality parameter");
    cmd->add_option("--beta", [&cfg](const std::vector<std::string>& vals) {
      try {
        cfg.beta = std::stod(vals.front());
      } catch (const std::exception&) {
        return false;
      }
      return true;
    }, "Bonacich attenuation (default 1/(2 lambda_max))");
    cmd->add_option("--damping", cfg.damping, "PageRank damping factor");
    cmd->add_option("--weights", cfg.weights, "w1,w2,w3,w4,w5 feature weights (hybrid)");
    cmd->add_option("--relevance", cfg.relevance, "ilp relevance: <centrality> or hybrid:a+b");
    cmd->add_option("--redundancy", cfg.redundancy, "ilp redundancy: lexnet | cosine");
    cmd->add_option("--redundancy-scale", cfg.redundancy_scale, "redundancy scale factor");
    cmd->add_option("--wordnet", cfg.wordnet, "WordNet 3.x database directory");
    cmd->add_option("--sentiment-lexicon", cfg.sentiment_path, "word<TAB>score polarity file");
    cmd->add_option("--stoplist", cfg.stoplist_path, "stopword list override (one word per line)");
    cmd->add_option("--seed", cfg.seed, "RNG seed for bootstrap resampling");
    cmd->add_option("--config", config_file, "flat key = value configuration file");
    cmd->add_option("--dump-matrix", cfg.dump_matrix, "write the term x sentence matrix CSV (lsa)");
    cmd->add_option("--dump-network", cfg.dump_network,
                    "write the lexical-network adjacency CSV (lexnet/ilp)");
    cmd->add_option("--dump-instance", cfg.dump_instance, "write the solver instance CSV (ilp)");
  };

  CLI::App* summarize = app.add_subcommand("summarize", "summarize one document");
  add_run_options(summarize);
  summarize->add_option("file", file, "input document (plain text or DUC SGML)")->required();
  summarize->add_option("--output", output, "summary output file (default stdout)");
  summarize->add_option("--sidecar", sidecar, "JSON sidecar path (default <output>.json)");

  std::string system_file;
  std::vector<std::string> reference_files;
  int limit_words = 100;
  int n_max = 2;
  std::string eval_output;
  CLI::App* evaluate = app.add_subcommand("evaluate", "score a summary against references");
  evaluate->add_option("--system", system_file, "system summary file")->required();
  evaluate->add_option("--reference", reference_files, "reference summary file(s)")->required();
  evaluate->add_option("--limit-words", limit_words, "truncate texts to this many words (0 = off)");
  evaluate->add_option("--max-n", n_max, "largest ROUGE-N order");
  std::string metrics;
  evaluate->add_option("--metrics", metrics, "comma list of metrics: 1..10, L, W, S, SU");
  evaluate->add_option("--output", eval_output, "CSV output file (default stdout)");

  std::string docs_dir, models_dir, corpus_output;
  bool with_ci = false;
  CLI::App* corpus = app.add_subcommand("corpus", "run a DUC-layout corpus");
  add_run_options(corpus);
  corpus->add_option("--docs", docs_dir, "documents directory")->required();
  corpus->add_option("--models", models_dir, "reference summaries directory")->required();
  corpus->add_option("--limit-words", limit_words, "truncate texts to this many words (0 = off)");
  corpus->add_option("--max-n", n_max, "largest ROUGE-N order");
  corpus->add_option("--metrics", metrics, "comma list of metrics: 1..10, L, W, S, SU");
  corpus->add_flag("--ci", with_ci, "bootstrap 95% confidence intervals on the aggregate");
  corpus->add_option("--output", corpus_output, "CSV output file (default stdout)");

  std::string training_file, fit_output;
  CLI::App* fit = app.add_subcommand("fit-weights", "fit feature weights by logistic regression");
  fit->add_option("--training", training_file,
                  "CSV: position,tfidf,aggsim,centroid,sentiment,label")
      ->required();
  fit->add_option("--output", fit_output, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (!config_file.empty())
      apply_config_file(config_file, cfg, summarize->parsed() ? summarize : corpus);
    if (summarize->parsed()) return cmd_summarize(cfg, file, output, sidecar);
    if (evaluate->parsed())
      return cmd_evaluate(system_file, reference_files, limit_words, n_max, metrics, eval_output);
    if (corpus->parsed())
      return cmd_corpus(cfg, docs_dir, models_dir, limit_words, n_max, metrics, with_ci,
                        corpus_output);
    if (fit->parsed()) {
      features::TrainingData data;
      try {
        data = features::load_training_csv(training_file);
      } catch (const std::invalid_argument& e) {
        fail(kExitIo, e.what());
      }
      features::LogisticFit result;
      try {
        result = features::fit_logistic_weights(data.rows, data.labels);
      } catch (const std::exception& e) {
        fail(kExitPipeline, e.what());
      }
      std::ostringstream csv;
      csv << "position,tfidf,aggsim,centroid,sentiment,intercept,accuracy,iterations\n";
      for (double w : result.weights) csv << fmt(w) << ",";
      csv << fmt(result.intercept) << "," << fmt(result.accuracy) << "," << result.iterations
          << "\n";
      if (fit_output.empty())
        std::cout << csv.str();
      else
        write_file(fit_output, csv.str());
      return 0;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipeline;
  }
  return 0;
}
