#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "reference_fixtures.hpp"
#include "summa/features.hpp"
#include "wordnet_fixture.hpp"

using namespace summa;
namespace fs = std::filesystem;

namespace {

text::Document doc_from_raws(const std::vector<std::string>& raws) {
  text::Document doc;
  for (std::size_t i = 0; i < raws.size(); ++i) {
    text::Sentence s;
    s.index = static_cast<int>(i);
    s.raw = raws[i];
    s.tokens = text::tokenize(s.raw);
    s.word_len = static_cast<int>(s.tokens.size());
    s.tagged = text::tag_tokens(s.tokens, s.raw, nullptr);
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

const lex::SentimentLexicon& sentiment_fixture() {
  static const lex::SentimentLexicon lexicon = [] {
    const fs::path file = fs::temp_directory_path() / "summa_feat_sentiment.tsv";
    fixture::write_sentiment_fixture(file);
    return lex::SentimentLexicon::load(file);
  }();
  return lexicon;
}

}  // namespace

TEST_CASE("position score") {
  CHECK(features::position_score(1, 9) == doctest::Approx(1.0));
  CHECK(features::position_score(2, 57) == doctest::Approx(0.98245614).epsilon(1e-8));
  CHECK(features::position_score(57, 57) == doctest::Approx(1.0 / 57));
  CHECK_THROWS_AS(features::position_score(0, 5), std::out_of_range);
  CHECK_THROWS_AS(features::position_score(6, 5), std::out_of_range);
}

TEST_CASE("position score strictly decreases with index") {
  for (int n : {3, 17, 57})
    for (int i = 2; i <= n; ++i)
      CHECK(features::position_score(i, n) < features::position_score(i - 1, n));
}

TEST_CASE("tfidf score") {
  // a term present in every sentence contributes log(1) = 0
  const std::vector<std::vector<std::string>> all1 = {{"x"}, {"x"}, {"x"}};
  CHECK(features::tfidf_score({"x"}, all1) == doctest::Approx(0.0));

  // tf=2 in 1 of 10 sentences: 2 * log10(10) = 2
  std::vector<std::vector<std::string>> all2(10, std::vector<std::string>{"filler"});
  all2[0] = {"term", "term"};
  CHECK(features::tfidf_score(all2[0], all2) == doctest::Approx(2.0));
}

TEST_CASE("aggregate similarity") {
  const std::vector<std::vector<std::string>> lone = {{"a", "b"}};
  std::vector<text::TermVector> v1 = {text::TermVector::binary(lone[0])};
  CHECK(features::aggregate_similarity_score(0, v1) == doctest::Approx(0.0));

  std::vector<text::TermVector> twins = {text::TermVector::binary({"a", "b"}),
                                         text::TermVector::binary({"a", "b"})};
  CHECK(features::aggregate_similarity_score(0, twins) == doctest::Approx(1.0));
  CHECK(features::aggregate_similarity_score(1, twins) == doctest::Approx(1.0));

  std::vector<text::TermVector> ortho = {text::TermVector::binary({"a"}),
                                         text::TermVector::binary({"b"}),
                                         text::TermVector::binary({"c"})};
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(features::aggregate_similarity_score(i, ortho) == doctest::Approx(0.0));
}

TEST_CASE("centroid scores") {
  // the sentence with the repeated keyword dominates and scales to 1
  const std::vector<std::vector<std::string>> terms = {
      {"flood", "flood", "rescue"}, {"flood", "aid"}, {"weather", "report"}};
  const auto scores = features::centroid_scores(terms);
  CHECK(scores[0] == doctest::Approx(1.0));
  CHECK(scores[0] >= scores[1]);
  CHECK(scores[2] == doctest::Approx(0.0));  // shares no retained centroid word
}

TEST_CASE("sentiment score") {
  const text::Document doc =
      doc_from_raws({"Alpha Beta Gamma Delta Epsilon spoke", "nothing to see here",
                     "Plus met Minus"});
  CHECK(features::sentiment_score(doc.sentences[0], sentiment_fixture()) ==
        doctest::Approx(1.060455).epsilon(1e-9));
  CHECK(features::sentiment_score(doc.sentences[1], sentiment_fixture()) == doctest::Approx(0.0));
  // +0.5 and -0.5 add as magnitudes
  CHECK(features::sentiment_score(doc.sentences[2], sentiment_fixture()) == doctest::Approx(1.0));
}

TEST_CASE("total score reproduces the published row sums") {
  const features::FeatureWeights unit;
  for (const auto& row : fixture::feature_table()) {
    const features::FeatureRow fr{row.position, row.tfidf, row.aggsim, row.centroid, row.sentiment};
    CHECK(features::total_score(fr, unit) == doctest::Approx(row.total).epsilon(1e-6));
  }
  CHECK(features::total_score({}, unit) == doctest::Approx(0.0));

  // fitted reference weights applied to row 0 (hand-computed dot product)
  const auto& r0 = fixture::feature_table()[0];
  const features::FeatureRow fr0{r0.position, r0.tfidf, r0.aggsim, r0.centroid, r0.sentiment};
  CHECK(features::total_score(fr0, features::reference_fitted_weights) ==
        doctest::Approx(1.2942644041132).epsilon(1e-9));
}

TEST_CASE("greedy extraction follows the published scores") {
  const auto& table = fixture::feature_table();
  std::vector<std::string> raws;
  std::vector<double> scores;
  const std::vector<std::string> vocab = {"aa", "bb", "cc", "dd", "ee", "ff", "gg", "hh",
                                          "ii", "jj", "kk", "ll", "mm", "nn", "oo", "pp"};
  for (std::size_t i = 0; i < table.size(); ++i) {
    raws.push_back(vocab[i] + " " + vocab[i] + "x " + vocab[i] + "y");
    scores.push_back(table[i].total);
  }
  const text::Document doc = doc_from_raws(raws);
  const text::Stoplist sl = text::Stoplist::builtin();

  ExtractionConfig cfg;
  cfg.theta = 0.1;
  cfg.budget_words = 1000;
  const Summary sum = features::extract_greedy(scores, doc, sl, cfg);
  REQUIRE_FALSE(sum.selection_order.empty());
  CHECK(sum.selection_order.front() == 0);  // highest total score is sentence 0

  // theta = 0: every candidate after the first has similarity >= 0
  cfg.theta = 0.0;
  const Summary only_top = features::extract_greedy(scores, doc, sl, cfg);
  CHECK(only_top.indices == std::vector<int>{0});

  // theta = 1: pure score order until the budget binds
  cfg.theta = 1.0;
  cfg.budget_words = 9;
  const Summary by_score = features::extract_greedy(scores, doc, sl, cfg);
  CHECK(by_score.selection_order == std::vector<int>{0, 5, 7});
}

TEST_CASE("extraction respects the word budget exactly") {
  std::mt19937 rng(17);
  const text::Stoplist sl = text::Stoplist::builtin();
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::string> raws;
    std::vector<double> scores;
    const int n = 3 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      std::string raw;
      const int len = 2 + static_cast<int>(rng() % 6);
      for (int w = 0; w < len; ++w) raw += "w" + std::to_string(i) + "_" + std::to_string(w) + " ";
      raws.push_back(raw);
      scores.push_back(static_cast<double>(rng() % 100));
    }
    const text::Document doc = doc_from_raws(raws);
    ExtractionConfig cfg;
    cfg.theta = 0.5;
    cfg.budget_words = 1 + static_cast<int>(rng() % 12);
    const Summary sum = features::extract_greedy(scores, doc, sl, cfg);
    CHECK(sum.words <= cfg.budget_words);
    int recount = 0;
    for (int idx : sum.indices) recount += doc.sentences[static_cast<std::size_t>(idx)].word_len;
    CHECK(recount == sum.words);

    // shifting or scaling all scores never changes the selected set
    std::vector<double> shifted = scores, scaled = scores;
    for (double& s : shifted) s += 123.5;
    for (double& s : scaled) s *= 7.25;
    CHECK(features::extract_greedy(shifted, doc, sl, cfg).indices == sum.indices);
    CHECK(features::extract_greedy(scaled, doc, sl, cfg).indices == sum.indices);
  }
}

TEST_CASE("extract_greedy rejects bad input") {
  const text::Stoplist sl = text::Stoplist::builtin();
  text::Document empty;
  CHECK_THROWS_AS(features::extract_greedy({}, empty, sl, {}), std::invalid_argument);
}

TEST_CASE("column normalization keeps orderings") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::string> raws;
    const int n = 4 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      std::string raw = "common ";
      for (int w = 0; w < i + 1; ++w) raw += "tok" + std::to_string(rng() % 8) + " ";
      raws.push_back(raw);
    }
    const text::Document doc = doc_from_raws(raws);
    const text::Stoplist sl = text::Stoplist::builtin();

    std::vector<std::vector<std::string>> terms;
    for (const auto& s : doc.sentences) terms.push_back(text::remove_stopwords(s.tokens, sl));
    std::vector<double> raw_tfidf;
    for (const auto& t : terms) raw_tfidf.push_back(features::tfidf_score(t, terms));

    const auto rows = features::compute_features(doc, sl, nullptr);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (raw_tfidf[i] < raw_tfidf[j]) CHECK(rows[i].tfidf <= rows[j].tfidf + 1e-12);
  }
}

TEST_CASE("logistic regression separates separable data") {
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (double x = -2.0; x <= 2.0; x += 0.25) {
    if (x == 0.0) continue;
    rows.push_back({x});
    labels.push_back(x > 0 ? 1 : 0);
  }
  const auto fit = features::fit_logistic_weights(rows, labels);
  CHECK(fit.accuracy == doctest::Approx(1.0));

  // 2-D separable
  std::vector<std::vector<double>> rows2;
  std::vector<int> labels2;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(0.2, 1.5);
  for (int i = 0; i < 40; ++i) {
    const double a = dist(rng), b = dist(rng);
    rows2.push_back({a, b});
    labels2.push_back(1);
    rows2.push_back({-a, -b});
    labels2.push_back(0);
  }
  CHECK(features::fit_logistic_weights(rows2, labels2).accuracy == doctest::Approx(1.0));
}

TEST_CASE("logistic gradient matches central finite differences") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t dim = 1 + rng() % 4, count = 8 + rng() % 20;
    std::vector<std::vector<double>> rows(count, std::vector<double>(dim));
    std::vector<int> labels(count);
    for (auto& r : rows)
      for (double& v : r) v = dist(rng);
    for (auto& y : labels) y = static_cast<int>(rng() % 2);
    labels[0] = 0;
    labels[1] = 1;

    std::vector<double> beta(dim + 1);
    for (double& b : beta) b = dist(rng);

    const auto grad = features::logistic_gradient(rows, labels, beta);
    const double h = 1e-6;
    for (std::size_t k = 0; k < beta.size(); ++k) {
      std::vector<double> plus = beta, minus = beta;
      plus[k] += h;
      minus[k] -= h;
      const double fd = (features::logistic_log_likelihood(rows, labels, plus) -
                         features::logistic_log_likelihood(rows, labels, minus)) /
                        (2 * h);
      const double denom = std::max(1.0, std::abs(fd));
      CHECK(std::abs(grad[k] - fd) / denom < 1e-5);
    }
  }
}

TEST_CASE("logistic regression input validation") {
  CHECK_THROWS_AS(features::fit_logistic_weights({{1.0}, {2.0}}, {1, 1}),
                  features::DegenerateLabels);
  CHECK_THROWS_AS(
      features::fit_logistic_weights({{std::numeric_limits<double>::quiet_NaN()}, {1.0}}, {0, 1}),
      std::invalid_argument);
}
