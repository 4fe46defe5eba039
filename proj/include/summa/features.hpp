#pragma once

#include <optional>
#include <vector>

#include "summa/lexicon.hpp"
#include "summa/text.hpp"

namespace summa::features {

struct FeatureRow {
  double position = 0;
  double tfidf = 0;
  double aggregate_sim = 0;
  double centroid = 0;
  double sentiment = 0;
};

struct FeatureWeights {
  double position = 1.0;
  double tfidf = 1.0;
  double aggregate_sim = 1.0;
  double centroid = 1.0;
  double sentiment = 1.0;
};

// Logistic-regression weights reported against a DUC training set
// (location, TF-IDF, centroid, aggregate similarity, sentiment), training
// accuracy 79.4%. Not reproducible here: the training data is unavailable.
inline constexpr FeatureWeights reference_fitted_weights{
    .position = 0.4469, .tfidf = 0.8440, .aggregate_sim = 0.1878,
    .centroid = 0.4545, .sentiment = 0.4978};

struct FeatureOptions {
  double idf_log_base = 10.0;
  // centroid keep-threshold on C_w; default: mean of all C_w
  std::optional<double> centroid_threshold;
};

// 1 - (i-1)/n for 1-based i; strictly decreasing, range (0, 1].
double position_score(int index, int n);

// Sum over sentence terms of tf-in-sentence * log(N/sf); sentences act as
// documents, the document as the corpus. Expects stopword-removed terms.
double tfidf_score(const std::vector<std::string>& sentence_terms,
                   const std::vector<std::vector<std::string>>& all_sentence_terms,
                   double log_base = 10.0);

// Sum of cosines against every other sentence, binary term weights.
double aggregate_similarity_score(std::size_t i, const std::vector<text::TermVector>& binary_vectors);

// Centroid word value = mean tf across sentences x idf, kept above the
// threshold; per-sentence sums min-max scaled so the best sentence gets 1.
std::vector<double> centroid_scores(const std::vector<std::vector<std::string>>& all_sentence_terms,
                                    const FeatureOptions& opt = {});

// Sum of |polarity| over the sentence's noun tokens.
double sentiment_score(const text::Sentence& sentence, const lex::SentimentLexicon& lexicon);

// All five features for every sentence, then column normalization applied
// to the tfidf and aggregate-similarity columns only.
std::vector<FeatureRow> compute_features(const text::Document& doc, const text::Stoplist& stoplist,
                                         const lex::SentimentLexicon* sentiment,
                                         const FeatureOptions& opt = {});

double total_score(const FeatureRow& row, const FeatureWeights& w);

std::vector<double> total_scores(const std::vector<FeatureRow>& rows, const FeatureWeights& w);

// PASS 2: visit by descending score (ties: lower index first); admit while
// the budget holds and cosine vs every selected sentence stays < theta;
// output re-ordered by original position.
Summary extract_greedy(const std::vector<double>& scores, const text::Document& doc,
                       const text::Stoplist& stoplist, const ExtractionConfig& cfg);

struct DegenerateLabels : std::invalid_argument {
  explicit DegenerateLabels(const std::string& what) : std::invalid_argument(what) {}
};

struct LogisticFit {
  std::vector<double> weights;  // one per feature column
  double intercept = 0;
  double accuracy = 0;  // training accuracy at the 0.5 cutoff
  int iterations = 0;
};

struct LogisticOptions {
  double step = 0.1;
  int max_iterations = 5000;
  double grad_tolerance = 1e-8;
};

// Maximum-likelihood logistic regression by gradient ascent.
LogisticFit fit_logistic_weights(const std::vector<std::vector<double>>& rows,
                                 const std::vector<int>& labels, const LogisticOptions& opt = {});

struct TrainingData {
  std::vector<std::vector<double>> rows;  // position,tfidf,aggsim,centroid,sentiment
  std::vector<int> labels;
};

// CSV with an optional header line: position,tfidf,aggsim,centroid,sentiment,label
TrainingData load_training_csv(const std::filesystem::path& file);

// Log-likelihood and its gradient (intercept last); exposed so tests can
// check the gradient against finite differences.
double logistic_log_likelihood(const std::vector<std::vector<double>>& rows,
                               const std::vector<int>& labels, const std::vector<double>& beta);
std::vector<double> logistic_gradient(const std::vector<std::vector<double>>& rows,
                                      const std::vector<int>& labels,
                                      const std::vector<double>& beta);

}  // namespace summa::features
