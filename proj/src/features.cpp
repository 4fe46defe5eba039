#include "summa/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace summa::features {

namespace {

// sentence frequency of each term across the stopword-removed sentences
std::map<std::string, int> sentence_frequencies(
    const std::vector<std::vector<std::string>>& all_terms) {
  std::map<std::string, int> sf;
  for (const auto& sent : all_terms) {
    std::map<std::string, bool> seen;
    for (const std::string& t : sent) {
      if (!seen.emplace(t, true).second) continue;
      ++sf[t];
    }
  }
  return sf;
}

double log_base(double x, double base) { return std::log(x) / std::log(base); }

}  // namespace

double position_score(int index, int n) {
  if (n < 1 || index < 1 || index > n)
    throw std::out_of_range("position_score: index " + std::to_string(index) + " not in [1, " +
                            std::to_string(n) + "]");
  return 1.0 - static_cast<double>(index - 1) / n;
}

double tfidf_score(const std::vector<std::string>& sentence_terms,
                   const std::vector<std::vector<std::string>>& all_sentence_terms,
                   double base) {
  const auto sf = sentence_frequencies(all_sentence_terms);
  const double n = static_cast<double>(all_sentence_terms.size());
  std::map<std::string, int> tf;
  for (const std::string& t : sentence_terms) ++tf[t];
  double score = 0;
  for (const auto& [term, count] : tf) {
    const auto it = sf.find(term);
    const int df = it == sf.end() ? 1 : it->second;
    score += count * log_base(n / df, base);
  }
  return score;
}

double aggregate_similarity_score(std::size_t i,
                                  const std::vector<text::TermVector>& binary_vectors) {
  double sum = 0;
  for (std::size_t j = 0; j < binary_vectors.size(); ++j) {
    if (j == i) continue;
    sum += text::cosine_similarity(binary_vectors[i], binary_vectors[j]);
  }
  return sum;
}

std::vector<double> centroid_scores(const std::vector<std::vector<std::string>>& all_terms,
                                    const FeatureOptions& opt) {
  const std::size_t n = all_terms.size();
  std::vector<double> scores(n, 0.0);
  if (n == 0) return scores;

  const auto sf = sentence_frequencies(all_terms);
  std::map<std::string, double> total_tf;
  for (const auto& sent : all_terms)
    for (const std::string& t : sent) total_tf[t] += 1.0;

  std::map<std::string, double> cw;
  double cw_sum = 0;
  for (const auto& [term, tf] : total_tf) {
    const double avg_tf = tf / static_cast<double>(n);
    const double idf = log_base(static_cast<double>(n) / sf.at(term), opt.idf_log_base);
    const double v = avg_tf * idf;
    cw[term] = v;
    cw_sum += v;
  }
  const double threshold =
      opt.centroid_threshold.value_or(cw.empty() ? 0.0 : cw_sum / static_cast<double>(cw.size()));
  for (auto& [term, v] : cw)
    if (v <= threshold) v = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (const std::string& t : all_terms[i]) s += cw.at(t);
    scores[i] = s;
  }
  const auto [mn, mx] = std::minmax_element(scores.begin(), scores.end());
  if (*mx > *mn) {
    for (double& s : scores) s = (s - *mn) / (*mx - *mn);
  } else if (*mx > 0) {
    for (double& s : scores) s = 1.0;
  }
  return scores;
}

double sentiment_score(const text::Sentence& sentence, const lex::SentimentLexicon& lexicon) {
  double score = 0;
  for (const auto& [token, pos] : sentence.tagged) {
    if (pos != text::Pos::Noun) continue;
    score += std::abs(lexicon.polarity(token));
  }
  return score;
}

std::vector<FeatureRow> compute_features(const text::Document& doc, const text::Stoplist& stoplist,
                                         const lex::SentimentLexicon* sentiment,
                                         const FeatureOptions& opt) {
  const std::size_t n = doc.sentences.size();
  std::vector<std::vector<std::string>> terms(n);
  std::vector<text::TermVector> binary(n);
  for (std::size_t i = 0; i < n; ++i) {
    terms[i] = text::remove_stopwords(doc.sentences[i].tokens, stoplist);
    binary[i] = text::TermVector::binary(terms[i]);
  }

  const std::vector<double> centroid = centroid_scores(terms, opt);
  std::vector<FeatureRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].position = position_score(static_cast<int>(i) + 1, static_cast<int>(n));
    rows[i].tfidf = tfidf_score(terms[i], terms, opt.idf_log_base);
    rows[i].aggregate_sim = aggregate_similarity_score(i, binary);
    rows[i].centroid = centroid[i];
    rows[i].sentiment = sentiment ? sentiment_score(doc.sentences[i], *sentiment) : 0.0;
  }

  // normalize the two unbounded columns to unit Euclidean norm
  linalg::Matrix m(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, 0) = rows[i].tfidf;
    m(i, 1) = rows[i].aggregate_sim;
  }
  text::column_normalize(m);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].tfidf = m(i, 0);
    rows[i].aggregate_sim = m(i, 1);
  }
  return rows;
}

double total_score(const FeatureRow& row, const FeatureWeights& w) {
  return w.position * row.position + w.tfidf * row.tfidf + w.aggregate_sim * row.aggregate_sim +
         w.centroid * row.centroid + w.sentiment * row.sentiment;
}

std::vector<double> total_scores(const std::vector<FeatureRow>& rows, const FeatureWeights& w) {
  std::vector<double> out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) out[i] = total_score(rows[i], w);
  return out;
}

Summary extract_greedy(const std::vector<double>& scores, const text::Document& doc,
                       const text::Stoplist& stoplist, const ExtractionConfig& cfg) {
  if (doc.sentences.empty()) throw std::invalid_argument("extract_greedy: empty document");
  if (scores.size() != doc.sentences.size())
    throw std::invalid_argument("extract_greedy: score/sentence count mismatch");
  for (double s : scores)
    if (!std::isfinite(s)) throw std::invalid_argument("extract_greedy: non-finite score");

  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  return text::select_by_order(order, doc, stoplist, cfg);
}

double logistic_log_likelihood(const std::vector<std::vector<double>>& rows,
                               const std::vector<int>& labels, const std::vector<double>& beta) {
  double ll = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double z = beta.back();
    for (std::size_t k = 0; k < rows[i].size(); ++k) z += beta[k] * rows[i][k];
    // y*z - log(1 + e^z), computed stably
    ll += labels[i] * z - (z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)));
  }
  return ll;
}

std::vector<double> logistic_gradient(const std::vector<std::vector<double>>& rows,
                                      const std::vector<int>& labels,
                                      const std::vector<double>& beta) {
  std::vector<double> grad(beta.size(), 0.0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double z = beta.back();
    for (std::size_t k = 0; k < rows[i].size(); ++k) z += beta[k] * rows[i][k];
    const double p = 1.0 / (1.0 + std::exp(-z));
    const double resid = labels[i] - p;
    for (std::size_t k = 0; k < rows[i].size(); ++k) grad[k] += resid * rows[i][k];
    grad.back() += resid;
  }
  return grad;
}

LogisticFit fit_logistic_weights(const std::vector<std::vector<double>>& rows,
                                 const std::vector<int>& labels, const LogisticOptions& opt) {
  if (rows.empty() || rows.size() != labels.size())
    throw std::invalid_argument("fit_logistic_weights: bad training data");
  const bool has0 = std::any_of(labels.begin(), labels.end(), [](int y) { return y == 0; });
  const bool has1 = std::any_of(labels.begin(), labels.end(), [](int y) { return y == 1; });
  if (!has0 || !has1) throw DegenerateLabels("fit_logistic_weights: single-class labels");
  const std::size_t dim = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != dim) throw std::invalid_argument("fit_logistic_weights: ragged rows");
    for (double v : r)
      if (!std::isfinite(v)) throw std::invalid_argument("fit_logistic_weights: non-finite feature");
  }

  std::vector<double> beta(dim + 1, 0.0);
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    const std::vector<double> grad = logistic_gradient(rows, labels, beta);
    if (linalg::norm2(grad) < opt.grad_tolerance) break;
    for (std::size_t k = 0; k < beta.size(); ++k)
      beta[k] += opt.step * grad[k] / static_cast<double>(rows.size());
  }

  LogisticFit fit;
  fit.weights.assign(beta.begin(), beta.end() - 1);
  fit.intercept = beta.back();
  fit.iterations = iter;
  int correct = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double z = fit.intercept;
    for (std::size_t k = 0; k < dim; ++k) z += fit.weights[k] * rows[i][k];
    const int pred = (1.0 / (1.0 + std::exp(-z))) >= 0.5 ? 1 : 0;
    correct += (pred == labels[i]);
  }
  fit.accuracy = static_cast<double>(correct) / static_cast<double>(rows.size());
  return fit;
}

TrainingData load_training_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("training data not readable: " + file.string());
  TrainingData data;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (lineno == 1 && !cells.empty() && cells[0] == "position") continue;  // header
    if (cells.size() != 6)
      throw std::invalid_argument(file.string() + ":" + std::to_string(lineno) +
                                  ": expected position,tfidf,aggsim,centroid,sentiment,label");
    try {
      std::vector<double> row;
      for (std::size_t k = 0; k < 5; ++k) row.push_back(std::stod(cells[k]));
      const int label = std::stoi(cells[5]);
      if (label != 0 && label != 1) throw std::invalid_argument("label must be 0 or 1");
      data.rows.push_back(std::move(row));
      data.labels.push_back(label);
    } catch (const std::exception&) {
      throw std::invalid_argument(file.string() + ":" + std::to_string(lineno) + ": bad value");
    }
  }
  return data;
}

}  // namespace summa::features
