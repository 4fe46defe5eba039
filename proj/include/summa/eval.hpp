#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace summa::eval {

struct RougeConfig {
  int n_max = 2;                  // ROUGE-N up to this order
  double beta = 1.0;              // F-score balance
  double w_exponent = 1.2;        // ROUGE-W run weight, > 1
  std::optional<int> skip_gap;    // ROUGE-S max gap; nullopt = S*
  int word_limit = 100;           // truncate both sides first; <= 0 disables
  bool lowercase = true;
};

struct Prf {
  double precision = 0;
  double recall = 0;
  double f = 0;
};

// n-gram multiset; keys join tokens with '\x1f'.
std::map<std::string, int> ngram_counts(const std::vector<std::string>& tokens, int n);

// ordered in-sequence pairs, optionally capped at max_gap intervening words
std::map<std::string, int> skip_bigrams(const std::vector<std::string>& tokens,
                                        std::optional<int> max_gap = std::nullopt);

Prf rouge_n(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, int n,
            const RougeConfig& cfg = {});
Prf rouge_l(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg = {});
Prf rouge_w(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg = {});
Prf rouge_s(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg = {});
Prf rouge_su(const std::vector<std::string>& system,
             const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg = {});

int lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Percentile bootstrap of the mean at 2.5/97.5. Generator contract:
// mt19937_64(seed), index = next() % n, type-7 quantiles of the sorted
// resample means. Deterministic for a fixed seed.
std::pair<double, double> bootstrap_ci(const std::vector<double>& doc_scores, int resamples = 1000,
                                       std::uint64_t seed = 0);

// Repetition measure: sum over n in {2,3} of count(g) * log2 count(g) for
// every n-gram with count > 1.
double redundancy_entropy(const std::vector<std::string>& tokens);
double redundancy_entropy_corpus(const std::vector<std::vector<std::string>>& docs);

// Euclidean distance between (1,2,3)-gram count triples.
double text_closeness(const std::array<double, 3>& a, const std::array<double, 3>& b);

double pearson(const std::vector<double>& x, const std::vector<double>& y);
double spearman(const std::vector<double>& x, const std::vector<double>& y);
double kendall(const std::vector<double>& x, const std::vector<double>& y);
double mean_correlation(const std::vector<double>& coefficients);

// average-ties ranks (1-based)
std::vector<double> rank_values(const std::vector<double>& x);

struct MetricResult {
  std::string metric;
  Prf prf;
};

// All requested metrics ("1".."n_max", "L", "W", "S", "SU") for one
// system/reference set.
std::vector<MetricResult> score_all(const std::vector<std::string>& system,
                                    const std::vector<std::vector<std::string>>& references,
                                    const RougeConfig& cfg = {});

}  // namespace summa::eval
