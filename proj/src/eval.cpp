#include "summa/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace summa::eval {

namespace {

constexpr char kSep = '\x1f';
const std::string kBos = "\x02BOS";  // ROUGE-SU begin-of-sequence marker

std::vector<std::string> prepared(const std::vector<std::string>& tokens, const RougeConfig& cfg) {
  std::vector<std::string> out = tokens;
  if (cfg.word_limit > 0 && static_cast<int>(out.size()) > cfg.word_limit)
    out.resize(static_cast<std::size_t>(cfg.word_limit));
  if (cfg.lowercase) {
    for (std::string& t : out)
      std::transform(t.begin(), t.end(), t.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  }
  return out;
}

double f_score(double precision, double recall, double beta) {
  const double b2 = beta * beta;
  const double denom = recall + b2 * precision;
  return denom > 0 ? (1.0 + b2) * recall * precision / denom : 0.0;
}

int clipped_matches(const std::map<std::string, int>& sys, const std::map<std::string, int>& ref) {
  int total = 0;
  for (const auto& [gram, ref_count] : ref) {
    const auto it = sys.find(gram);
    if (it != sys.end()) total += std::min(it->second, ref_count);
  }
  return total;
}

int multiset_size(const std::map<std::string, int>& m) {
  int total = 0;
  for (const auto& [_, c] : m) total += c;
  return total;
}

Prf pair_counts_prf(const std::map<std::string, int>& sys_pairs, long sys_denominator,
                    const std::vector<std::map<std::string, int>>& ref_pairs,
                    const std::vector<long>& ref_denominators, double beta) {
  // multi-reference: arithmetic mean over the references
  Prf mean;
  for (std::size_t r = 0; r < ref_pairs.size(); ++r) {
    const int match = clipped_matches(sys_pairs, ref_pairs[r]);
    const double recall = ref_denominators[r] > 0 ? static_cast<double>(match) / ref_denominators[r] : 0.0;
    const double precision = sys_denominator > 0 ? static_cast<double>(match) / sys_denominator : 0.0;
    mean.recall += recall;
    mean.precision += precision;
    mean.f += f_score(precision, recall, beta);
  }
  const double k = static_cast<double>(ref_pairs.size());
  mean.recall /= k;
  mean.precision /= k;
  mean.f /= k;
  return mean;
}

}  // namespace

std::map<std::string, int> ngram_counts(const std::vector<std::string>& tokens, int n) {
  if (n < 1) throw std::invalid_argument("ngram_counts: n must be >= 1");
  std::map<std::string, int> out;
  if (static_cast<int>(tokens.size()) < n) return out;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key.push_back(kSep);
      key += tokens[i + static_cast<std::size_t>(k)];
    }
    ++out[key];
  }
  return out;
}

std::map<std::string, int> skip_bigrams(const std::vector<std::string>& tokens,
                                        std::optional<int> max_gap) {
  std::map<std::string, int> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      if (max_gap && static_cast<int>(j - i - 1) > *max_gap) break;
      ++out[tokens[i] + kSep + tokens[j]];
    }
  }
  return out;
}

Prf rouge_n(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, int n,
            const RougeConfig& cfg) {
  if (references.empty()) throw std::invalid_argument("rouge_n: at least one reference required");
  const auto sys_tokens = prepared(system, cfg);
  const auto sys_grams = ngram_counts(sys_tokens, n);

  // Summed multi-reference form: clipped matches and totals accumulate
  // over every reference before the division.
  long match_sum = 0, ref_total = 0;
  for (const auto& ref : references) {
    const auto ref_grams = ngram_counts(prepared(ref, cfg), n);
    match_sum += clipped_matches(sys_grams, ref_grams);
    ref_total += multiset_size(ref_grams);
  }
  const long sys_total = static_cast<long>(multiset_size(sys_grams)) *
                         static_cast<long>(references.size());
  Prf out;
  out.recall = ref_total > 0 ? static_cast<double>(match_sum) / ref_total : 0.0;
  out.precision = sys_total > 0 ? static_cast<double>(match_sum) / sys_total : 0.0;
  out.f = f_score(out.precision, out.recall, cfg.beta);
  return out;
}

int lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

Prf rouge_l(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg) {
  if (references.empty()) throw std::invalid_argument("rouge_l: at least one reference required");
  const auto sys_tokens = prepared(system, cfg);
  Prf mean;
  for (const auto& ref : references) {
    const auto ref_tokens = prepared(ref, cfg);
    const int lcs = lcs_length(ref_tokens, sys_tokens);
    const double recall = ref_tokens.empty() ? 0.0 : static_cast<double>(lcs) / ref_tokens.size();
    const double precision = sys_tokens.empty() ? 0.0 : static_cast<double>(lcs) / sys_tokens.size();
    mean.recall += recall;
    mean.precision += precision;
    mean.f += f_score(precision, recall, cfg.beta);
  }
  const double k = static_cast<double>(references.size());
  mean.recall /= k;
  mean.precision /= k;
  mean.f /= k;
  return mean;
}

namespace {

// weighted LCS with consecutive-run weight f(k) = k^w
double wlcs(const std::vector<std::string>& x, const std::vector<std::string>& y, double w) {
  const std::size_t m = x.size(), n = y.size();
  std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
  std::vector<std::vector<int>> run(m + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (x[i - 1] == y[j - 1]) {
        const int k = run[i - 1][j - 1];
        c[i][j] = c[i - 1][j - 1] + std::pow(k + 1, w) - std::pow(k, w);
        run[i][j] = k + 1;
      } else if (c[i - 1][j] >= c[i][j - 1]) {
        c[i][j] = c[i - 1][j];
      } else {
        c[i][j] = c[i][j - 1];
      }
    }
  }
  return c[m][n];
}

}  // namespace

Prf rouge_w(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg) {
  if (references.empty()) throw std::invalid_argument("rouge_w: at least one reference required");
  if (cfg.w_exponent <= 1.0) throw std::invalid_argument("rouge_w: exponent must exceed 1");
  const auto sys_tokens = prepared(system, cfg);
  const double w = cfg.w_exponent;
  const double inv = 1.0 / w;
  Prf mean;
  for (const auto& ref : references) {
    const auto ref_tokens = prepared(ref, cfg);
    const double score = wlcs(ref_tokens, sys_tokens, w);
    const double recall =
        ref_tokens.empty() ? 0.0 : std::pow(score / std::pow(ref_tokens.size(), w), inv);
    const double precision =
        sys_tokens.empty() ? 0.0 : std::pow(score / std::pow(sys_tokens.size(), w), inv);
    mean.recall += recall;
    mean.precision += precision;
    mean.f += f_score(precision, recall, cfg.beta);
  }
  const double k = static_cast<double>(references.size());
  mean.recall /= k;
  mean.precision /= k;
  mean.f /= k;
  return mean;
}

Prf rouge_s(const std::vector<std::string>& system,
            const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg) {
  if (references.empty()) throw std::invalid_argument("rouge_s: at least one reference required");
  const auto sys_tokens = prepared(system, cfg);
  const auto sys_pairs = skip_bigrams(sys_tokens, cfg.skip_gap);
  const long sys_denom = multiset_size(sys_pairs);
  std::vector<std::map<std::string, int>> ref_pairs;
  std::vector<long> ref_denoms;
  for (const auto& ref : references) {
    const auto ref_tokens = prepared(ref, cfg);
    ref_pairs.push_back(skip_bigrams(ref_tokens, cfg.skip_gap));
    ref_denoms.push_back(multiset_size(ref_pairs.back()));
  }
  return pair_counts_prf(sys_pairs, sys_denom, ref_pairs, ref_denoms, cfg.beta);
}

Prf rouge_su(const std::vector<std::string>& system,
             const std::vector<std::vector<std::string>>& references, const RougeConfig& cfg) {
  if (references.empty()) throw std::invalid_argument("rouge_su: at least one reference required");
  auto with_bos = [&](const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size() + 1);
    out.push_back(kBos);
    const auto t = prepared(tokens, cfg);
    out.insert(out.end(), t.begin(), t.end());
    return out;
  };
  const auto sys_tokens = with_bos(system);
  const auto sys_pairs = skip_bigrams(sys_tokens, cfg.skip_gap);
  const long sys_denom = multiset_size(sys_pairs);
  std::vector<std::map<std::string, int>> ref_pairs;
  std::vector<long> ref_denoms;
  for (const auto& ref : references) {
    const auto ref_tokens = with_bos(ref);
    ref_pairs.push_back(skip_bigrams(ref_tokens, cfg.skip_gap));
    ref_denoms.push_back(multiset_size(ref_pairs.back()));
  }
  return pair_counts_prf(sys_pairs, sys_denom, ref_pairs, ref_denoms, cfg.beta);
}

std::pair<double, double> bootstrap_ci(const std::vector<double>& doc_scores, int resamples,
                                       std::uint64_t seed) {
  if (doc_scores.size() < 2) throw std::invalid_argument("bootstrap_ci: need at least two scores");
  if (resamples < 1) throw std::invalid_argument("bootstrap_ci: need at least one resample");
  const std::size_t n = doc_scores.size();
  std::mt19937_64 rng(seed);
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (int r = 0; r < resamples; ++r) {
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += doc_scores[rng() % n];
    means[static_cast<std::size_t>(r)] = sum / static_cast<double>(n);
  }
  std::sort(means.begin(), means.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(means.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return means[lo] * (1.0 - frac) + means[hi] * frac;
  };
  return {quantile(0.025), quantile(0.975)};
}

double redundancy_entropy(const std::vector<std::string>& tokens) {
  double r = 0;
  for (int n = 2; n <= 3; ++n) {
    for (const auto& [gram, count] : ngram_counts(tokens, n)) {
      if (count > 1) r += count * std::log2(static_cast<double>(count));
    }
  }
  return r;
}

double redundancy_entropy_corpus(const std::vector<std::vector<std::string>>& docs) {
  if (docs.empty()) return 0.0;
  double sum = 0;
  for (const auto& d : docs) sum += redundancy_entropy(d);
  return sum / static_cast<double>(docs.size());
}

double text_closeness(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  double sum = 0;
  for (std::size_t i = 0; i < 3; ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least two points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  const double denom = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  if (denom == 0) throw std::invalid_argument("pearson: constant input");
  return (n * sxy - sx * sy) / denom;
}

std::vector<double> rank_values(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(rank_values(x), rank_values(y));
}

double kendall(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("kendall: length mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("kendall: need at least two points");
  long concordant = 0, discordant = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double prod = (x[i] - x[j]) * (y[i] - y[j]);
      if (prod > 0) ++concordant;
      else if (prod < 0) ++discordant;
    }
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(concordant - discordant) / pairs;
}

double mean_correlation(const std::vector<double>& coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("mean_correlation: empty input");
  return std::accumulate(coefficients.begin(), coefficients.end(), 0.0) /
         static_cast<double>(coefficients.size());
}

std::vector<MetricResult> score_all(const std::vector<std::string>& system,
                                    const std::vector<std::vector<std::string>>& references,
                                    const RougeConfig& cfg) {
  std::vector<MetricResult> out;
  for (int n = 1; n <= cfg.n_max; ++n)
    out.push_back({"ROUGE-" + std::to_string(n), rouge_n(system, references, n, cfg)});
  out.push_back({"ROUGE-L", rouge_l(system, references, cfg)});
  out.push_back({"ROUGE-W", rouge_w(system, references, cfg)});
  out.push_back({cfg.skip_gap ? "ROUGE-S" : "ROUGE-S*", rouge_s(system, references, cfg)});
  out.push_back({cfg.skip_gap ? "ROUGE-SU" : "ROUGE-SU*", rouge_su(system, references, cfg)});
  return out;
}

}  // namespace summa::eval
