#include "summa/lsa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace summa::lsa {

namespace {

linalg::Matrix weighted_w(const SvdFactors& f, bool scale_by_sigma) {
  linalg::Matrix w = f.vt;
  if (scale_by_sigma) {
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j) w(i, j) *= f.sigma[i];
  }
  return w;
}

void zero_non_positive(linalg::Matrix& w) {
  for (std::size_t i = 0; i < w.rows(); ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (w(i, j) < 0) w(i, j) = 0;
}

double entropy_of_positive(const std::vector<double>& values) {
  double sum = 0;
  for (double v : values)
    if (v > 0) sum += v;
  if (sum <= 0) return 0.0;
  double h = 0;
  for (double v : values) {
    if (v <= 0) continue;
    const double p = v / sum;
    h -= p * std::log2(p);
  }
  return h;
}

// descending-value order of one W row, FCFS on ties
std::vector<int> row_order(const linalg::Matrix& w, std::size_t row) {
  std::vector<int> order(w.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return w(row, static_cast<std::size_t>(a)) > w(row, static_cast<std::size_t>(b));
  });
  return order;
}

std::vector<int> order_by_scores_desc(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

TermSentenceMatrix build_matrix(const std::vector<std::vector<std::string>>& sentence_terms,
                                LocalWeight local, GlobalWeight global) {
  std::set<std::string> vocab;
  for (const auto& sent : sentence_terms) vocab.insert(sent.begin(), sent.end());
  if (vocab.empty()) throw EmptyVocabulary("build_matrix: no terms");

  TermSentenceMatrix out;
  out.local = local;
  out.global = global;
  out.terms.assign(vocab.begin(), vocab.end());
  const std::size_t m = out.terms.size(), n = sentence_terms.size();

  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < m; ++i) row_of[out.terms[i]] = i;

  linalg::Matrix tf(m, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const std::string& t : sentence_terms[j]) tf(row_of.at(t), j) += 1.0;

  out.values = linalg::Matrix(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    double max_tf = 0;
    for (std::size_t i = 0; i < m; ++i) max_tf = std::max(max_tf, tf(i, j));
    for (std::size_t i = 0; i < m; ++i) {
      const double f = tf(i, j);
      double lw = 0;
      switch (local) {
        case LocalWeight::Binary: lw = f > 0 ? 1.0 : 0.0; break;
        case LocalWeight::Tf: lw = f; break;
        case LocalWeight::Log: lw = std::log(f + 1.0); break;
        case LocalWeight::Augnorm: lw = f > 0 ? 0.5 + 0.5 * f / max_tf : 0.0; break;
      }
      out.values(i, j) = lw;
    }
  }

  if (global != GlobalWeight::None) {
    for (std::size_t i = 0; i < m; ++i) {
      int df = 0;
      double sq = 0, gf = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (tf(i, j) > 0) ++df;
        sq += tf(i, j) * tf(i, j);
        gf += tf(i, j);
      }
      double gw = 1.0;
      switch (global) {
        case GlobalWeight::None: break;
        case GlobalWeight::Normal:
          gw = sq > 0 ? 1.0 / std::sqrt(sq) : 0.0;
          break;
        case GlobalWeight::Idf:
          // log2(n/(1+df)), clamped at 0 so A stays non-negative
          gw = std::max(0.0, std::log2(static_cast<double>(n) / (1.0 + df)));
          break;
        case GlobalWeight::Entropy: {
          double h = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (tf(i, j) <= 0) continue;
            const double p = tf(i, j) / gf;
            h += p * std::log(p);
          }
          gw = n > 1 ? 1.0 + h / std::log(static_cast<double>(n)) : 1.0;
          break;
        }
      }
      for (std::size_t j = 0; j < n; ++j) out.values(i, j) *= gw;
    }
  }
  return out;
}

TermSentenceMatrix build_matrix(const text::Document& doc, const text::Stoplist& stoplist,
                                LocalWeight local, GlobalWeight global) {
  std::vector<std::vector<std::string>> terms;
  terms.reserve(doc.sentences.size());
  for (const text::Sentence& s : doc.sentences)
    terms.push_back(text::remove_stopwords(s.tokens, stoplist));
  return build_matrix(terms, local, global);
}

std::string to_csv(const TermSentenceMatrix& m) {
  std::ostringstream out;
  out << "term";
  for (std::size_t j = 0; j < m.values.cols(); ++j) out << ",s" << (j + 1);
  out << "\n";
  for (std::size_t i = 0; i < m.terms.size(); ++i) {
    out << m.terms[i];
    for (std::size_t j = 0; j < m.values.cols(); ++j) {
      out << ",";
      std::ostringstream cell;
      cell << m.values(i, j);
      out << cell.str();
    }
    out << "\n";
  }
  return out.str();
}

SvdFactors svd(const TermSentenceMatrix& m, int r) {
  const int max_rank = static_cast<int>(std::min(m.values.rows(), m.values.cols()));
  if (r < 1 || r > max_rank)
    throw RankTooLarge("svd: rank " + std::to_string(r) + " not in [1, " +
                       std::to_string(max_rank) + "]");
  const linalg::SvdResult full = linalg::svd(m.values);
  SvdFactors f;
  f.rank = r;
  f.sigma.assign(full.sigma.begin(), full.sigma.begin() + r);
  f.u = linalg::Matrix(m.values.rows(), static_cast<std::size_t>(r));
  f.vt = linalg::Matrix(static_cast<std::size_t>(r), m.values.cols());
  for (std::size_t i = 0; i < f.u.rows(); ++i)
    for (int k = 0; k < r; ++k) f.u(i, static_cast<std::size_t>(k)) = full.u(i, static_cast<std::size_t>(k));
  for (int k = 0; k < r; ++k)
    for (std::size_t j = 0; j < f.vt.cols(); ++j)
      f.vt(static_cast<std::size_t>(k), j) = full.vt(static_cast<std::size_t>(k), j);
  return f;
}

SvdFactors factors_from_vt(std::vector<double> sigma, linalg::Matrix vt) {
  if (sigma.size() != vt.rows())
    throw std::invalid_argument("factors_from_vt: sigma/Vt row mismatch");
  SvdFactors f;
  f.rank = static_cast<int>(sigma.size());
  f.sigma = std::move(sigma);
  f.vt = std::move(vt);
  return f;
}

double shannon_entropy(const std::vector<double>& p) {
  double sum = 0;
  for (double v : p) {
    if (v < 0) throw std::invalid_argument("shannon_entropy: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-3)
    throw std::invalid_argument("shannon_entropy: probabilities sum to " + std::to_string(sum));
  double h = 0;
  for (double v : p)
    if (v > 0) h -= v * std::log2(v);
  return h;
}

std::vector<int> model_gong_liu(const SvdFactors& f, int k) {
  if (k < 1) throw std::invalid_argument("model_gong_liu: k < 1");
  const int n = static_cast<int>(f.vt.cols());
  k = std::min(k, n);
  std::vector<int> picked;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  int concept_idx = 0;
  while (static_cast<int>(picked.size()) < k) {
    const std::vector<int> order = row_order(f.vt, static_cast<std::size_t>(concept_idx));
    for (int idx : order) {
      if (used[static_cast<std::size_t>(idx)]) continue;
      used[static_cast<std::size_t>(idx)] = true;
      picked.push_back(idx);
      break;
    }
    concept_idx = (concept_idx + 1) % f.rank;  // cycle when k > r
  }
  return picked;
}

std::vector<int> model_murray(const SvdFactors& f, int k) {
  if (k < 1) throw std::invalid_argument("model_murray: k < 1");
  const int n = static_cast<int>(f.vt.cols());
  k = std::min(k, n);
  const double sigma_sum = std::accumulate(f.sigma.begin(), f.sigma.end(), 0.0);

  std::vector<int> quota(static_cast<std::size_t>(f.rank), 0);
  int assigned = 0;
  for (int i = 0; i < f.rank; ++i) {
    const double share = sigma_sum > 0 ? f.sigma[static_cast<std::size_t>(i)] / sigma_sum : 0.0;
    quota[static_cast<std::size_t>(i)] = static_cast<int>(std::lround(k * share));
    assigned += quota[static_cast<std::size_t>(i)];
  }
  if (quota[0] == 0) {
    quota[0] = 1;
    ++assigned;
  }
  for (int i = 0; assigned < k; i = (i + 1) % f.rank) {  // leftovers to strongest first
    ++quota[static_cast<std::size_t>(i)];
    ++assigned;
  }
  for (int i = f.rank - 1; assigned > k && i >= 0; --i) {
    const int removable = i == 0 ? quota[0] - 1 : quota[static_cast<std::size_t>(i)];
    const int take = std::min(removable, assigned - k);
    quota[static_cast<std::size_t>(i)] -= take;
    assigned -= take;
  }

  std::vector<int> picked;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int concept_idx = 0; concept_idx < f.rank && static_cast<int>(picked.size()) < k; ++concept_idx) {
    int want = quota[static_cast<std::size_t>(concept_idx)];
    for (int idx : row_order(f.vt, static_cast<std::size_t>(concept_idx))) {
      if (want == 0) break;
      if (used[static_cast<std::size_t>(idx)]) continue;
      used[static_cast<std::size_t>(idx)] = true;
      picked.push_back(idx);
      --want;
    }
  }
  // quotas can run out of fresh sentences in tiny documents; fill from concept 1
  for (int idx : row_order(f.vt, 0)) {
    if (static_cast<int>(picked.size()) >= k) break;
    if (used[static_cast<std::size_t>(idx)]) continue;
    used[static_cast<std::size_t>(idx)] = true;
    picked.push_back(idx);
  }
  return picked;
}

std::vector<double> model_sj(const SvdFactors& f) {
  const std::size_t n = f.vt.cols();
  std::vector<double> scores(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0;
    for (int j = 0; j < f.rank; ++j) {
      const double v = f.vt(static_cast<std::size_t>(j), i);
      sum += v * v * f.sigma[static_cast<std::size_t>(j)] * f.sigma[static_cast<std::size_t>(j)];
    }
    scores[i] = std::sqrt(sum);
  }
  return scores;
}

namespace {

// Ozsoy preprocessing: zero Vt entries strictly below their row mean.
linalg::Matrix cross_preprocessed_w(const SvdFactors& f) {
  linalg::Matrix vt = f.vt;
  for (std::size_t i = 0; i < vt.rows(); ++i) {
    double mean = 0;
    for (std::size_t j = 0; j < vt.cols(); ++j) mean += vt(i, j);
    mean /= static_cast<double>(vt.cols());
    for (std::size_t j = 0; j < vt.cols(); ++j)
      if (vt(i, j) < mean) vt(i, j) = 0;
  }
  for (std::size_t i = 0; i < vt.rows(); ++i)
    for (std::size_t j = 0; j < vt.cols(); ++j) vt(i, j) *= f.sigma[i];
  return vt;
}

}  // namespace

std::vector<double> model_cross(const SvdFactors& f) {
  const linalg::Matrix w = cross_preprocessed_w(f);
  std::vector<double> scores(w.cols(), 0.0);
  for (std::size_t j = 0; j < w.cols(); ++j)
    for (std::size_t i = 0; i < w.rows(); ++i) scores[j] += w(i, j);
  return scores;
}

std::vector<int> model_topic(const SvdFactors& f, int k) {
  if (k < 1) throw std::invalid_argument("model_topic: k < 1");
  const linalg::Matrix w = cross_preprocessed_w(f);
  const std::size_t r = w.rows(), n = w.cols();
  k = std::min(k, static_cast<int>(n));

  std::vector<double> strength(r, 0.0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      double m_ij = 0;
      for (std::size_t s = 0; s < n; ++s)
        if (w(i, s) != 0 && w(j, s) != 0) m_ij += w(i, s) + w(j, s);
      strength[i] += m_ij;
    }
  }

  const std::vector<int> concept_order = order_by_scores_desc(strength);
  std::vector<int> picked;
  std::vector<bool> used(n, false);
  std::size_t round = 0;
  while (static_cast<int>(picked.size()) < k) {
    const std::size_t concept_idx =
        static_cast<std::size_t>(concept_order[round % concept_order.size()]);
    ++round;
    for (int idx : row_order(w, concept_idx)) {
      if (used[static_cast<std::size_t>(idx)]) continue;
      used[static_cast<std::size_t>(idx)] = true;
      picked.push_back(idx);
      break;
    }
  }
  return picked;
}

Summary model_min_correlation(const SvdFactors& f, const text::Document& doc,
                              const text::Stoplist& stoplist, const ExtractionConfig& cfg) {
  const std::size_t n = f.vt.cols();
  std::vector<int> order;
  std::vector<bool> used(n, false);
  int concept_idx = 0;
  while (order.size() < n) {
    const std::size_t row = static_cast<std::size_t>(concept_idx);
    int best = -1, worst = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (best < 0 || f.vt(row, j) > f.vt(row, static_cast<std::size_t>(best))) best = static_cast<int>(j);
    }
    if (best >= 0) {
      used[static_cast<std::size_t>(best)] = true;
      order.push_back(best);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (worst < 0 || f.vt(row, j) < f.vt(row, static_cast<std::size_t>(worst))) worst = static_cast<int>(j);
    }
    if (worst >= 0) {
      used[static_cast<std::size_t>(worst)] = true;
      order.push_back(worst);
    }
    concept_idx = (concept_idx + 1) % f.rank;
  }
  // theta is not part of this model: budget-gated admission only
  ExtractionConfig budget_only = cfg;
  budget_only.theta = 1.1;
  return text::select_by_order(order, doc, stoplist, budget_only);
}

std::vector<double> lsacs_concept_entropies(const SvdFactors& f, LsacsCase c) {
  linalg::Matrix w = weighted_w(f, c == LsacsCase::SigmaVt);
  zero_non_positive(w);
  std::vector<double> entropies(w.rows(), 0.0);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    std::vector<double> row(w.cols());
    for (std::size_t j = 0; j < w.cols(); ++j) row[j] = w(i, j);
    entropies[i] = entropy_of_positive(row);
  }
  return entropies;
}

std::vector<int> lsacs_order(const SvdFactors& f, LsacsCase c) {
  linalg::Matrix w = weighted_w(f, c == LsacsCase::SigmaVt);
  zero_non_positive(w);
  bool any_positive = false;
  for (std::size_t i = 0; i < w.rows() && !any_positive; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j)
      if (w(i, j) > 0) {
        any_positive = true;
        break;
      }
  if (!any_positive) throw AllConceptsEmpty("lsacs: every W entry non-positive");

  const std::vector<double> entropies = lsacs_concept_entropies(f, c);
  const std::vector<int> concept_order = order_by_scores_desc(entropies);

  std::vector<int> order;
  std::vector<bool> used(w.cols(), false);
  for (int ci : concept_order) {
    for (int idx : row_order(w, static_cast<std::size_t>(ci))) {
      if (w(static_cast<std::size_t>(ci), static_cast<std::size_t>(idx)) <= 0) break;
      if (used[static_cast<std::size_t>(idx)]) continue;
      used[static_cast<std::size_t>(idx)] = true;
      order.push_back(idx);
    }
  }
  for (std::size_t j = 0; j < w.cols(); ++j)  // zero-loading leftovers, FCFS
    if (!used[j]) order.push_back(static_cast<int>(j));
  return order;
}

Summary model_lsacs(const SvdFactors& f, LsacsCase c, const text::Document& doc,
                    const text::Stoplist& stoplist, const ExtractionConfig& cfg) {
  return text::select_by_order(lsacs_order(f, c), doc, stoplist, cfg);
}

std::vector<double> lsass_entropies(const SvdFactors& f) {
  linalg::Matrix w = weighted_w(f, true);
  zero_non_positive(w);
  std::vector<double> entropies(w.cols(), 0.0);
  for (std::size_t j = 0; j < w.cols(); ++j) {
    std::vector<double> col(w.rows());
    for (std::size_t i = 0; i < w.rows(); ++i) col[i] = w(i, j);
    entropies[j] = entropy_of_positive(col);
  }
  return entropies;
}

std::vector<int> lsass_order(const SvdFactors& f) {
  return order_by_scores_desc(lsass_entropies(f));
}

Summary model_lsass(const SvdFactors& f, const text::Document& doc, const text::Stoplist& stoplist,
                    const ExtractionConfig& cfg) {
  return text::select_by_order(lsass_order(f), doc, stoplist, cfg);
}

}  // namespace summa::lsa
