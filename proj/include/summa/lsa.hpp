#pragma once

#include <string>
#include <vector>

#include "summa/linalg.hpp"
#include "summa/text.hpp"

namespace summa::lsa {

enum class LocalWeight { Binary, Tf, Log, Augnorm };
enum class GlobalWeight { None, Normal, Idf, Entropy };

struct TermSentenceMatrix {
  std::vector<std::string> terms;  // sorted vocabulary; row i <-> terms[i]
  linalg::Matrix values;           // |terms| x |sentences|, non-negative
  LocalWeight local = LocalWeight::Tf;
  GlobalWeight global = GlobalWeight::Idf;
};

struct EmptyVocabulary : std::invalid_argument {
  explicit EmptyVocabulary(const std::string& what) : std::invalid_argument(what) {}
};
struct RankTooLarge : std::invalid_argument {
  explicit RankTooLarge(const std::string& what) : std::invalid_argument(what) {}
};
struct AllConceptsEmpty : std::runtime_error {
  explicit AllConceptsEmpty(const std::string& what) : std::runtime_error(what) {}
};

// Weighted term x sentence matrix over explicit per-sentence term lists.
// The vocabulary is the sorted union of all terms.
TermSentenceMatrix build_matrix(const std::vector<std::vector<std::string>>& sentence_terms,
                                LocalWeight local = LocalWeight::Tf,
                                GlobalWeight global = GlobalWeight::Idf);

// Same over a document's stopword-removed tokens.
TermSentenceMatrix build_matrix(const text::Document& doc, const text::Stoplist& stoplist,
                                LocalWeight local = LocalWeight::Tf,
                                GlobalWeight global = GlobalWeight::Idf);

std::string to_csv(const TermSentenceMatrix& m);

struct SvdFactors {
  linalg::Matrix u;           // |terms| x r
  std::vector<double> sigma;  // r, descending
  linalg::Matrix vt;          // r x |sentences|
  int rank = 0;
};

// Rank-r thin SVD of the weighted matrix; largest-|entry| positive per U
// column, V follows. Throws RankTooLarge when r exceeds min(dims).
SvdFactors svd(const TermSentenceMatrix& m, int r);

// Factors assembled from given sigma and Vt rows (U left empty). Used when
// a selection model only needs the concept/sentence side.
SvdFactors factors_from_vt(std::vector<double> sigma, linalg::Matrix vt);

// -sum p log2 p with 0 log 0 = 0. Probabilities must be non-negative and
// sum to 1 within 1e-3.
double shannon_entropy(const std::vector<double>& p);

// ---- selection models -------------------------------------------------
// Index-returning models rank every sentence; Summary-returning models
// apply the word budget (and theta where the algorithm defines it).

// One sentence per concept, top concept first; cycles the concepts again
// when k exceeds the rank. FCFS ties.
std::vector<int> model_gong_liu(const SvdFactors& f, int k);

// Per-concept quotas proportional to sigma, round(k*sigma_i/sum sigma),
// at least one sentence from concept 1; rounding leftovers go to the
// strongest concepts first.
std::vector<int> model_murray(const SvdFactors& f, int k);

// score_i = sqrt(sum_j Vt[j][i]^2 sigma_j^2)  (squared Steinberger-Jezek form)
std::vector<double> model_sj(const SvdFactors& f);

// Zero each Vt row's entries strictly below the row mean, W = diag(sigma) Vt,
// score = column sum.
std::vector<double> model_cross(const SvdFactors& f);

// Cross preprocessing, then concept-x-concept strength M[i][j] =
// sum over sentences with both rows nonzero of W[i][s] + W[j][s] (i != j);
// concepts visited by descending row-sum strength, one sentence each.
std::vector<int> model_topic(const SvdFactors& f, int k);

// Per concept top-down, the argmax- and argmin-loading unselected
// sentences; budget only (theta is not part of this model).
Summary model_min_correlation(const SvdFactors& f, const text::Document& doc,
                              const text::Stoplist& stoplist, const ExtractionConfig& cfg);

enum class LsacsCase { Vt, SigmaVt };

// Concept entropies after zeroing non-positive W entries and row
// normalization (base-2).
std::vector<double> lsacs_concept_entropies(const SvdFactors& f, LsacsCase c);
// Full emission order: max-entropy concept's sentences by descending W
// (FCFS ties), then the next concepts while sentences remain.
std::vector<int> lsacs_order(const SvdFactors& f, LsacsCase c);
Summary model_lsacs(const SvdFactors& f, LsacsCase c, const text::Document& doc,
                    const text::Stoplist& stoplist, const ExtractionConfig& cfg);

// W = diag(sigma) Vt, zero non-positives, column-normalize; sentence
// information = column entropy; descending order, FCFS ties.
std::vector<double> lsass_entropies(const SvdFactors& f);
std::vector<int> lsass_order(const SvdFactors& f);
Summary model_lsass(const SvdFactors& f, const text::Document& doc, const text::Stoplist& stoplist,
                    const ExtractionConfig& cfg);

}  // namespace summa::lsa
