#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "reference_fixtures.hpp"
#include "summa/lsa.hpp"
#include "summa/text.hpp"

using namespace summa;

namespace {

// keyword hits per title (a token matches a keyword directly or with a
// trailing -s restored)
std::vector<std::vector<std::string>> nine_title_terms() {
  std::vector<std::vector<std::string>> out;
  for (const std::string& title : fixture::nine_titles()) {
    std::vector<std::string> hits;
    for (const std::string& tok : text::tokenize(title)) {
      for (const std::string& kw : fixture::title_keywords()) {
        if (tok == kw || tok + "s" == kw) {
          hits.push_back(kw);
          break;
        }
      }
    }
    out.push_back(std::move(hits));
  }
  return out;
}

lsa::TermSentenceMatrix nine_title_tf_matrix() {
  return lsa::build_matrix(nine_title_terms(), lsa::LocalWeight::Tf, lsa::GlobalWeight::None);
}

text::Document nine_dummy_sentences() {
  text::Document doc;
  for (int i = 0; i < 9; ++i) {
    text::Sentence s;
    s.index = i;
    s.raw = "s" + std::to_string(i) + "a s" + std::to_string(i) + "b";
    s.tokens = text::tokenize(s.raw);
    s.word_len = 2;
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

const ExtractionConfig kNoGate{1.1, 1 << 20};

}  // namespace

TEST_CASE("the nine-title matrix reproduces the published table exactly") {
  const auto m = nine_title_tf_matrix();
  REQUIRE(m.terms == fixture::title_keywords());  // sorted vocabulary
  const auto& expected = fixture::nine_title_matrix();
  for (std::size_t i = 0; i < 11; ++i)
    for (std::size_t j = 0; j < 9; ++j) CHECK(m.values(i, j) == expected[i][j]);
  CHECK(m.values(8, 5) == 2.0);  // rich counted twice in title 6
}

TEST_CASE("matrix CSV dump is byte-exact") {
  const std::string csv = lsa::to_csv(nine_title_tf_matrix());
  const std::string expected =
      "term,s1,s2,s3,s4,s5,s6,s7,s8,s9\n"
      "book,0,0,1,1,0,0,0,0,0\n"
      "dads,0,0,0,0,0,1,0,0,1\n"
      "dummies,0,1,0,0,0,0,0,1,0\n"
      "estate,0,0,0,0,0,0,1,0,1\n"
      "guide,1,0,0,0,0,1,0,0,0\n"
      "investing,1,1,1,1,1,1,1,1,1\n"
      "market,1,0,1,0,0,0,0,0,0\n"
      "real,0,0,0,0,0,0,1,0,1\n"
      "rich,0,0,0,0,0,2,0,0,1\n"
      "stock,1,0,1,0,0,0,0,1,0\n"
      "value,0,0,0,1,1,0,0,0,0\n";
  CHECK(csv == expected);
}

TEST_CASE("binary scheme flattens counts") {
  const auto m = lsa::build_matrix(nine_title_terms(), lsa::LocalWeight::Binary,
                                   lsa::GlobalWeight::None);
  for (std::size_t i = 0; i < m.values.rows(); ++i)
    for (std::size_t j = 0; j < m.values.cols(); ++j)
      CHECK((m.values(i, j) == 0.0 || m.values(i, j) == 1.0));
  CHECK(m.values(8, 5) == 1.0);
}

TEST_CASE("idf clamps ubiquitous terms at zero") {
  // "investing" appears in all nine sentences: log2(9/10) < 0 -> 0
  const auto m = lsa::build_matrix(nine_title_terms(), lsa::LocalWeight::Tf, lsa::GlobalWeight::Idf);
  const std::size_t row = 5;  // investing
  for (std::size_t j = 0; j < 9; ++j) CHECK(m.values(row, j) == 0.0);
  for (std::size_t i = 0; i < m.values.rows(); ++i)
    for (std::size_t j = 0; j < m.values.cols(); ++j) CHECK(m.values(i, j) >= 0.0);
}

TEST_CASE("empty vocabulary is rejected") {
  CHECK_THROWS_AS(lsa::build_matrix(std::vector<std::vector<std::string>>{{}, {}}),
                  lsa::EmptyVocabulary);
}

TEST_CASE("svd of the nine-title matrix matches the published singular values") {
  const auto f = lsa::svd(nine_title_tf_matrix(), 3);
  CHECK(f.sigma[0] == doctest::Approx(3.91).epsilon(0.01 / 3.91));
  CHECK(f.sigma[1] == doctest::Approx(2.61).epsilon(0.01 / 2.61));
  CHECK(f.sigma[2] == doctest::Approx(2.00).epsilon(0.01 / 2.00));
  // concept-1 loading is largest on sentence 6
  std::size_t argmax = 0;
  for (std::size_t j = 0; j < 9; ++j)
    if (f.vt(0, j) > f.vt(0, argmax)) argmax = j;
  CHECK(argmax == 5);
}

TEST_CASE("truncated svd is the best rank-r approximation") {
  // Frobenius error of the rank-r cut equals the discarded spectrum
  // (Eckart-Young), with the spectrum cross-checked against eigh(AtA)
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  lsa::TermSentenceMatrix m;
  m.terms = {"t1", "t2", "t3", "t4", "t5", "t6"};
  m.values = linalg::Matrix(6, 4);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.values(i, j) = dist(rng);

  const auto eig = linalg::eigh_symmetric(m.values.transposed() * m.values);
  for (int r = 1; r <= 4; ++r) {
    const auto f = lsa::svd(m, r);
    linalg::Matrix s(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k)
      s(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = f.sigma[static_cast<std::size_t>(k)];
    const linalg::Matrix approx = f.u * s * f.vt;
    double err2 = 0;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const double d = m.values(i, j) - approx(i, j);
        err2 += d * d;
      }
    double tail = 0;
    for (int k = r; k < 4; ++k) tail += std::max(0.0, eig.values[static_cast<std::size_t>(k)]);
    CHECK(err2 == doctest::Approx(tail).epsilon(1e-8));
  }
}

TEST_CASE("svd rank validation") {
  CHECK_THROWS_AS(lsa::svd(nine_title_tf_matrix(), 10), lsa::RankTooLarge);
  CHECK_THROWS_AS(lsa::svd(nine_title_tf_matrix(), 0), lsa::RankTooLarge);
}

TEST_CASE("shannon entropy") {
  CHECK(lsa::shannon_entropy({0.25, 0.25, 0.25, 0.25}) == doctest::Approx(2.0));
  CHECK(lsa::shannon_entropy({1.0, 0.0}) == doctest::Approx(0.0));
  CHECK(lsa::shannon_entropy({0.4848, 0.3235, 0.1916}) ==
        doctest::Approx(1.48984).epsilon(1e-3 / 1.48984));
  CHECK_THROWS_AS(lsa::shannon_entropy({-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(lsa::shannon_entropy({0.5, 0.3}), std::invalid_argument);
}

TEST_CASE("entropy is maximal for the uniform distribution") {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> dist(0.05, 1.0);
  for (int k = 2; k <= 8; ++k) {
    std::vector<double> p(static_cast<std::size_t>(k));
    double sum = 0;
    for (double& v : p) {
      v = dist(rng);
      sum += v;
    }
    for (double& v : p) v /= sum;
    CHECK(lsa::shannon_entropy(p) <= std::log2(static_cast<double>(k)) + 1e-12);
    CHECK(lsa::shannon_entropy(std::vector<double>(static_cast<std::size_t>(k), 1.0 / k)) ==
          doctest::Approx(std::log2(static_cast<double>(k))));
  }
}

TEST_CASE("gong-liu selection") {
  const auto f = lsa::svd(nine_title_tf_matrix(), 3);
  const auto one = lsa::model_gong_liu(f, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 5);  // concept-1 argmax = sentence 6

  // ties break to the lower index
  lsa::SvdFactors tie = lsa::factors_from_vt({1.0}, [] {
    linalg::Matrix vt(1, 3);
    vt(0, 0) = 0.5;
    vt(0, 1) = 0.5;
    vt(0, 2) = 0.1;
    return vt;
  }());
  CHECK(lsa::model_gong_liu(tie, 2) == std::vector<int>{0, 1});

  // k > r cycles the concepts
  const auto many = lsa::model_gong_liu(f, 5);
  CHECK(many.size() == 5);
  std::set<int> uniq(many.begin(), many.end());
  CHECK(uniq.size() == 5);
}

TEST_CASE("murray quotas follow the singular values") {
  const auto f = lsa::svd(nine_title_tf_matrix(), 3);
  // sigma = (3.91, 2.61, 2.00) and k=3 round to one sentence per concept
  const auto picks = lsa::model_murray(f, 3);
  REQUIRE(picks.size() == 3);
  CHECK(picks[0] == 5);  // concept-1 top
  // second pick: concept 2's best still-unselected loading
  std::size_t c2max = 9;
  for (std::size_t j = 0; j < 9; ++j) {
    if (static_cast<int>(j) == picks[0]) continue;
    if (c2max == 9 || f.vt(1, j) > f.vt(1, c2max)) c2max = j;
  }
  CHECK(picks[1] == static_cast<int>(c2max));

  CHECK(lsa::model_murray(f, 1) == std::vector<int>{5});

  // a degenerate spectrum sends every quota to concept 1
  lsa::SvdFactors deg = lsa::factors_from_vt({1.0, 0.0, 0.0}, [] {
    linalg::Matrix vt(3, 4);
    vt(0, 0) = 0.9;
    vt(0, 1) = 0.7;
    vt(0, 2) = 0.3;
    vt(0, 3) = 0.1;
    vt(1, 3) = 1.0;
    vt(2, 2) = 1.0;
    return vt;
  }());
  CHECK(lsa::model_murray(deg, 2) == std::vector<int>{0, 1});
}

TEST_CASE("sj scores") {
  lsa::SvdFactors rank1 = lsa::factors_from_vt({2.5}, [] {
    linalg::Matrix vt(1, 3);
    vt(0, 0) = 0.8;
    vt(0, 1) = -0.6;
    vt(0, 2) = 0.0;
    return vt;
  }());
  const auto s = lsa::model_sj(rank1);
  CHECK(s[0] == doctest::Approx(2.5 * 0.8));
  CHECK(s[1] == doctest::Approx(2.5 * 0.6));  // squared form is sign-blind
  CHECK(s[2] == doctest::Approx(0.0));

  const auto f = lsa::svd(nine_title_tf_matrix(), 3);
  const auto scores = lsa::model_sj(f);
  CHECK(scores[8] > scores[1]);  // S9 beats S2 and S5
  CHECK(scores[8] > scores[4]);
}

TEST_CASE("cross model zeroes below-mean loadings") {
  lsa::SvdFactors f = lsa::factors_from_vt({2.0}, [] {
    linalg::Matrix vt(1, 3);
    vt(0, 0) = 1.0;
    vt(0, 1) = 0.1;
    vt(0, 2) = 0.1;
    return vt;
  }());
  const auto scores = lsa::model_cross(f);
  CHECK(scores[0] == doctest::Approx(2.0));  // only the first entry survives
  CHECK(scores[1] == doctest::Approx(0.0));
  CHECK(scores[2] == doctest::Approx(0.0));

  // identical entries sit exactly on the mean and are all kept
  lsa::SvdFactors flat = lsa::factors_from_vt({3.0}, [] {
    linalg::Matrix vt(1, 4);
    for (std::size_t j = 0; j < 4; ++j) vt(0, j) = 0.5;
    return vt;
  }());
  for (double s : lsa::model_cross(flat)) CHECK(s == doctest::Approx(1.5));
}

TEST_CASE("cross model matches a brute-force recomputation on the nine titles") {
  const auto f = lsa::svd(nine_title_tf_matrix(), 3);
  const auto scores = lsa::model_cross(f);

  // independent recomputation straight from the definition
  std::vector<double> expected(9, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    double mean = 0;
    for (std::size_t j = 0; j < 9; ++j) mean += f.vt(i, j);
    mean /= 9.0;
    for (std::size_t j = 0; j < 9; ++j)
      if (f.vt(i, j) >= mean) expected[j] += f.sigma[i] * f.vt(i, j);
  }
  for (std::size_t j = 0; j < 9; ++j) CHECK(scores[j] == doctest::Approx(expected[j]));
  const auto top = std::max_element(scores.begin(), scores.end()) - scores.begin();
  const auto etop = std::max_element(expected.begin(), expected.end()) - expected.begin();
  CHECK(top == etop);
}

TEST_CASE("topic model concept strengths") {
  // two concepts with disjoint sentence support: off-diagonal strength zero
  lsa::SvdFactors disjoint = lsa::factors_from_vt({1.0, 1.0}, [] {
    linalg::Matrix vt(2, 4);
    vt(0, 0) = 0.9;
    vt(0, 1) = 0.8;
    vt(1, 2) = 0.9;
    vt(1, 3) = 0.8;
    return vt;
  }());
  // both concepts have zero cross strength -> FCFS, behaves like gong
  CHECK(lsa::model_topic(disjoint, 2) == lsa::model_gong_liu(disjoint, 2));

  // single concept reduces to gong
  lsa::SvdFactors single = lsa::factors_from_vt({2.0}, [] {
    linalg::Matrix vt(1, 4);
    vt(0, 0) = 0.1;
    vt(0, 1) = 0.9;
    vt(0, 2) = 0.5;
    vt(0, 3) = 0.2;
    return vt;
  }());
  CHECK(lsa::model_topic(single, 2) == lsa::model_gong_liu(single, 2));

  // synthetic 3-concept fixture vs exhaustive strength computation
  lsa::SvdFactors f = lsa::factors_from_vt({3.0, 2.0, 1.0}, [] {
    linalg::Matrix vt(3, 5);
    const double rows[3][5] = {{0.9, 0.7, 0.0, 0.4, 0.0},
                               {0.0, 0.6, 0.8, 0.5, 0.0},
                               {0.3, 0.0, 0.4, 0.6, 0.9}};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) vt(i, j) = rows[i][j];
    return vt;
  }());

  // oracle: preprocess + strengths exactly as defined
  linalg::Matrix w(3, 5);
  for (std::size_t i = 0; i < 3; ++i) {
    double mean = 0;
    for (std::size_t j = 0; j < 5; ++j) mean += f.vt(i, j);
    mean /= 5.0;
    for (std::size_t j = 0; j < 5; ++j)
      w(i, j) = f.vt(i, j) >= mean ? f.sigma[i] * f.vt(i, j) : 0.0;
  }
  std::vector<double> strength(3, 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::size_t s = 0; s < 5; ++s)
        if (w(i, s) != 0 && w(j, s) != 0) strength[i] += w(i, s) + w(j, s);
    }
  const std::size_t strongest =
      static_cast<std::size_t>(std::max_element(strength.begin(), strength.end()) - strength.begin());
  std::size_t w_argmax = 0;
  for (std::size_t j = 0; j < 5; ++j)
    if (w(strongest, j) > w(strongest, w_argmax)) w_argmax = j;
  CHECK(lsa::model_topic(f, 1) == std::vector<int>{static_cast<int>(w_argmax)});
}

TEST_CASE("min-correlation pairs extremes per concept") {
  const text::Document doc = nine_dummy_sentences();
  const text::Stoplist sl = text::Stoplist::builtin();

  lsa::SvdFactors two = lsa::factors_from_vt({1.0}, [] {
    linalg::Matrix vt(1, 2);
    vt(0, 0) = 0.9;
    vt(0, 1) = 0.2;
    return vt;
  }());
  text::Document doc2;
  doc2.sentences = {doc.sentences[0], doc.sentences[1]};
  const Summary both = lsa::model_min_correlation(two, doc2, sl, kNoGate);
  CHECK(both.indices == std::vector<int>{0, 1});

  lsa::SvdFactors three = lsa::factors_from_vt({1.0}, [] {
    linalg::Matrix vt(1, 3);
    vt(0, 0) = 0.9;
    vt(0, 1) = 0.5;
    vt(0, 2) = -0.8;
    return vt;
  }());
  text::Document doc3;
  doc3.sentences = {doc.sentences[0], doc.sentences[1], doc.sentences[2]};
  ExtractionConfig two_only = kNoGate;
  two_only.budget_words = 4;  // room for exactly two dummy sentences
  const Summary picks = lsa::model_min_correlation(three, doc3, sl, two_only);
  CHECK(picks.selection_order == std::vector<int>{0, 2});
}

TEST_CASE("min-correlation selects the least-similar pair on orthogonal topics") {
  // sentences 0/1 share topic A, sentence 2 is pure topic B: the picked
  // pair (argmax, argmin on concept 1) is the minimum-cosine pair of VtV
  lsa::SvdFactors f = lsa::factors_from_vt({2.0, 1.0}, [] {
    linalg::Matrix vt(2, 3);
    vt(0, 0) = 0.95;
    vt(0, 1) = 0.90;
    vt(0, 2) = 0.05;
    vt(1, 0) = 0.05;
    vt(1, 1) = 0.10;
    vt(1, 2) = 0.95;
    return vt;
  }());
  const text::Document doc = [&] {
    text::Document d;
    d.sentences = {nine_dummy_sentences().sentences[0], nine_dummy_sentences().sentences[1],
                   nine_dummy_sentences().sentences[2]};
    return d;
  }();
  ExtractionConfig two_only = kNoGate;
  two_only.budget_words = 4;
  const Summary s = lsa::model_min_correlation(f, doc, text::Stoplist::builtin(), two_only);

  // all-pairs oracle over the Vt columns
  auto col_cos = [&](std::size_t a, std::size_t b) {
    double dot = 0, na = 0, nb = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      dot += f.vt(i, a) * f.vt(i, b);
      na += f.vt(i, a) * f.vt(i, a);
      nb += f.vt(i, b) * f.vt(i, b);
    }
    return dot / std::sqrt(na * nb);
  };
  double best = 2.0;
  std::pair<int, int> bestpair{-1, -1};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (col_cos(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) < best) {
        best = col_cos(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        bestpair = {a, b};
      }
  CHECK(s.indices == std::vector<int>{bestpair.first, bestpair.second});
}

TEST_CASE("lsacs entropies match the published concept table") {
  const auto factors =
      lsa::factors_from_vt({3.91, 2.61, 2.00},
                           fixture::vt_from_w(fixture::w_concept_table(), fixture::reference_sigma()));
  const auto entropies = lsa::lsacs_concept_entropies(factors, lsa::LsacsCase::SigmaVt);
  REQUIRE(entropies.size() == 3);
  CHECK(entropies[2] == doctest::Approx(2.17148).epsilon(2e-3 / 2.17148));
  // concept 1 has the most spread-out mass and the highest entropy
  CHECK(entropies[0] > entropies[2]);
  CHECK(entropies[2] > entropies[1]);

  // a concept with a single surviving sentence carries no information
  lsa::SvdFactors lone = lsa::factors_from_vt({1.0}, [] {
    linalg::Matrix vt(1, 3);
    vt(0, 0) = 0.7;
    vt(0, 1) = -0.2;
    vt(0, 2) = -0.4;
    return vt;
  }());
  CHECK(lsa::lsacs_concept_entropies(lone, lsa::LsacsCase::Vt)[0] == doctest::Approx(0.0));
}

TEST_CASE("lsacs emission order matches the published sequence") {
  const auto factors =
      lsa::factors_from_vt({3.91, 2.61, 2.00},
                           fixture::vt_from_w(fixture::w_concept_table(), fixture::reference_sigma()));
  const std::vector<int> expected = {5, 0, 2, 8, 7, 6, 3, 1, 4};  // S6,S1,S3,S9,S8,S7,S4,S2,S5
  CHECK(lsa::lsacs_order(factors, lsa::LsacsCase::SigmaVt) == expected);

  const Summary s = lsa::model_lsacs(factors, lsa::LsacsCase::SigmaVt, nine_dummy_sentences(),
                                     text::Stoplist::builtin(), kNoGate);
  CHECK(s.selection_order == expected);
}

TEST_CASE("lsacs rejects an all-non-positive W") {
  lsa::SvdFactors f = lsa::factors_from_vt({1.0}, [] {
    linalg::Matrix vt(1, 2);
    vt(0, 0) = -0.5;
    vt(0, 1) = -0.5;
    return vt;
  }());
  CHECK_THROWS_AS(lsa::lsacs_order(f, lsa::LsacsCase::Vt), lsa::AllConceptsEmpty);
}

TEST_CASE("lsass entropies and order match the published sentence table") {
  const auto factors =
      lsa::factors_from_vt({3.91, 2.61, 2.00},
                           fixture::vt_from_w(fixture::w_sentence_table(), fixture::reference_sigma()));
  const auto ent = lsa::lsass_entropies(factors);
  REQUIRE(ent.size() == 9);
  CHECK(ent[0] == doctest::Approx(0.0));  // single-concept sentences: S1, S3, S6, S8
  CHECK(ent[2] == doctest::Approx(0.0));
  CHECK(ent[5] == doctest::Approx(0.0));
  CHECK(ent[7] == doctest::Approx(0.0));
  CHECK(ent[8] == doctest::Approx(1.48984).epsilon(1e-3));
  CHECK(ent[6] == doctest::Approx(1.0001).epsilon(1e-3));
  CHECK(ent[1] == doctest::Approx(0.804333).epsilon(2e-3));
  CHECK(ent[3] == doctest::Approx(0.914894).epsilon(2e-3));
  CHECK(ent[4] == doctest::Approx(0.92336).epsilon(2e-3));

  const std::vector<int> expected = {8, 6, 4, 3, 1, 0, 2, 5, 7};  // S9,S7,S5,S4,S2,S1,S3,S6,S8
  CHECK(lsa::lsass_order(factors) == expected);
  const Summary s = lsa::model_lsass(factors, nine_dummy_sentences(), text::Stoplist::builtin(),
                                     kNoGate);
  CHECK(s.selection_order == expected);
}

TEST_CASE("entropy-based selections are scale-invariant") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t r = 2 + rng() % 3, n = 4 + rng() % 5;
    linalg::Matrix vt(r, n);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < n; ++j) vt(i, j) = dist(rng);
    std::vector<double> sigma(r);
    for (std::size_t i = 0; i < r; ++i) sigma[i] = static_cast<double>(r - i);
    const auto f = lsa::factors_from_vt(sigma, vt);

    std::vector<double> sigma_scaled = sigma;
    for (double& s : sigma_scaled) s *= 4.75;
    const auto f2 = lsa::factors_from_vt(sigma_scaled, vt);

    bool all_nonpositive = true;
    for (std::size_t i = 0; i < r && all_nonpositive; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (vt(i, j) > 0) {
          all_nonpositive = false;
          break;
        }
    if (all_nonpositive) continue;

    CHECK(lsa::lsass_order(f) == lsa::lsass_order(f2));
    CHECK(lsa::lsacs_order(f, lsa::LsacsCase::SigmaVt) ==
          lsa::lsacs_order(f2, lsa::LsacsCase::SigmaVt));
  }
}

TEST_CASE("model outputs are permutations without duplicates") {
  const auto f = lsa::svd(nine_title_tf_matrix(), 3);
  for (int k : {1, 3, 5, 9}) {
    for (const auto& picks : {lsa::model_gong_liu(f, k), lsa::model_murray(f, k),
                              lsa::model_topic(f, k)}) {
      CHECK(static_cast<int>(picks.size()) == k);
      std::set<int> uniq(picks.begin(), picks.end());
      CHECK(uniq.size() == picks.size());
      for (int idx : picks) {
        CHECK(idx >= 0);
        CHECK(idx < 9);
      }
    }
  }
  const auto order = lsa::lsass_order(f);
  std::set<int> uniq(order.begin(), order.end());
  CHECK(uniq.size() == 9);
}

TEST_CASE("lsacs probability rows are normalized") {
  const auto factors =
      lsa::factors_from_vt({3.91, 2.61, 2.00},
                           fixture::vt_from_w(fixture::w_sentence_table(), fixture::reference_sigma()));
  // reconstruct the probabilities the entropies are built from
  linalg::Matrix w = fixture::w_sentence_table();
  for (std::size_t i = 0; i < 3; ++i) {
    double sum = 0;
    for (std::size_t j = 0; j < 9; ++j) sum += std::max(0.0, w(i, j));
    if (sum == 0) continue;
    double total = 0;
    for (std::size_t j = 0; j < 9; ++j) total += std::max(0.0, w(i, j)) / sum;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
  }
  (void)factors;
}
