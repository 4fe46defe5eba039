#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "summa/linalg.hpp"

namespace summa::lex {
class LexDatabase;
}

namespace summa {

// An extracted summary: selected sentence indices in original document
// order, plus the admission order the selector actually used.
struct Summary {
  std::vector<int> indices;          // ascending original indices
  std::vector<int> selection_order;  // order sentences were admitted
  int words = 0;
};

struct ExtractionConfig {
  double theta = 0.1;      // cosine redundancy threshold in [0,1]
  int budget_words = 100;  // max summary length in words (stopwords included)
};

namespace text {

enum class Pos { Noun, Verb, Other };

struct Sentence {
  int index = 0;
  std::string raw;
  std::vector<std::string> tokens;  // lowercased, stopwords still present
  std::vector<std::pair<std::string, Pos>> tagged;
  std::vector<std::string> content_terms;  // nouns + verbs
  int word_len = 0;                        // |tokens|
};

struct Document {
  std::string id;
  std::string raw;
  std::vector<Sentence> sentences;
};

struct MissingStoplist : std::runtime_error {
  explicit MissingStoplist(const std::string& what) : std::runtime_error(what) {}
};

class Stoplist {
 public:
  static Stoplist builtin();  // fixed, versioned list (see stoplist_version)
  static Stoplist load(const std::filesystem::path& file);  // one word per line
  bool contains(const std::string& lowercased) const { return words_.count(lowercased) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

inline constexpr const char* stoplist_version = "builtin-1";

// Lowercase, split on non-alphanumeric, drop empties. Digits survive as
// their own tokens: "U.S. 5,700" -> [u, s, 5, 700].
std::vector<std::string> tokenize(const std::string& s);

// Sentence split on . ! ? with abbreviation protection (Mr., Dr., U.S.,
// single initials, months, ...), "U. S." -> "U.S." collapsing, and
// stray-space-before-period removal. A text ending in a terminator yields a
// final empty segment only when retain_trailing_empty is set (the DUC
// split-on-delimiter convention: n delimiters -> n+1 parts).
std::vector<std::string> segment_text(const std::string& raw, bool retain_trailing_empty = false);

// segment_text + tokenization; POS fields left empty (see tag_tokens).
std::vector<Sentence> segment_sentences(const std::string& raw,
                                        bool retain_trailing_empty = false);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist);

// Noun/verb/other via lexical-database membership. A token listed under
// several parts of speech takes noun before verb; unknown tokens are Other
// unless they appeared capitalized in the raw sentence (then Noun). Works
// without a database too (capitalization heuristic only).
std::vector<std::pair<std::string, Pos>> tag_tokens(const std::vector<std::string>& tokens,
                                                    const std::string& raw,
                                                    const lex::LexDatabase* db);

// Full ingestion pipeline. Tagging uses db when given.
Document make_document(std::string id, std::string raw, const lex::LexDatabase* db,
                       const Stoplist& stoplist, bool retain_trailing_empty = false);

// Sparse non-negative term weights; zero entries are never stored.
class TermVector {
 public:
  void add(const std::string& term, double w);
  double at(const std::string& term) const;
  double norm() const;
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, double>& entries() const { return entries_; }

  static TermVector counts(const std::vector<std::string>& tokens);
  static TermVector binary(const std::vector<std::string>& tokens);

 private:
  std::map<std::string, double> entries_;
};

// Standard cosine; 0.0 when either vector has zero norm.
double cosine_similarity(const TermVector& a, const TermVector& b);

// Each listed column divided by its Euclidean
// norm; all-zero columns left alone.
void column_normalize(linalg::Matrix& m, const std::vector<std::size_t>& columns);
void column_normalize(linalg::Matrix& m);  // every column

// Content between <TEXT> and </TEXT> markers (all blocks concatenated);
// returns the whole input when no markers are present.
std::string extract_duc_text(const std::string& sgml);

// Admission helper shared by every ranked selector: walk `order`, admit a
// sentence when the budget still fits and its cosine against each already
// selected sentence (tf counts over stopword-removed tokens) stays < theta.
// Empty sentences are skipped. Output indices are re-sorted by position.
Summary select_by_order(const std::vector<int>& order, const Document& doc,
                        const Stoplist& stoplist, const ExtractionConfig& cfg);

std::string summary_text(const Document& doc, const Summary& summary);

}  // namespace text
}  // namespace summa
