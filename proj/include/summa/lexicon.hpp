#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace summa::lex {

enum class Pos : std::uint8_t { Noun = 0, Verb = 1, Adj = 2, Adv = 3 };

// Relation kinds consumed downstream; synonymy is shared synset membership
// and has no pointer of its own.
enum class Relation : std::uint8_t { Hypernym, Hyponym, Meronym, Holonym, Antonym };

struct SynsetId {
  Pos pos = Pos::Noun;
  std::uint32_t offset = 0;
  auto operator<=>(const SynsetId&) const = default;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;        // lowercased, file order
  std::vector<std::string> gloss_tokens;  // tokenized, lowercased
  std::map<Relation, std::vector<SynsetId>> relations;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
struct MissingFile : std::runtime_error {
  explicit MissingFile(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownSynsetId : std::runtime_error {
  explicit UnknownSynsetId(const std::string& what) : std::runtime_error(what) {}
};

// WordNet 3.x plain-text database: index.{noun,verb,adj,adv} and
// data.{...}. Immutable after load; safe for shared reads.
class LexDatabase {
 public:
  static LexDatabase load(const std::filesystem::path& dir);

  // Exact lemma lookup, sense (file) order.
  std::vector<const Synset*> senses(const std::string& lemma, Pos pos) const;
  // Lookup with simple suffix stripping (s, es, ed, ing) as fallback.
  std::vector<const Synset*> senses_morphy(const std::string& lemma, Pos pos) const;
  bool known(const std::string& lemma, Pos pos) const;

  const Synset& get(SynsetId id) const;  // throws UnknownSynsetId
  const std::vector<std::string>& gloss(SynsetId id) const { return get(id).gloss_tokens; }
  std::vector<const Synset*> related(const Synset& s, Relation kind) const;

  std::size_t synset_count() const { return synsets_.size(); }

 private:
  std::map<SynsetId, Synset> synsets_;
  std::array<std::unordered_map<std::string, std::vector<SynsetId>>, 4> lemma_index_;

  void parse_data_file(const std::filesystem::path& file);
  void parse_index_file(const std::filesystem::path& file, Pos pos);
  void validate_closure() const;
};

class SentimentLexicon {
 public:
  // Two-column TSV: word<TAB>score in [-1,1]. Duplicate words: last wins,
  // warning on stderr. Throws ParseError with the line number.
  static SentimentLexicon load(const std::filesystem::path& file);

  double polarity(const std::string& word) const;  // 0.0 for unknown words
  std::size_t size() const { return scores_.size(); }

 private:
  std::unordered_map<std::string, double> scores_;
};

}  // namespace summa::lex
