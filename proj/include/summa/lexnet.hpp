#pragma once

#include <map>
#include <string>
#include <vector>

#include "summa/centrality.hpp"
#include "summa/lexicon.hpp"
#include "summa/text.hpp"

namespace summa::lexnet {

enum class WsdVariant { Simple, Adapted, Cosine };

struct NoSenses : std::invalid_argument {
  explicit NoSenses(const std::string& what) : std::invalid_argument(what) {}
};

// Gloss-overlap count against the sentence tokens (stopwords removed from
// the gloss side); ties keep WordNet sense order.
const lex::Synset& wsd_simple_lesk(const std::string& word,
                                   const std::vector<std::string>& context_tokens, lex::Pos pos,
                                   const lex::LexDatabase& db, const text::Stoplist& stoplist);

// Overlap over the candidate gloss plus the glosses of its hypernym /
// hyponym / meronym / holonym / antonym neighbours.
const lex::Synset& wsd_adapted_lesk(const std::string& word,
                                    const std::vector<std::string>& context_tokens, lex::Pos pos,
                                    const lex::LexDatabase& db, const text::Stoplist& stoplist);

// Binary vectors over the local vocabulary (context tokens + candidate
// gloss tokens); argmax cosine, first sense on ties.
const lex::Synset& wsd_cosine_lesk(const std::string& word,
                                   const std::vector<std::string>& context_tokens, lex::Pos pos,
                                   const lex::LexDatabase& db, const text::Stoplist& stoplist);

const lex::Synset& disambiguate(WsdVariant variant, const std::string& word,
                                const std::vector<std::string>& context_tokens, lex::Pos pos,
                                const lex::LexDatabase& db, const text::Stoplist& stoplist);

enum class RelationKind { SameWord, Synonym, Hypernym, Hyponym, Meronym, Holonym, Antonym };

struct LexNetwork {
  centrality::Graph graph;  // symmetric, zero diagonal, integer counts
  // per-edge relation counts, keyed (i, j) with i < j
  std::map<std::pair<int, int>, std::map<RelationKind, int>> provenance;
};

// Sentence graph: one count per (term, relation, target-term) triple found
// between a sentence's disambiguated content senses and another sentence's
// surface terms. Empty sentences become isolated nodes.
LexNetwork build_lexnetwork(const text::Document& doc, WsdVariant variant,
                            const lex::LexDatabase& db, const text::Stoplist& stoplist);

std::string to_csv(const LexNetwork& net);

// Rank by the chosen centrality (FCFS ties), admit under the theta cosine
// gate and word budget, emit in original order.
Summary rank_and_extract(const LexNetwork& net, centrality::Measure measure,
                         const centrality::Params& params, const text::Document& doc,
                         const text::Stoplist& stoplist, const ExtractionConfig& cfg);

}  // namespace summa::lexnet
