#include "summa/lexnet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <sstream>
#include <unordered_set>

namespace summa::lexnet {

namespace {

std::vector<const lex::Synset*> candidate_senses(const std::string& word, lex::Pos pos,
                                                 const lex::LexDatabase& db) {
  std::vector<const lex::Synset*> senses = db.senses_morphy(word, pos);
  if (senses.empty())
    throw NoSenses("no senses for '" + word + "'");
  return senses;
}

int overlap_count(const std::vector<std::string>& gloss, const std::set<std::string>& context,
                  const text::Stoplist& stoplist) {
  int count = 0;
  for (const std::string& g : gloss) {
    if (stoplist.contains(g)) continue;
    if (context.count(g)) ++count;
  }
  return count;
}

std::set<std::string> context_set(const std::vector<std::string>& tokens) {
  return {tokens.begin(), tokens.end()};
}

}  // namespace

const lex::Synset& wsd_simple_lesk(const std::string& word,
                                   const std::vector<std::string>& context_tokens, lex::Pos pos,
                                   const lex::LexDatabase& db, const text::Stoplist& stoplist) {
  const auto senses = candidate_senses(word, pos, db);
  const std::set<std::string> context = context_set(context_tokens);
  const lex::Synset* best = senses.front();
  int best_overlap = -1;
  for (const lex::Synset* s : senses) {
    const int ov = overlap_count(s->gloss_tokens, context, stoplist);
    if (ov > best_overlap) {
      best_overlap = ov;
      best = s;
    }
  }
  return *best;
}

const lex::Synset& wsd_adapted_lesk(const std::string& word,
                                    const std::vector<std::string>& context_tokens, lex::Pos pos,
                                    const lex::LexDatabase& db, const text::Stoplist& stoplist) {
  const auto senses = candidate_senses(word, pos, db);
  const std::set<std::string> context = context_set(context_tokens);
  static constexpr lex::Relation kExpand[] = {lex::Relation::Hypernym, lex::Relation::Hyponym,
                                              lex::Relation::Meronym, lex::Relation::Holonym,
                                              lex::Relation::Antonym};
  const lex::Synset* best = senses.front();
  int best_overlap = -1;
  for (const lex::Synset* s : senses) {
    int ov = overlap_count(s->gloss_tokens, context, stoplist);
    for (lex::Relation rel : kExpand)
      for (const lex::Synset* nb : db.related(*s, rel))
        ov += overlap_count(nb->gloss_tokens, context, stoplist);
    if (ov > best_overlap) {
      best_overlap = ov;
      best = s;
    }
  }
  return *best;
}

const lex::Synset& wsd_cosine_lesk(const std::string& word,
                                   const std::vector<std::string>& context_tokens, lex::Pos pos,
                                   const lex::LexDatabase& db, const text::Stoplist& /*unused*/) {
  const auto senses = candidate_senses(word, pos, db);
  const text::TermVector context_vec = text::TermVector::binary(context_tokens);
  const lex::Synset* best = senses.front();
  double best_sim = -1;
  for (const lex::Synset* s : senses) {
    const text::TermVector gloss_vec = text::TermVector::binary(s->gloss_tokens);
    const double sim = text::cosine_similarity(context_vec, gloss_vec);
    if (sim > best_sim) {
      best_sim = sim;
      best = s;
    }
  }
  return *best;
}

const lex::Synset& disambiguate(WsdVariant variant, const std::string& word,
                                const std::vector<std::string>& context_tokens, lex::Pos pos,
                                const lex::LexDatabase& db, const text::Stoplist& stoplist) {
  switch (variant) {
    case WsdVariant::Simple: return wsd_simple_lesk(word, context_tokens, pos, db, stoplist);
    case WsdVariant::Adapted: return wsd_adapted_lesk(word, context_tokens, pos, db, stoplist);
    case WsdVariant::Cosine: return wsd_cosine_lesk(word, context_tokens, pos, db, stoplist);
  }
  throw std::invalid_argument("disambiguate: unknown variant");
}

namespace {

struct TermInfo {
  std::string token;
  lex::Pos pos;
  const lex::Synset* sense = nullptr;  // null when the lexicon has no entry
};

// lemma set of the synsets related to `sense` by `rel`
std::unordered_set<std::string> related_lemmas(const lex::LexDatabase& db, const lex::Synset& sense,
                                               lex::Relation rel) {
  std::unordered_set<std::string> out;
  for (const lex::Synset* s : db.related(sense, rel))
    out.insert(s->lemmas.begin(), s->lemmas.end());
  return out;
}

}  // namespace

LexNetwork build_lexnetwork(const text::Document& doc, WsdVariant variant,
                            const lex::LexDatabase& db, const text::Stoplist& stoplist) {
  const int n = static_cast<int>(doc.sentences.size());
  LexNetwork net;
  net.graph = centrality::Graph(n);

  // disambiguate each sentence's distinct content terms against the full sentence
  std::vector<std::vector<TermInfo>> sense_of(static_cast<std::size_t>(n));
  std::vector<std::set<std::string>> surface(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const text::Sentence& s = doc.sentences[static_cast<std::size_t>(i)];
    surface[static_cast<std::size_t>(i)] = {s.content_terms.begin(), s.content_terms.end()};
    std::set<std::string> seen;
    for (const auto& [token, pos] : s.tagged) {
      if (pos == text::Pos::Other) continue;
      if (stoplist.contains(token)) continue;
      if (!seen.insert(token).second) continue;
      TermInfo info;
      info.token = token;
      info.pos = pos == text::Pos::Noun ? lex::Pos::Noun : lex::Pos::Verb;
      if (db.known(token, info.pos))
        info.sense = &disambiguate(variant, token, s.tokens, info.pos, db, stoplist);
      sense_of[static_cast<std::size_t>(i)].push_back(std::move(info));
    }
  }

  // Every sentence scans every other; a (term, relation, target) triple
  // counts once per unordered pair. Symmetric kinds (same-word, synonym,
  // antonym) are normalized so the reverse scan cannot re-count them;
  // directional kinds count per direction (A's hypernym link and B's
  // hyponym link back are both relations found).
  std::map<std::pair<int, int>, std::set<std::tuple<int, std::string, std::string>>> seen;
  auto count_relation = [&](int i, int j, RelationKind kind, std::string term,
                            std::string target) {
    const auto pair_key = std::make_pair(std::min(i, j), std::max(i, j));
    const bool symmetric_kind = kind == RelationKind::SameWord ||
                                kind == RelationKind::Synonym || kind == RelationKind::Antonym;
    if (symmetric_kind && target < term) std::swap(term, target);
    if (!seen[pair_key]
             .emplace(static_cast<int>(kind), std::move(term), std::move(target))
             .second)
      return;
    net.provenance[pair_key][kind] += 1;
    net.graph.adj(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += 1.0;
    net.graph.adj(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) += 1.0;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const TermInfo& t : sense_of[static_cast<std::size_t>(i)]) {
        const auto& other = surface[static_cast<std::size_t>(j)];
        if (other.count(t.token)) count_relation(i, j, RelationKind::SameWord, t.token, t.token);
        if (t.sense == nullptr) continue;

        auto relate = [&](const std::unordered_set<std::string>& lemmas, RelationKind kind) {
          for (const std::string& u : other)
            if (lemmas.count(u)) count_relation(i, j, kind, t.token, u);
        };
        std::unordered_set<std::string> own(t.sense->lemmas.begin(), t.sense->lemmas.end());
        own.erase(t.token);
        relate(own, RelationKind::Synonym);
        relate(related_lemmas(db, *t.sense, lex::Relation::Hypernym), RelationKind::Hypernym);
        relate(related_lemmas(db, *t.sense, lex::Relation::Hyponym), RelationKind::Hyponym);
        if (t.pos == lex::Pos::Noun) {  // meronymy is noun-only
          relate(related_lemmas(db, *t.sense, lex::Relation::Meronym), RelationKind::Meronym);
          relate(related_lemmas(db, *t.sense, lex::Relation::Holonym), RelationKind::Holonym);
        }
        relate(related_lemmas(db, *t.sense, lex::Relation::Antonym), RelationKind::Antonym);
      }
    }
  }
  return net;
}

std::string to_csv(const LexNetwork& net) {
  std::ostringstream out;
  const int n = net.graph.n;
  out << "sent";
  for (int j = 0; j < n; ++j) out << "," << (j + 1);
  out << "\n";
  for (int i = 0; i < n; ++i) {
    out << (i + 1);
    for (int j = 0; j < n; ++j) out << "," << static_cast<long>(net.graph.weight(i, j));
    out << "\n";
  }
  return out.str();
}

Summary rank_and_extract(const LexNetwork& net, centrality::Measure measure,
                         const centrality::Params& params, const text::Document& doc,
                         const text::Stoplist& stoplist, const ExtractionConfig& cfg) {
  if (net.graph.n == 0) throw std::invalid_argument("rank_and_extract: empty network");
  if (net.graph.n != static_cast<int>(doc.sentences.size()))
    throw std::invalid_argument("rank_and_extract: network/document size mismatch");
  const std::vector<double> scores = centrality::compute(measure, net.graph, params);
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[static_cast<std::size_t>(a)] > scores[static_cast<std::size_t>(b)]; });
  return text::select_by_order(order, doc, stoplist, cfg);
}

}  // namespace summa::lexnet
