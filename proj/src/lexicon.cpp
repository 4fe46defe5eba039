#include "summa/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "summa/text.hpp"

namespace summa::lex {

namespace {

const char* pos_name(Pos p) {
  switch (p) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adj: return "adj";
    case Pos::Adv: return "adv";
  }
  return "?";
}

Pos pos_from_ss_type(char c, const std::string& context) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a':
    case 's': return Pos::Adj;  // satellite adjectives index under adj
    case 'r': return Pos::Adv;
  }
  throw ParseError("unknown synset type '" + std::string(1, c) + "' in " + context);
}

std::string lc(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// @/@i hypernym, ~/~i hyponym, % meronym family, # holonym family, ! antonym;
// every other pointer symbol is outside the fixed relation inventory.
bool map_pointer(const std::string& sym, Relation* out) {
  if (sym.empty()) return false;
  switch (sym[0]) {
    case '@': *out = Relation::Hypernym; return true;
    case '~': *out = Relation::Hyponym; return true;
    case '%': *out = Relation::Meronym; return true;
    case '#': *out = Relation::Holonym; return true;
    case '!': *out = Relation::Antonym; return true;
    default: return false;
  }
}

}  // namespace

void LexDatabase::parse_data_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingFile("missing WordNet data file: " + file.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.rfind("  ", 0) == 0) continue;  // license header
    const std::string where = file.filename().string() + ":" + std::to_string(lineno);
    std::istringstream ss(line);
    std::string offset_s, lexfile_s, sstype_s;
    if (!(ss >> offset_s >> lexfile_s >> sstype_s) || sstype_s.size() != 1)
      throw ParseError("malformed data line at " + where);

    Synset syn;
    syn.id.pos = pos_from_ss_type(sstype_s[0], where);
    syn.id.offset = static_cast<std::uint32_t>(std::stoul(offset_s));

    std::string wcnt_s;
    if (!(ss >> wcnt_s)) throw ParseError("missing word count at " + where);
    const long wcnt = std::strtol(wcnt_s.c_str(), nullptr, 16);
    if (wcnt <= 0) throw ParseError("bad word count at " + where);
    for (long i = 0; i < wcnt; ++i) {
      std::string word, lexid;
      if (!(ss >> word >> lexid)) throw ParseError("truncated word list at " + where);
      // strip the (mark) suffix adjectives carry, e.g. word(p)
      if (const auto paren = word.find('('); paren != std::string::npos) word.resize(paren);
      syn.lemmas.push_back(lc(word));
    }

    int pcnt = 0;
    if (!(ss >> pcnt)) throw ParseError("missing pointer count at " + where);
    for (int i = 0; i < pcnt; ++i) {
      std::string sym, target_s, target_pos_s, srctgt;
      if (!(ss >> sym >> target_s >> target_pos_s >> srctgt) || target_pos_s.size() != 1)
        throw ParseError("truncated pointer at " + where);
      Relation rel;
      if (!map_pointer(sym, &rel)) continue;
      SynsetId target;
      target.pos = pos_from_ss_type(target_pos_s[0], where);
      target.offset = static_cast<std::uint32_t>(std::stoul(target_s));
      syn.relations[rel].push_back(target);
    }

    const auto bar = line.find('|');
    if (bar != std::string::npos) syn.gloss_tokens = text::tokenize(line.substr(bar + 1));

    synsets_[syn.id] = std::move(syn);
  }
}

void LexDatabase::parse_index_file(const std::filesystem::path& file, Pos pos) {
  std::ifstream in(file);
  if (!in) throw MissingFile("missing WordNet index file: " + file.string());
  std::string line;
  std::size_t lineno = 0;
  auto& index = lemma_index_[static_cast<std::size_t>(pos)];
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.rfind("  ", 0) == 0) continue;
    const std::string where = file.filename().string() + ":" + std::to_string(lineno);
    std::istringstream ss(line);
    std::string lemma, pos_s;
    int synset_cnt = 0, p_cnt = 0;
    if (!(ss >> lemma >> pos_s >> synset_cnt >> p_cnt) || synset_cnt <= 0)
      throw ParseError("malformed index line at " + where);
    for (int i = 0; i < p_cnt; ++i) {
      std::string sym;
      if (!(ss >> sym)) throw ParseError("truncated pointer symbols at " + where);
    }
    int sense_cnt = 0, tagsense_cnt = 0;
    if (!(ss >> sense_cnt >> tagsense_cnt)) throw ParseError("missing sense counts at " + where);
    std::vector<SynsetId>& ids = index[lc(lemma)];
    for (int i = 0; i < synset_cnt; ++i) {
      std::string off_s;
      if (!(ss >> off_s)) throw ParseError("truncated offset list at " + where);
      ids.push_back(SynsetId{pos, static_cast<std::uint32_t>(std::stoul(off_s))});
    }
  }
}

void LexDatabase::validate_closure() const {
  for (const auto& [id, syn] : synsets_) {
    for (const auto& [rel, targets] : syn.relations) {
      for (const SynsetId& t : targets) {
        if (!synsets_.count(t))
          throw ParseError("dangling pointer from " + std::string(pos_name(id.pos)) + " synset " +
                           std::to_string(id.offset) + " to " + std::string(pos_name(t.pos)) +
                           " offset " + std::to_string(t.offset));
      }
    }
  }
  for (const auto& index : lemma_index_) {
    for (const auto& [lemma, ids] : index) {
      for (const SynsetId& t : ids) {
        if (!synsets_.count(t))
          throw ParseError("index entry '" + lemma + "' points at missing synset " +
                           std::to_string(t.offset));
      }
    }
  }
}

LexDatabase LexDatabase::load(const std::filesystem::path& dir) {
  LexDatabase db;
  static constexpr std::pair<Pos, const char*> kParts[] = {
      {Pos::Noun, "noun"}, {Pos::Verb, "verb"}, {Pos::Adj, "adj"}, {Pos::Adv, "adv"}};
  for (const auto& [pos, name] : kParts) {
    db.parse_data_file(dir / (std::string("data.") + name));
    db.parse_index_file(dir / (std::string("index.") + name), pos);
  }
  db.validate_closure();
  return db;
}

std::vector<const Synset*> LexDatabase::senses(const std::string& lemma, Pos pos) const {
  std::vector<const Synset*> out;
  const auto& index = lemma_index_[static_cast<std::size_t>(pos)];
  const auto it = index.find(lc(lemma));
  if (it == index.end()) return out;
  out.reserve(it->second.size());
  for (const SynsetId& id : it->second) out.push_back(&get(id));
  return out;
}

std::vector<const Synset*> LexDatabase::senses_morphy(const std::string& lemma, Pos pos) const {
  std::vector<const Synset*> direct = senses(lemma, pos);
  if (!direct.empty()) return direct;
  const std::string word = lc(lemma);
  static constexpr const char* kSuffixes[] = {"s", "es", "ed", "ing"};
  for (const char* suf : kSuffixes) {
    const std::size_t len = std::string(suf).size();
    if (word.size() > len + 1 && word.ends_with(suf)) {
      std::vector<const Synset*> hit = senses(word.substr(0, word.size() - len), pos);
      if (!hit.empty()) return hit;
    }
  }
  // -ing/-ed with restored final e: studying won't need it, "caring" does
  if (word.size() > 4 && (word.ends_with("ing") || word.ends_with("ed"))) {
    const std::size_t cut = word.ends_with("ing") ? 3 : 2;
    std::vector<const Synset*> hit = senses(word.substr(0, word.size() - cut) + "e", pos);
    if (!hit.empty()) return hit;
  }
  return {};
}

bool LexDatabase::known(const std::string& lemma, Pos pos) const {
  return !senses_morphy(lemma, pos).empty();
}

const Synset& LexDatabase::get(SynsetId id) const {
  const auto it = synsets_.find(id);
  if (it == synsets_.end())
    throw UnknownSynsetId("unknown synset: " + std::string(pos_name(id.pos)) + " " +
                          std::to_string(id.offset));
  return it->second;
}

std::vector<const Synset*> LexDatabase::related(const Synset& s, Relation kind) const {
  std::vector<const Synset*> out;
  const auto it = s.relations.find(kind);
  if (it == s.relations.end()) return out;
  out.reserve(it->second.size());
  for (const SynsetId& id : it->second) out.push_back(&get(id));
  return out;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingFile("sentiment lexicon not readable: " + file.string());
  SentimentLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw ParseError("sentiment lexicon line " + std::to_string(lineno) + ": expected word<TAB>score");
    const std::string word = lc(line.substr(0, tab));
    double score = 0;
    try {
      std::size_t used = 0;
      score = std::stod(line.substr(tab + 1), &used);
    } catch (const std::exception&) {
      throw ParseError("sentiment lexicon line " + std::to_string(lineno) + ": bad score");
    }
    if (!std::isfinite(score))
      throw ParseError("sentiment lexicon line " + std::to_string(lineno) + ": non-finite score");
    if (lex.scores_.count(word) > 0)
      std::cerr << "warning: duplicate sentiment entry '" << word << "' at line " << lineno
                << ", last wins\n";
    lex.scores_[word] = score;
  }
  return lex;
}

double SentimentLexicon::polarity(const std::string& word) const {
  const auto it = scores_.find(lc(word));
  return it == scores_.end() ? 0.0 : it->second;
}

}  // namespace summa::lex
