#include "summa/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "summa/lexicon.hpp"

namespace summa::text {

namespace {

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

std::string lowercased(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Abbreviations whose trailing period is not a sentence boundary.
const std::unordered_set<std::string>& protected_abbreviations() {
  static const std::unordered_set<std::string> abbr = {
      "mr",  "mrs", "ms",  "dr",   "prof", "st",   "jr",  "sr",  "rev", "gen",
      "lt",  "col", "sgt", "maj",  "capt", "sen",  "rep", "gov", "pres",
      "u.s", "u.k", "u.n", "inc",  "corp", "co",   "ltd", "dept",
      "jan", "feb", "mar", "apr",  "jun",  "jul",  "aug", "sep", "sept",
      "oct", "nov", "dec", "no",   "vs",   "etc",  "e.g", "i.e", "fig",
      "vol", "approx"};
  return abbr;
}

// "U. S." -> "U.S.", and drop stray blanks before sentence punctuation
// ("Dr . Sullivan" -> "Dr. Sullivan").
std::string preprocess_raw(const std::string& raw) {
  std::string s;
  s.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if ((c == ' ' || c == '\t') && i + 1 < raw.size()) {
      const char nxt = raw[i + 1];
      if (nxt == '.' || nxt == '!' || nxt == '?' || nxt == ',') continue;
    }
    s.push_back(c);
  }
  // single-capital "X. Y." pairs: "U.S." style initialisms lose the inner space
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(s[i]);
    if (std::isupper(static_cast<unsigned char>(s[i])) && i + 1 < s.size() && s[i + 1] == '.' &&
        (i == 0 || !is_word_char(static_cast<unsigned char>(s[i - 1])))) {
      // at "X." followed by " Y.": drop the inner blank
      if (i + 3 < s.size() && s[i + 2] == ' ' && std::isupper(static_cast<unsigned char>(s[i + 3])) &&
          (i + 4 == s.size() || s[i + 4] == '.')) {
        out.push_back('.');
        ++i;          // consumed '.'
        ++i;          // skip the blank
        continue;
      }
    }
  }
  return out;
}

// token immediately before position `dot` (letters/periods run)
std::string word_before(const std::string& s, std::size_t dot) {
  std::size_t end = dot;
  std::size_t begin = end;
  while (begin > 0) {
    const unsigned char c = static_cast<unsigned char>(s[begin - 1]);
    if (is_word_char(c) || c == '.') {
      --begin;
    } else {
      break;
    }
  }
  std::string w = s.substr(begin, end - begin);
  while (!w.empty() && w.front() == '.') w.erase(w.begin());
  return w;
}

bool is_boundary(const std::string& s, std::size_t i) {
  const char c = s[i];
  if (c == '!' || c == '?') return true;
  if (c != '.') return false;
  // decimals and in-number periods
  if (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) return false;
  // inside a multi-period initialism ("U.S.") only the final period counts
  if (i + 2 < s.size() && std::isupper(static_cast<unsigned char>(s[i + 1])) && s[i + 2] == '.')
    return false;
  const std::string prev = word_before(s, i);
  if (prev.empty()) return false;  // "..." runs, stray periods
  const std::string lp = lowercased(prev);
  if (protected_abbreviations().count(lp)) return false;
  // single capital initial: "J. Smith"
  if (prev.size() == 1 && std::isupper(static_cast<unsigned char>(prev[0]))) return false;
  return true;
}

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (unsigned char c : s) {
    if (is_word_char(c)) {
      cur.push_back(static_cast<char>(std::tolower(c)));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> segment_text(const std::string& raw, bool retain_trailing_empty) {
  const std::string s = preprocess_raw(raw);
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!is_boundary(s, i)) continue;
    std::size_t end = i + 1;
    // pull trailing quotes/brackets into the sentence
    while (end < s.size() && (s[end] == '"' || s[end] == '\'' || s[end] == ')' || s[end] == ']'))
      ++end;
    const std::string seg = trimmed(s.substr(start, end - start));
    if (!seg.empty()) out.push_back(seg);
    start = end;
    i = end - 1;
  }
  const std::string tail = trimmed(s.substr(start));
  if (!tail.empty()) {
    out.push_back(tail);
  } else if (retain_trailing_empty && !out.empty()) {
    out.emplace_back();
  }
  return out;
}

std::vector<Sentence> segment_sentences(const std::string& raw, bool retain_trailing_empty) {
  std::vector<Sentence> out;
  int idx = 0;
  for (std::string& seg : segment_text(raw, retain_trailing_empty)) {
    Sentence s;
    s.index = idx++;
    s.raw = std::move(seg);
    s.tokens = tokenize(s.raw);
    s.word_len = static_cast<int>(s.tokens.size());
    out.push_back(std::move(s));
  }
  return out;
}

Stoplist Stoplist::builtin() {
  // builtin-1: common-English function words; pinned because the similarity
  // gates change with the list.
  static const char* kWords[] = {
      "a", "about", "above", "after", "again", "against", "all", "also", "am", "an", "and",
      "any", "are", "aren", "as", "at", "be", "because", "been", "before", "being", "below",
      "between", "both", "but", "by", "can", "cannot", "could", "did", "do", "does", "doing",
      "down", "during", "each", "few", "for", "from", "further", "had", "has", "have",
      "having", "he", "her", "here", "hers", "herself", "him", "himself", "his", "how", "i",
      "if", "in", "into", "is", "it", "its", "itself", "just", "let", "me", "more", "most",
      "my", "myself", "no", "nor", "not", "now", "of", "off", "on", "once", "only", "or",
      "other", "ought", "our", "ours", "ourselves", "out", "over", "own", "same", "she",
      "should", "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
      "themselves", "then", "there", "these", "they", "this", "those", "through", "to",
      "too", "under", "until", "up", "upon", "very", "was", "we", "were", "what", "when",
      "where", "which", "while", "who", "whom", "why", "will", "with", "would", "you",
      "your", "yours", "yourself", "yourselves", "s", "t", "d", "ll", "m", "re", "ve",
      "shall", "may", "might", "must", "yet", "via", "per", "amid", "among", "onto",
      "toward", "towards", "within", "without", "along", "across", "behind", "beside",
      "besides", "beyond", "despite", "except", "inside", "outside", "since", "unless",
      "whereas", "whether", "although", "though", "however", "therefore", "thus", "hence",
      "else", "ever", "never", "always", "often", "sometimes", "rather", "quite", "even"};
  Stoplist sl;
  for (const char* w : kWords) sl.words_.insert(w);
  return sl;
}

Stoplist Stoplist::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingStoplist("stoplist not readable: " + file.string());
  Stoplist sl;
  std::string line;
  while (std::getline(in, line)) {
    const std::string w = trimmed(line);
    if (!w.empty() && w[0] != '#') sl.words_.insert(lowercased(w));
  }
  return sl;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens)
    if (!stoplist.contains(lowercased(t))) out.push_back(t);
  return out;
}

std::vector<std::pair<std::string, Pos>> tag_tokens(const std::vector<std::string>& tokens,
                                                    const std::string& raw,
                                                    const lex::LexDatabase* db) {
  // capitalized-in-raw forms (initial uppercase on the original token)
  std::unordered_set<std::string> capitalized;
  {
    std::string cur;
    bool cap = false;
    auto flush = [&] {
      if (!cur.empty() && cap) capitalized.insert(cur);
      cur.clear();
      cap = false;
    };
    for (unsigned char c : raw) {
      if (is_word_char(c)) {
        if (cur.empty()) cap = std::isupper(c) != 0;
        cur.push_back(static_cast<char>(std::tolower(c)));
      } else {
        flush();
      }
    }
    flush();
  }

  std::vector<std::pair<std::string, Pos>> out;
  out.reserve(tokens.size());
  for (const std::string& tok : tokens) {
    Pos pos = Pos::Other;
    if (db != nullptr && db->known(tok, lex::Pos::Noun)) {
      pos = Pos::Noun;
    } else if (db != nullptr && db->known(tok, lex::Pos::Verb)) {
      pos = Pos::Verb;
    } else if (capitalized.count(tok)) {
      pos = Pos::Noun;
    }
    out.emplace_back(tok, pos);
  }
  return out;
}

Document make_document(std::string id, std::string raw, const lex::LexDatabase* db,
                       const Stoplist& stoplist, bool retain_trailing_empty) {
  Document doc;
  doc.id = std::move(id);
  doc.raw = std::move(raw);
  doc.sentences = segment_sentences(doc.raw, retain_trailing_empty);
  for (Sentence& s : doc.sentences) {
    s.tagged = tag_tokens(s.tokens, s.raw, db);
    for (const auto& [tok, pos] : s.tagged) {
      if (pos == Pos::Other) continue;
      if (stoplist.contains(tok)) continue;
      s.content_terms.push_back(tok);
    }
  }
  return doc;
}

void TermVector::add(const std::string& term, double w) {
  if (w == 0.0) return;
  auto [it, inserted] = entries_.try_emplace(term, w);
  if (!inserted) {
    it->second += w;
    if (it->second == 0.0) entries_.erase(it);
  }
}

double TermVector::at(const std::string& term) const {
  auto it = entries_.find(term);
  return it == entries_.end() ? 0.0 : it->second;
}

double TermVector::norm() const {
  double sum = 0;
  for (const auto& [_, w] : entries_) sum += w * w;
  return std::sqrt(sum);
}

TermVector TermVector::counts(const std::vector<std::string>& tokens) {
  TermVector v;
  for (const std::string& t : tokens) v.add(t, 1.0);
  return v;
}

TermVector TermVector::binary(const std::vector<std::string>& tokens) {
  TermVector v;
  for (const std::string& t : tokens)
    if (v.at(t) == 0.0) v.add(t, 1.0);
  return v;
}

double cosine_similarity(const TermVector& a, const TermVector& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const TermVector& small = a.entries().size() <= b.entries().size() ? a : b;
  const TermVector& large = a.entries().size() <= b.entries().size() ? b : a;
  double dot = 0;
  for (const auto& [term, w] : small.entries()) dot += w * large.at(term);
  return dot / (na * nb);
}

void column_normalize(linalg::Matrix& m, const std::vector<std::size_t>& columns) {
  for (std::size_t c : columns) {
    double sum = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c) * m(r, c);
    const double norm = std::sqrt(sum);
    if (norm == 0.0) continue;
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) /= norm;
  }
}

void column_normalize(linalg::Matrix& m) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols[c] = c;
  column_normalize(m, cols);
}

std::string extract_duc_text(const std::string& sgml) {
  const std::string open = "<TEXT>", close = "</TEXT>";
  std::string out;
  std::size_t pos = 0;
  bool found = false;
  while (true) {
    const std::size_t b = sgml.find(open, pos);
    if (b == std::string::npos) break;
    const std::size_t e = sgml.find(close, b + open.size());
    if (e == std::string::npos) break;
    found = true;
    if (!out.empty()) out.push_back(' ');
    out += sgml.substr(b + open.size(), e - b - open.size());
    pos = e + close.size();
  }
  return found ? out : sgml;
}

Summary select_by_order(const std::vector<int>& order, const Document& doc,
                        const Stoplist& stoplist, const ExtractionConfig& cfg) {
  if (doc.sentences.empty()) throw std::invalid_argument("select_by_order: empty document");
  Summary summary;
  std::vector<TermVector> selected_vecs;
  for (int idx : order) {
    const Sentence& s = doc.sentences.at(static_cast<std::size_t>(idx));
    if (s.tokens.empty()) continue;
    if (summary.words + s.word_len > cfg.budget_words) continue;
    const TermVector v = TermVector::counts(remove_stopwords(s.tokens, stoplist));
    bool diverse = true;
    for (const TermVector& sv : selected_vecs) {
      if (cosine_similarity(v, sv) >= cfg.theta) {
        diverse = false;
        break;
      }
    }
    if (!diverse) continue;
    selected_vecs.push_back(v);
    summary.selection_order.push_back(idx);
    summary.words += s.word_len;
  }
  summary.indices = summary.selection_order;
  std::sort(summary.indices.begin(), summary.indices.end());
  return summary;
}

std::string summary_text(const Document& doc, const Summary& summary) {
  std::string out;
  for (int idx : summary.indices) {
    if (!out.empty()) out.push_back(' ');
    out += doc.sentences.at(static_cast<std::size_t>(idx)).raw;
  }
  return out;
}

}  // namespace summa::text
