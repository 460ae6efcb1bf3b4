#include "phmon/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace phmon {

namespace {

void validate_relation(const Relation& r, std::size_t alphabet_size) {
  if (r.lhs.length() != r.rhs.length())
    throw std::invalid_argument("inhomogeneous relation: sides have lengths " +
                                std::to_string(r.lhs.length()) + " and " +
                                std::to_string(r.rhs.length()));
  if (r.lhs.length() == 0) throw std::invalid_argument("empty relation");
  if (r.lhs == r.rhs) throw std::invalid_argument("relation with identical sides");
  if (std::max(r.lhs.max_letter(), r.rhs.max_letter()) >= alphabet_size)
    throw std::invalid_argument("relation mentions an undeclared letter");
}

}  // namespace

Presentation::Presentation(std::vector<std::string> alphabet_names, std::vector<Relation> relations,
                           std::string name)
    : names_(std::move(alphabet_names)), relations_(std::move(relations)), name_(std::move(name)) {
  if (names_.empty()) throw std::invalid_argument("empty alphabet");
  if (names_.size() > 255) throw std::invalid_argument("alphabet too large");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty letter name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate letter name: " + n);
  }
  for (const auto& r : relations_) validate_relation(r, names_.size());
  rep_.resize(names_.size());
  for (std::size_t i = 0; i < rep_.size(); ++i) rep_[i] = static_cast<Letter>(i);
}

std::vector<Letter> Presentation::representative_letters() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < rep_.size(); ++i)
    if (rep_[i] == i) out.push_back(static_cast<Letter>(i));
  return out;
}

std::size_t Presentation::class_count() const { return representative_letters().size(); }

Word Presentation::to_representatives(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter a : w.letters()) {
    if (a >= rep_.size()) throw std::invalid_argument("letter index out of range");
    out.push_back(rep_[a]);
  }
  return Word(std::move(out));
}

Word Presentation::word_from_string(std::string_view text) const {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // longest declared name matching at pos
    std::size_t best = 0;
    Letter best_letter = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& n = names_[i];
      if (n.size() > best && text.substr(pos, n.size()) == n) {
        best = n.size();
        best_letter = static_cast<Letter>(i);
      }
    }
    if (best == 0)
      throw std::invalid_argument("unknown letter at position " + std::to_string(pos) + " in \"" +
                                  std::string(text) + "\"");
    out.push_back(best_letter);
    pos += best;
  }
  return Word(std::move(out));
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (Letter a : w.letters()) {
    if (a >= names_.size()) throw std::invalid_argument("letter index out of range");
    out += names_[a];
  }
  return out;
}

std::string Presentation::class_name(Letter rep) const {
  std::string out;
  for (std::size_t i = 0; i < rep_.size(); ++i) {
    if (rep_[i] == rep) {
      if (!out.empty()) out += '=';
      out += names_[i];
    }
  }
  return out;
}

std::uint64_t Presentation::fingerprint() const {
  // FNV-1a over the normalized structural content.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(names_.size());
  for (Letter r : rep_) mix(r);
  for (const auto& rel : relations_) {
    mix(0xD5ull);  // relation separator
    for (Letter a : rel.lhs.letters()) mix(a + 1);
    mix(0);
    for (Letter a : rel.rhs.letters()) mix(a + 1);
  }
  return h;
}

Presentation parse_presentation(std::string_view text, std::string name) {
  std::vector<std::string> alphabet;
  std::vector<Relation> relations;
  bool have_letters = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  Presentation partial;  // used for tokenizing relation words once letters are known
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.rfind("letters:", 0) == 0) {
      if (have_letters) throw ParseError("duplicate letters: line", lineno, 1);
      std::istringstream ls(line.substr(8));
      std::string tok;
      while (ls >> tok) alphabet.push_back(tok);
      if (alphabet.empty()) throw ParseError("no letters declared", lineno, 1);
      try {
        partial = Presentation(alphabet, {});
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 1);
      }
      have_letters = true;
    } else if (line.rfind("rel:", 0) == 0) {
      if (!have_letters) throw ParseError("rel: before letters:", lineno, 1);
      const std::string body = line.substr(4);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError("rel: line without '='", lineno, 1);
      const std::string lhs_s = trim(body.substr(0, eq));
      const std::string rhs_s = trim(body.substr(eq + 1));
      if (lhs_s.empty() || rhs_s.empty()) throw ParseError("empty relation side", lineno, 1);
      Relation r;
      try {
        r.lhs = partial.word_from_string(lhs_s);
        r.rhs = partial.word_from_string(rhs_s);
        validate_relation(r, alphabet.size());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, static_cast<int>(eq));
      }
      relations.push_back(std::move(r));
    } else {
      throw ParseError("unrecognized line: " + line, lineno, 1);
    }
  }
  if (!have_letters) throw ParseError("missing letters: line", lineno, 1);
  return Presentation(std::move(alphabet), std::move(relations), std::move(name));
}

Presentation make_presentation(std::vector<std::string> alphabet,
                               const std::vector<std::pair<std::string, std::string>>& relations,
                               std::string name) {
  Presentation base(alphabet, {}, name);
  std::vector<Relation> rels;
  rels.reserve(relations.size());
  for (const auto& [l, r] : relations)
    rels.push_back(Relation{base.word_from_string(l), base.word_from_string(r)});
  return Presentation(std::move(alphabet), std::move(rels), std::move(name));
}

Presentation normalize(const Presentation& p) {
  const std::size_t k = p.alphabet_size();

  // Union-find over letters, seeded by the existing identification map and
  // all length-1 relations. Smallest index wins as representative.
  std::vector<Letter> parent(k);
  for (std::size_t i = 0; i < k; ++i) parent[i] = static_cast<Letter>(i);
  auto find = [&parent](Letter a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  auto unite = [&](Letter a, Letter b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  };

  for (std::size_t i = 0; i < k; ++i) unite(static_cast<Letter>(i), p.representative(static_cast<Letter>(i)));
  for (const auto& r : p.relations())
    if (r.lhs.length() == 1) unite(r.lhs[0], r.rhs[0]);

  std::vector<Letter> rep(k);
  for (std::size_t i = 0; i < k; ++i) rep[i] = find(static_cast<Letter>(i));

  auto map_word = [&rep](const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (Letter a : w.letters()) out.push_back(rep[a]);
    return Word(std::move(out));
  };

  // Rewrite, drop trivial, dedup (a relation is an unordered pair of sides).
  std::vector<Relation> rels;
  std::set<std::pair<Word, Word>> seen;
  for (const auto& r : p.relations()) {
    if (r.lhs.length() == 1) continue;
    Word l = map_word(r.lhs);
    Word rr = map_word(r.rhs);
    if (l == rr) continue;
    auto key = l < rr ? std::make_pair(l, rr) : std::make_pair(rr, l);
    if (!seen.insert(key).second) continue;
    rels.push_back(Relation{std::move(l), std::move(rr)});
  }

  Presentation out(p.alphabet_names(), std::move(rels), p.name());
  out.rep_ = std::move(rep);
  out.normalized_ = true;
  return out;
}

}  // namespace phmon
