#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phmon/word.hpp"

namespace phmon {

// A defining relation lhs = rhs between two positive words of equal length.
struct Relation {
  Word lhs;
  Word rhs;

  friend bool operator==(const Relation&, const Relation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An alphabet with homogeneous relations plus the letter-identification map
// induced by length-1 relations. Immutable once built; normalize() returns a
// copy with identifications absorbed and relations rewritten over
// representative letters.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> alphabet_names, std::vector<Relation> relations,
               std::string name = "");

  const std::string& name() const { return name_; }
  std::size_t alphabet_size() const { return names_.size(); }
  const std::vector<std::string>& alphabet_names() const { return names_; }
  const std::vector<Relation>& relations() const { return relations_; }
  bool normalized() const { return normalized_; }

  // Identification map from length-1 relations; identity before normalize().
  Letter representative(Letter a) const { return rep_[a]; }
  bool is_representative(Letter a) const { return rep_[a] == a; }
  std::vector<Letter> representative_letters() const;
  std::size_t class_count() const;

  Word to_representatives(const Word& w) const;

  // Word I/O over this alphabet. Tokenization is greedy longest-match, so
  // single-character names need no separators.
  Word word_from_string(std::string_view text) const;
  std::string word_to_string(const Word& w) const;
  // Name of the letter class of a representative, e.g. "b=c" for merged
  // letters. Members are listed in index order.
  std::string class_name(Letter rep) const;

  // Stable hash of the normalized content; used as cache key component.
  std::uint64_t fingerprint() const;

  friend Presentation normalize(const Presentation& p);

 private:
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
  std::vector<Letter> rep_;
  std::string name_;
  bool normalized_ = false;
};

// Parses the presentation file format:
//   letters: <name> <name> ...
//   rel: <word> = <word>
// '#' starts a comment. Throws ParseError on malformed input, unknown
// letters, inhomogeneous relations, or a relation with identical sides.
Presentation parse_presentation(std::string_view text, std::string name = "");

// Convenience constructor from letter-name strings, mostly for tests and the
// built-in catalog.
Presentation make_presentation(std::vector<std::string> alphabet,
                               const std::vector<std::pair<std::string, std::string>>& relations,
                               std::string name = "");

// Absorbs all length-1 relations into the identification map (union-find
// closure, smallest index as representative), rewrites every remaining
// relation over representative letters, and drops trivial or duplicate
// relations. Idempotent.
Presentation normalize(const Presentation& p);

}  // namespace phmon
