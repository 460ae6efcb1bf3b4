#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace phmon {

// Letters are dense indices into a presentation's alphabet.
using Letter = std::uint8_t;

// A positive word over a fixed alphabet. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;  // last n letters
  Word subword(std::size_t pos, std::size_t n) const;
  Word pow(unsigned k) const;

  // Largest letter index used; 0 for the empty word.
  Letter max_letter() const;

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  // Index-lexicographic order on equal-length words; shorter prefixes first.
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

// Packed word codes: two bits per letter with the first letter in the
// highest-order position, so codes of equal-length words compare exactly
// like the words. Round-trips losslessly for alphabet size <= 4 and
// length <= 16; longer or wider words use Word directly.
inline constexpr std::size_t kMaxPackedLength = 16;
inline constexpr std::size_t kMaxPackedAlphabet = 4;

constexpr bool packable(std::size_t alphabet_size, std::size_t length) {
  return alphabet_size <= kMaxPackedAlphabet && length <= kMaxPackedLength;
}

std::uint32_t pack32(const Word& w);
Word unpack32(std::uint32_t code, std::size_t length);

}  // namespace phmon
