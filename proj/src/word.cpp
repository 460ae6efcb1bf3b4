#include "phmon/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace phmon {

Word Word::prefix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(std::size_t n) const {
  return Word(std::vector<Letter>(letters_.end() - n, letters_.end()));
}

Word Word::subword(std::size_t pos, std::size_t n) const {
  return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + n));
}

Word Word::pow(unsigned k) const {
  Word out;
  out.letters_.reserve(letters_.size() * k);
  for (unsigned i = 0; i < k; ++i) out += *this;
  return out;
}

Letter Word::max_letter() const {
  Letter m = 0;
  for (Letter a : letters_) m = std::max(m, a);
  return m;
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

std::uint32_t pack32(const Word& w) {
  const std::size_t n = w.length();
  if (n > kMaxPackedLength) throw std::invalid_argument("pack32: word longer than 16 letters");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] >= kMaxPackedAlphabet) throw std::invalid_argument("pack32: letter index >= 4");
    code = (code << 2) | w[i];
  }
  return code;
}

Word unpack32(std::uint32_t code, std::size_t length) {
  if (length > kMaxPackedLength) throw std::invalid_argument("unpack32: length > 16");
  std::vector<Letter> letters(length);
  for (std::size_t i = 0; i < length; ++i) {
    letters[length - 1 - i] = static_cast<Letter>(code & 3u);
    code >>= 2;
  }
  return Word(std::move(letters));
}

}  // namespace phmon
