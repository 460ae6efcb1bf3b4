#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "phmon/presentation.hpp"
#include "phmon/support.hpp"

namespace phmon {

// The finite set of words equivalent to a seed under length-preserving
// rewriting. Members are stored in canonical (index-lexicographic) order;
// the canonical representative is the minimum. Classes over alphabets of
// size <= 4 with length <= 16 keep members as packed 32-bit codes.
class EquivClass {
 public:
  EquivClass(Word seed, std::size_t length, std::vector<std::uint32_t> codes);
  EquivClass(Word seed, std::size_t length, std::vector<Word> words);

  const Word& seed() const { return seed_; }
  const Word& canonical() const { return canonical_; }
  std::size_t word_length() const { return length_; }
  std::size_t size() const;

  bool is_packed() const { return packed_; }
  const std::vector<std::uint32_t>& codes() const { return codes_; }
  const std::vector<Word>& generic_words() const { return words_; }

  bool contains(const Word& w) const;
  bool contains_code(std::uint32_t code) const;
  Word member(std::size_t i) const;

 private:
  Word seed_;
  Word canonical_;
  std::size_t length_;
  bool packed_;
  std::vector<std::uint32_t> codes_;  // sorted, packed mode
  std::vector<Word> words_;           // sorted, generic mode
};

using EquivClassPtr = std::shared_ptr<const EquivClass>;

// One elementary rewriting step: apply relation `relation` at `position`
// (0-based from the left); forward replaces lhs by rhs.
struct DerivationStep {
  std::size_t position;
  std::size_t relation;
  bool forward;
};

// A replayable chain of elementary equivalences. words.front() is the
// source, words.back() the target, and steps[i] transforms words[i] into
// words[i+1].
struct Derivation {
  std::vector<Word> words;
  std::vector<DerivationStep> steps;
};

// All words of one fixed length over the representative alphabet, grouped
// into equivalence classes. Class ids are assigned in ascending canonical
// order. Codes mentioning non-representative letters are not monoid words
// and map to kInvalidClass. Only available when the level is packable.
class LevelPartition {
 public:
  static constexpr std::uint32_t kInvalidClass = ~0u;

  std::size_t word_length() const { return n_; }
  std::size_t class_count() const { return canonical_.size(); }
  std::size_t universe_size() const { return class_of_.size(); }

  std::uint32_t class_id(const Word& w) const;
  std::uint32_t class_id_code(std::uint32_t code) const;
  std::uint32_t canonical_code(std::uint32_t class_id) const { return canonical_[class_id]; }
  Word canonical_word(std::uint32_t class_id) const;
  std::vector<std::uint32_t> members(std::uint32_t class_id) const;
  std::size_t class_size(std::uint32_t class_id) const;

 private:
  friend class RewriteEngine;
  unsigned k_ = 0;
  unsigned n_ = 0;
  std::vector<std::uint32_t> class_of_;  // indexed by base-k rank of the code
  std::vector<std::uint32_t> canonical_;
  std::vector<std::uint32_t> members_;   // codes grouped by class id
  std::vector<std::uint32_t> offsets_;   // class id -> [offsets_[id], offsets_[id+1])
};

using LevelPartitionPtr = std::shared_ptr<const LevelPartition>;

// Breadth-first closure engine over a normalized presentation. All queries
// are pure; completed classes and level partitions are cached and safe to
// share across threads.
class RewriteEngine {
 public:
  explicit RewriteEngine(const Presentation& p);
  ~RewriteEngine();
  RewriteEngine(const RewriteEngine&) = delete;
  RewriteEngine& operator=(const RewriteEngine&) = delete;

  const Presentation& presentation() const { return pres_; }

  // Words obtained from w by one relation application, either direction, at
  // any position; w itself never appears. Sorted, deduplicated.
  std::vector<Word> neighbors(const Word& w) const;

  struct NeighborDetail {
    Word word;
    DerivationStep step;
  };
  std::vector<NeighborDetail> neighbors_detailed(const Word& w) const;

  Result<EquivClassPtr> equivalence_class(const Word& w, SearchBudget b = {}) const;
  Verdict are_equivalent(const Word& u, const Word& v, SearchBudget b = {}) const;

  // Canonical representative of w's class.
  Result<Word> canonical(const Word& w, SearchBudget b = {}) const;

  // A derivation chain from u to v; nullopt signals proven non-equivalence.
  Result<std::optional<Derivation>> derivation(const Word& u, const Word& v,
                                               SearchBudget b = {}) const;

  // Certificate checker: replays every step through the presentation.
  bool replay(const Derivation& d) const;

  Result<LevelPartitionPtr> level_partition(std::size_t length, SearchBudget b = {}) const;

  std::size_t cached_classes() const;
  void clear_cache() const;

 private:
  struct Impl;
  Presentation pres_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace phmon
