#include "phmon/rewrite.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace phmon {

namespace {

std::uint32_t window_mask(unsigned len) {
  return len >= 16 ? ~0u : ((1u << (2 * len)) - 1);
}

// Relation sides compiled to packed codes, bucketed by side length and
// sorted for binary search. A side may occur in several relations.
struct PackedRelations {
  struct Entry {
    std::uint32_t side;
    std::uint32_t repl;
    std::uint16_t relation;
    bool forward;
  };
  std::array<std::vector<Entry>, kMaxPackedLength + 1> by_length;
  std::vector<unsigned> lengths;  // ascending, non-empty buckets only

  explicit PackedRelations(const std::vector<Relation>& rels) {
    for (std::size_t i = 0; i < rels.size(); ++i) {
      const auto& r = rels[i];
      const std::size_t len = r.lhs.length();
      if (len > kMaxPackedLength) continue;  // only reachable from unpackable words
      const std::uint32_t l = pack32(r.lhs), h = pack32(r.rhs);
      by_length[len].push_back({l, h, static_cast<std::uint16_t>(i), true});
      by_length[len].push_back({h, l, static_cast<std::uint16_t>(i), false});
    }
    for (unsigned len = 0; len <= kMaxPackedLength; ++len) {
      auto& v = by_length[len];
      if (v.empty()) continue;
      std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) {
        return a.side != b.side ? a.side < b.side
                                : (a.relation != b.relation ? a.relation < b.relation
                                                            : a.forward > b.forward);
      });
      lengths.push_back(len);
    }
  }
};

// Membership set over packed codes of one fixed word length. Picks the
// cheapest exact strategy for the universe size.
class CodeSet {
 public:
  CodeSet(unsigned k, unsigned n) : k_(k), n_(n) {
    double universe = 1;
    for (unsigned i = 0; i < n; ++i) universe *= k;
    if (2 * n <= 26) {
      mode_ = Mode::Direct;
      bits_.assign((std::size_t{1} << (2 * n)) / 64 + 1, 0);
    } else if (universe <= double(1u << 28)) {
      mode_ = Mode::Radix;
      std::size_t u = 1;
      for (unsigned i = 0; i < n; ++i) u *= k;
      bits_.assign(u / 64 + 1, 0);
      // radix_[j][b] = contribution of byte j of the code to the base-k rank
      std::uint64_t p = 1;
      for (unsigned field = 0; field < n; ++field) {
        const unsigned byte = field / 4, sub = field % 4;
        for (unsigned b = 0; b < 256; ++b)
          radix_[byte][b] += static_cast<std::uint32_t>(((b >> (2 * sub)) & 3u) * p);
        p *= k;
      }
    } else {
      mode_ = Mode::Hash;
      slots_.assign(1u << 16, kEmpty);
    }
  }

  // True when the code was not yet present.
  bool insert(std::uint32_t code) {
    switch (mode_) {
      case Mode::Direct:
        return set_bit(code);
      case Mode::Radix:
        return set_bit(rank(code));
      default:
        return hash_insert(code);
    }
  }

  bool contains(std::uint32_t code) const {
    switch (mode_) {
      case Mode::Direct:
        return get_bit(code);
      case Mode::Radix:
        return get_bit(rank(code));
      default:
        return hash_contains(code);
    }
  }

 private:
  enum class Mode { Direct, Radix, Hash };
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  std::uint64_t rank(std::uint32_t code) const {
    return std::uint64_t{radix_[0][code & 0xFF]} + radix_[1][(code >> 8) & 0xFF] +
           radix_[2][(code >> 16) & 0xFF] + radix_[3][code >> 24];
  }
  bool set_bit(std::uint64_t i) {
    std::uint64_t& w = bits_[i >> 6];
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (w & m) return false;
    w |= m;
    return true;
  }
  bool get_bit(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }

  bool hash_insert(std::uint32_t code) {
    if (code == kEmpty) {
      if (has_sentinel_) return false;
      has_sentinel_ = true;
      return true;
    }
    if ((filled_ + 1) * 10 > slots_.size() * 7) grow();
    std::size_t i = probe(code);
    if (slots_[i] == code) return false;
    slots_[i] = code;
    ++filled_;
    return true;
  }
  bool hash_contains(std::uint32_t code) const {
    if (code == kEmpty) return has_sentinel_;
    return slots_[probe(code)] == code;
  }
  std::size_t probe(std::uint32_t code) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = (code * 0x9E3779B9u) & mask;
    while (slots_[i] != kEmpty && slots_[i] != code) i = (i + 1) & mask;
    return i;
  }
  void grow() {
    std::vector<std::uint32_t> old;
    old.swap(slots_);
    slots_.assign(old.size() * 2, kEmpty);
    for (std::uint32_t c : old)
      if (c != kEmpty) slots_[probe(c)] = c;
  }

  unsigned k_, n_;
  Mode mode_;
  std::vector<std::uint64_t> bits_;
  std::array<std::array<std::uint32_t, 256>, 4> radix_{};
  std::vector<std::uint32_t> slots_;
  std::size_t filled_ = 0;
  bool has_sentinel_ = false;
};

struct ParentRec {
  std::uint32_t parent;
  std::uint16_t position;
  std::uint16_t relation;
  bool forward;
};

struct PackedBfsOutcome {
  bool budget_exceeded = false;
  bool target_found = false;
  std::uint64_t visited = 0;
  std::vector<std::uint32_t> members;  // discovery order; sort for canonical order
};

// Breadth-first closure from `seed` over words of fixed length n. Stops
// early when `target` is reached if one is given. Parent links are recorded
// only when `parents` is non-null.
PackedBfsOutcome packed_bfs(const PackedRelations& rels, unsigned k, unsigned n,
                            std::uint32_t seed, const std::uint32_t* target,
                            std::uint64_t max_nodes,
                            std::unordered_map<std::uint32_t, ParentRec>* parents) {
  PackedBfsOutcome out;
  CodeSet visited(k, n);
  visited.insert(seed);
  out.members.push_back(seed);
  out.visited = 1;
  if (target && seed == *target) {
    out.target_found = true;
    return out;
  }
  for (std::size_t qi = 0; qi < out.members.size(); ++qi) {
    const std::uint32_t w = out.members[qi];
    for (unsigned len : rels.lengths) {
      if (len > n) break;
      const std::uint32_t mask = window_mask(len);
      const auto& bucket = rels.by_length[len];
      for (unsigned pos = 0; pos + len <= n; ++pos) {
        const unsigned shift = 2 * (n - len - pos);
        const std::uint32_t window = (w >> shift) & mask;
        auto it = std::lower_bound(bucket.begin(), bucket.end(), window,
                                   [](const auto& e, std::uint32_t v) { return e.side < v; });
        for (; it != bucket.end() && it->side == window; ++it) {
          const std::uint32_t nb = static_cast<std::uint32_t>(
              (w & ~(std::uint64_t{mask} << shift)) | (std::uint64_t{it->repl} << shift));
          if (!visited.insert(nb)) continue;
          if (out.visited >= max_nodes) {
            out.budget_exceeded = true;
            return out;
          }
          ++out.visited;
          out.members.push_back(nb);
          if (parents)
            parents->emplace(nb, ParentRec{w, static_cast<std::uint16_t>(pos), it->relation,
                                           it->forward});
          if (target && nb == *target) {
            out.target_found = true;
            return out;
          }
        }
      }
    }
  }
  return out;
}

// Fallback closure for unpackable words. Same discipline, plain storage.
struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w.letters()) {
      h ^= a;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct GenericBfsOutcome {
  bool budget_exceeded = false;
  bool target_found = false;
  std::uint64_t visited = 0;
  std::vector<Word> members;
};

GenericBfsOutcome generic_bfs(const std::vector<Relation>& rels, const Word& seed,
                              const Word* target, std::uint64_t max_nodes,
                              std::unordered_map<Word, std::pair<Word, DerivationStep>, WordHash>*
                                  parents) {
  GenericBfsOutcome out;
  std::unordered_set<Word, WordHash> visited;
  visited.insert(seed);
  out.members.push_back(seed);
  out.visited = 1;
  if (target && seed == *target) {
    out.target_found = true;
    return out;
  }
  const std::size_t n = seed.length();
  for (std::size_t qi = 0; qi < out.members.size(); ++qi) {
    const Word w = out.members[qi];
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      const std::size_t len = rels[ri].lhs.length();
      if (len > n) continue;
      for (std::size_t pos = 0; pos + len <= n; ++pos) {
        for (bool forward : {true, false}) {
          const Word& from = forward ? rels[ri].lhs : rels[ri].rhs;
          const Word& to = forward ? rels[ri].rhs : rels[ri].lhs;
          if (!std::equal(from.letters().begin(), from.letters().end(),
                          w.letters().begin() + pos))
            continue;
          std::vector<Letter> nb = w.letters();
          std::copy(to.letters().begin(), to.letters().end(), nb.begin() + pos);
          Word nbw(std::move(nb));
          if (!visited.insert(nbw).second) continue;
          if (out.visited >= max_nodes) {
            out.budget_exceeded = true;
            return out;
          }
          ++out.visited;
          if (parents) parents->emplace(nbw, std::make_pair(w, DerivationStep{pos, ri, forward}));
          out.members.push_back(nbw);
          if (target && nbw == *target) {
            out.target_found = true;
            return out;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

EquivClass::EquivClass(Word seed, std::size_t length, std::vector<std::uint32_t> codes)
    : seed_(std::move(seed)), length_(length), packed_(true), codes_(std::move(codes)) {
  canonical_ = unpack32(codes_.front(), length_);
}

EquivClass::EquivClass(Word seed, std::size_t length, std::vector<Word> words)
    : seed_(std::move(seed)), length_(length), packed_(false), words_(std::move(words)) {
  canonical_ = words_.front();
}

std::size_t EquivClass::size() const { return packed_ ? codes_.size() : words_.size(); }

bool EquivClass::contains(const Word& w) const {
  if (w.length() != length_) return false;
  if (packed_) return contains_code(pack32(w));
  return std::binary_search(words_.begin(), words_.end(), w);
}

bool EquivClass::contains_code(std::uint32_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

Word EquivClass::member(std::size_t i) const {
  return packed_ ? unpack32(codes_[i], length_) : words_[i];
}

std::uint32_t LevelPartition::class_id_code(std::uint32_t code) const {
  std::uint64_t rank = 0;
  for (unsigned i = 0; i < n_; ++i) rank = rank * k_ + ((code >> (2 * (n_ - 1 - i))) & 3u);
  return class_of_[rank];
}

std::uint32_t LevelPartition::class_id(const Word& w) const { return class_id_code(pack32(w)); }

Word LevelPartition::canonical_word(std::uint32_t class_id) const {
  return unpack32(canonical_[class_id], n_);
}

std::vector<std::uint32_t> LevelPartition::members(std::uint32_t class_id) const {
  return std::vector<std::uint32_t>(members_.begin() + offsets_[class_id],
                                    members_.begin() + offsets_[class_id + 1]);
}

std::size_t LevelPartition::class_size(std::uint32_t class_id) const {
  return offsets_[class_id + 1] - offsets_[class_id];
}

struct RewriteEngine::Impl {
  unsigned k;
  PackedRelations packed;
  mutable std::shared_mutex mutex;
  // canonical word -> class, plus seed word -> canonical for cache hits on
  // arbitrary members
  mutable std::unordered_map<Word, EquivClassPtr, WordHash> classes;
  mutable std::unordered_map<Word, Word, WordHash> canon_of;
  mutable std::unordered_map<std::size_t, LevelPartitionPtr> levels;

  explicit Impl(const Presentation& p) : k(static_cast<unsigned>(p.alphabet_size())), packed(p.relations()) {}

  bool packed_ok(std::size_t length) const { return packable(k, length); }
};

RewriteEngine::RewriteEngine(const Presentation& p)
    : pres_(p.normalized() ? p : normalize(p)), impl_(std::make_unique<Impl>(pres_)) {}

RewriteEngine::~RewriteEngine() = default;

std::vector<RewriteEngine::NeighborDetail> RewriteEngine::neighbors_detailed(const Word& win) const {
  const Word w = pres_.to_representatives(win);
  std::vector<NeighborDetail> out;
  const std::size_t n = w.length();
  const auto& rels = pres_.relations();
  for (std::size_t ri = 0; ri < rels.size(); ++ri) {
    const std::size_t len = rels[ri].lhs.length();
    if (len > n) continue;
    for (std::size_t pos = 0; pos + len <= n; ++pos) {
      for (bool forward : {true, false}) {
        const Word& from = forward ? rels[ri].lhs : rels[ri].rhs;
        const Word& to = forward ? rels[ri].rhs : rels[ri].lhs;
        if (!std::equal(from.letters().begin(), from.letters().end(), w.letters().begin() + pos))
          continue;
        std::vector<Letter> nb = w.letters();
        std::copy(to.letters().begin(), to.letters().end(), nb.begin() + pos);
        out.push_back({Word(std::move(nb)), DerivationStep{pos, ri, forward}});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NeighborDetail& a, const NeighborDetail& b) {
    if (a.word != b.word) return a.word < b.word;
    if (a.step.position != b.step.position) return a.step.position < b.step.position;
    return a.step.relation < b.step.relation;
  });
  return out;
}

std::vector<Word> RewriteEngine::neighbors(const Word& w) const {
  std::vector<Word> out;
  for (auto& nd : neighbors_detailed(w)) out.push_back(std::move(nd.word));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Result<EquivClassPtr> RewriteEngine::equivalence_class(const Word& win, SearchBudget b) const {
  const Word w = pres_.to_representatives(win);
  {
    std::shared_lock lock(impl_->mutex);
    auto c = impl_->canon_of.find(w);
    if (c != impl_->canon_of.end()) return impl_->classes.at(c->second);
  }

  EquivClassPtr cls;
  if (impl_->packed_ok(w.length())) {
    auto bfs = packed_bfs(impl_->packed, impl_->k, static_cast<unsigned>(w.length()), pack32(w),
                          nullptr, b.max_nodes, nullptr);
    if (bfs.budget_exceeded) return BudgetExceeded{bfs.visited, "equivalence_class"};
    std::sort(bfs.members.begin(), bfs.members.end());
    cls = std::make_shared<EquivClass>(w, w.length(), std::move(bfs.members));
  } else {
    auto bfs = generic_bfs(pres_.relations(), w, nullptr, b.max_nodes, nullptr);
    if (bfs.budget_exceeded) return BudgetExceeded{bfs.visited, "equivalence_class"};
    std::sort(bfs.members.begin(), bfs.members.end());
    cls = std::make_shared<EquivClass>(w, w.length(), std::move(bfs.members));
  }

  std::unique_lock lock(impl_->mutex);
  auto [it, inserted] = impl_->classes.emplace(cls->canonical(), cls);
  impl_->canon_of.emplace(w, cls->canonical());
  impl_->canon_of.emplace(cls->canonical(), cls->canonical());
  return it->second;
}

Verdict RewriteEngine::are_equivalent(const Word& uin, const Word& vin, SearchBudget b) const {
  const Word u = pres_.to_representatives(uin);
  const Word v = pres_.to_representatives(vin);
  if (u.length() != v.length()) return Verdict::No;
  if (u == v) return Verdict::Yes;

  {
    std::shared_lock lock(impl_->mutex);
    auto cu = impl_->canon_of.find(u);
    if (cu != impl_->canon_of.end())
      return impl_->classes.at(cu->second)->contains(v) ? Verdict::Yes : Verdict::No;
    auto cv = impl_->canon_of.find(v);
    if (cv != impl_->canon_of.end())
      return impl_->classes.at(cv->second)->contains(u) ? Verdict::Yes : Verdict::No;
  }

  if (impl_->packed_ok(u.length())) {
    const std::uint32_t target = pack32(v);
    auto bfs = packed_bfs(impl_->packed, impl_->k, static_cast<unsigned>(u.length()), pack32(u),
                          &target, b.max_nodes, nullptr);
    if (bfs.target_found) return Verdict::Yes;
    if (bfs.budget_exceeded) return Verdict::Inconclusive;
    // full closure computed; keep it
    std::sort(bfs.members.begin(), bfs.members.end());
    auto cls = std::make_shared<EquivClass>(u, u.length(), std::move(bfs.members));
    std::unique_lock lock(impl_->mutex);
    impl_->classes.emplace(cls->canonical(), cls);
    impl_->canon_of.emplace(u, cls->canonical());
    impl_->canon_of.emplace(cls->canonical(), cls->canonical());
    return Verdict::No;
  }
  auto bfs = generic_bfs(pres_.relations(), u, &v, b.max_nodes, nullptr);
  if (bfs.target_found) return Verdict::Yes;
  return bfs.budget_exceeded ? Verdict::Inconclusive : Verdict::No;
}

Result<Word> RewriteEngine::canonical(const Word& w, SearchBudget b) const {
  auto cls = equivalence_class(w, b);
  if (!cls.ok()) return cls.budget();
  return cls.value()->canonical();
}

Result<std::optional<Derivation>> RewriteEngine::derivation(const Word& uin, const Word& vin,
                                                            SearchBudget b) const {
  const Word u = pres_.to_representatives(uin);
  const Word v = pres_.to_representatives(vin);
  if (u.length() != v.length()) return std::optional<Derivation>{};
  if (u == v) return std::optional<Derivation>{Derivation{{u}, {}}};

  Derivation d;
  if (impl_->packed_ok(u.length())) {
    std::unordered_map<std::uint32_t, ParentRec> parents;
    const std::uint32_t target = pack32(v);
    auto bfs = packed_bfs(impl_->packed, impl_->k, static_cast<unsigned>(u.length()), pack32(u),
                          &target, b.max_nodes, &parents);
    if (bfs.budget_exceeded) return BudgetExceeded{bfs.visited, "derivation"};
    if (!bfs.target_found) return std::optional<Derivation>{};
    std::vector<std::pair<std::uint32_t, DerivationStep>> chain;
    std::uint32_t cur = target;
    const std::uint32_t start = pack32(u);
    while (cur != start) {
      const ParentRec& pr = parents.at(cur);
      chain.emplace_back(cur, DerivationStep{pr.position, pr.relation, pr.forward});
      cur = pr.parent;
    }
    d.words.push_back(u);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      d.steps.push_back(it->second);
      d.words.push_back(unpack32(it->first, u.length()));
    }
  } else {
    std::unordered_map<Word, std::pair<Word, DerivationStep>, WordHash> parents;
    auto bfs = generic_bfs(pres_.relations(), u, &v, b.max_nodes, &parents);
    if (bfs.budget_exceeded) return BudgetExceeded{bfs.visited, "derivation"};
    if (!bfs.target_found) return std::optional<Derivation>{};
    std::vector<std::pair<Word, DerivationStep>> chain;
    Word cur = v;
    while (cur != u) {
      const auto& pr = parents.at(cur);
      chain.emplace_back(cur, pr.second);
      cur = pr.first;
    }
    d.words.push_back(u);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      d.steps.push_back(it->second);
      d.words.push_back(it->first);
    }
  }
  return std::optional<Derivation>{std::move(d)};
}

bool RewriteEngine::replay(const Derivation& d) const {
  if (d.words.empty() || d.words.size() != d.steps.size() + 1) return false;
  const auto& rels = pres_.relations();
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    if (s.relation >= rels.size()) return false;
    const Word& from = s.forward ? rels[s.relation].lhs : rels[s.relation].rhs;
    const Word& to = s.forward ? rels[s.relation].rhs : rels[s.relation].lhs;
    const Word& w = d.words[i];
    if (s.position + from.length() > w.length()) return false;
    if (!std::equal(from.letters().begin(), from.letters().end(),
                    w.letters().begin() + s.position))
      return false;
    std::vector<Letter> next = w.letters();
    std::copy(to.letters().begin(), to.letters().end(), next.begin() + s.position);
    if (Word(std::move(next)) != d.words[i + 1]) return false;
  }
  return true;
}

Result<LevelPartitionPtr> RewriteEngine::level_partition(std::size_t length, SearchBudget b) const {
  if (!impl_->packed_ok(length))
    throw std::invalid_argument("level_partition: level not packable for this alphabet");
  {
    std::shared_lock lock(impl_->mutex);
    auto it = impl_->levels.find(length);
    if (it != impl_->levels.end()) return it->second;
  }

  const unsigned k = impl_->k;
  const unsigned n = static_cast<unsigned>(length);
  std::uint64_t universe = 1;
  for (unsigned i = 0; i < n; ++i) universe *= k;
  if (universe > b.max_nodes) return BudgetExceeded{0, "level_partition"};

  auto part = std::make_shared<LevelPartition>();
  part->k_ = k;
  part->n_ = n;
  part->class_of_.assign(universe, LevelPartition::kInvalidClass);
  std::vector<bool> seen(universe, false);
  part->offsets_.push_back(0);

  std::vector<bool> is_rep(k, false);
  for (Letter r : pres_.representative_letters()) is_rep[r] = true;

  // base-k rank -> packed code, walked in ascending (= lexicographic) order
  std::vector<Letter> digits(n, 0);
  auto code_of_digits = [&digits, n]() {
    std::uint32_t c = 0;
    for (unsigned i = 0; i < n; ++i) c = (c << 2) | digits[i];
    return c;
  };
  auto rank_of_code = [k, n](std::uint32_t code) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < n; ++i) r = r * k + ((code >> (2 * (n - 1 - i))) & 3u);
    return r;
  };

  for (std::uint64_t rank = 0; rank < universe; ++rank) {
    const bool valid =
        std::all_of(digits.begin(), digits.end(), [&is_rep](Letter d) { return is_rep[d]; });
    if (valid && !seen[rank]) {
      const std::uint32_t seed = code_of_digits();
      auto bfs = packed_bfs(impl_->packed, k, n, seed, nullptr, SearchBudget::kUnlimited, nullptr);
      const std::uint32_t id = static_cast<std::uint32_t>(part->canonical_.size());
      part->canonical_.push_back(seed);  // sweep order makes the seed minimal
      std::sort(bfs.members.begin(), bfs.members.end());
      for (std::uint32_t m : bfs.members) {
        const std::uint64_t mr = rank_of_code(m);
        seen[mr] = true;
        part->class_of_[mr] = id;
        part->members_.push_back(m);
      }
      part->offsets_.push_back(static_cast<std::uint32_t>(part->members_.size()));
    }
    // increment digits (base k)
    for (unsigned i = n; i-- > 0;) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }

  std::unique_lock lock(impl_->mutex);
  auto [it, inserted] = impl_->levels.emplace(length, std::move(part));
  return it->second;
}

std::size_t RewriteEngine::cached_classes() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->classes.size();
}

void RewriteEngine::clear_cache() const {
  std::unique_lock lock(impl_->mutex);
  impl_->classes.clear();
  impl_->canon_of.clear();
  impl_->levels.clear();
}

}  // namespace phmon
