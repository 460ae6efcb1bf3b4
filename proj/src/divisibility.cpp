#include "phmon/divisibility.hpp"

#include <algorithm>

namespace phmon {

namespace {

constexpr std::uint32_t window_mask_local(unsigned len) {
  return len >= 16 ? ~0u : ((1u << (2 * len)) - 1);
}

}  // namespace

Verdict divides(const RewriteEngine& eng, const Word& uin, const Word& win, Side side,
                SearchBudget b) {
  const auto& p = eng.presentation();
  const Word u = p.to_representatives(uin);
  const Word w = p.to_representatives(win);
  if (u.length() > w.length()) return Verdict::No;
  if (u.empty()) return Verdict::Yes;

  auto cu = eng.equivalence_class(u, b);
  if (!cu.ok()) return Verdict::Inconclusive;
  auto cw = eng.equivalence_class(w, b);
  if (!cw.ok()) return Verdict::Inconclusive;

  const unsigned lu = static_cast<unsigned>(u.length());
  const unsigned lw = static_cast<unsigned>(w.length());
  if ((*cw)->is_packed()) {
    for (std::uint32_t code : (*cw)->codes()) {
      const std::uint32_t part = side == Side::Left ? code >> (2 * (lw - lu))
                                                    : (code & window_mask_local(lu));
      if ((*cu)->contains_code(part)) return Verdict::Yes;
    }
    return Verdict::No;
  }
  for (std::size_t i = 0; i < (*cw)->size(); ++i) {
    const Word m = (*cw)->member(i);
    const Word part = side == Side::Left ? m.prefix(lu) : m.suffix(lu);
    if ((*cu)->contains(part)) return Verdict::Yes;
  }
  return Verdict::No;
}

Result<std::vector<Word>> quotients(const RewriteEngine& eng, const Word& uin, const Word& win,
                                    Side side, SearchBudget b) {
  const auto& p = eng.presentation();
  const Word u = p.to_representatives(uin);
  const Word w = p.to_representatives(win);
  if (u.length() > w.length()) return std::vector<Word>{};

  auto cu = eng.equivalence_class(u, b);
  if (!cu.ok()) return cu.budget();
  auto cw = eng.equivalence_class(w, b);
  if (!cw.ok()) return cw.budget();

  const unsigned lu = static_cast<unsigned>(u.length());
  const unsigned lw = static_cast<unsigned>(w.length());
  const unsigned lq = lw - lu;

  std::vector<Word> raw;
  for (std::size_t i = 0; i < (*cw)->size(); ++i) {
    const Word m = (*cw)->member(i);
    const Word part = side == Side::Left ? m.prefix(lu) : m.suffix(lu);
    if (!(*cu)->contains(part)) continue;
    raw.push_back(side == Side::Left ? m.suffix(lq) : m.prefix(lq));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<Word> canon;
  for (const Word& q : raw) {
    auto c = eng.canonical(q, b);
    if (!c.ok()) return c.budget();
    canon.push_back(*c);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

Result<MultipleSet> common_multiples(const RewriteEngine& eng, const Word& uin, const Word& vin,
                                     Side side, std::size_t length, SearchBudget b) {
  const auto& p = eng.presentation();
  const Word u = p.to_representatives(uin);
  const Word v = p.to_representatives(vin);
  if (length < std::max(u.length(), v.length()))
    throw std::invalid_argument("common_multiples: length below both factors");

  auto cu = eng.equivalence_class(u, b);
  if (!cu.ok()) return cu.budget();
  auto cv = eng.equivalence_class(v, b);
  if (!cv.ok()) return cv.budget();
  auto part = eng.level_partition(length, b);
  if (!part.ok()) return part.budget();

  const unsigned lu = static_cast<unsigned>(u.length());
  const unsigned lv = static_cast<unsigned>(v.length());
  const unsigned n = static_cast<unsigned>(length);

  MultipleSet out{side, u, v, length, {}};
  const LevelPartition& lp = **part;
  for (std::uint32_t id = 0; id < lp.class_count(); ++id) {
    bool has_u = false, has_v = false;
    for (std::uint32_t code : lp.members(id)) {
      if (!has_u) {
        const std::uint32_t pu = side == Side::Left ? code >> (2 * (n - lu))
                                                    : (code & window_mask_local(lu));
        has_u = u.empty() || (*cu)->contains_code(pu);
      }
      if (!has_v) {
        const std::uint32_t pv = side == Side::Left ? code >> (2 * (n - lv))
                                                    : (code & window_mask_local(lv));
        has_v = v.empty() || (*cv)->contains_code(pv);
      }
      if (has_u && has_v) break;
    }
    if (has_u && has_v) out.multiples.push_back(lp.canonical_word(id));
  }
  return out;
}

LcmCertificate lcm_certificate(const RewriteEngine& eng, const Word& uin, const Word& vin,
                               Side side, std::size_t max_length, SearchBudget b) {
  const auto& p = eng.presentation();
  const Word u = p.to_representatives(uin);
  const Word v = p.to_representatives(vin);
  const std::size_t lmin = std::max<std::size_t>(std::max(u.length(), v.length()), 1);

  std::vector<Word> all;      // ascending length, then canonical order
  std::vector<Word> minimal;  // the shortest nonempty layer
  for (std::size_t len = lmin; len <= max_length; ++len) {
    auto ms = common_multiples(eng, u, v, side, len, b);
    if (!ms.ok()) return ms.budget();
    if (minimal.empty()) minimal = ms->multiples;
    all.insert(all.end(), ms->multiples.begin(), ms->multiples.end());
  }
  if (all.empty())
    return BudgetExceeded{0, "no common multiple up to length " + std::to_string(max_length)};

  // A least common multiple must divide the shortest common multiples, so it
  // can only be one of them.
  for (const Word& cand : minimal) {
    bool divides_all = true;
    for (const Word& m : all) {
      const Verdict d = divides(eng, cand, m, side, b);
      if (d == Verdict::Inconclusive) return BudgetExceeded{0, "divides budget exhausted"};
      if (d == Verdict::No) {
        divides_all = false;
        break;
      }
    }
    if (divides_all) return LcmFound{cand};
  }
  const Word& m1 = minimal.front();
  for (const Word& m : all) {
    if (divides(eng, m1, m, side, b) == Verdict::No) return NoLcmUpTo{max_length, m1, m};
  }
  // unreachable: m1 failed to divide something above
  return BudgetExceeded{0, "internal: lost refutation witness"};
}

}  // namespace phmon
