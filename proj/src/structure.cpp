#include "phmon/structure.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace phmon {

namespace {

constexpr std::uint32_t mask2(unsigned len) {
  return len >= 16 ? ~0u : ((1u << (2 * len)) - 1);
}

Word concat_letter(Letter a, const Word& w) {
  std::vector<Letter> v;
  v.reserve(w.length() + 1);
  v.push_back(a);
  v.insert(v.end(), w.letters().begin(), w.letters().end());
  return Word(std::move(v));
}

Word append_letter(const Word& w, Letter a) {
  std::vector<Letter> v = w.letters();
  v.push_back(a);
  return Word(std::move(v));
}

}  // namespace

PermutationSigma PermutationSigma::identity(const Presentation& p) {
  PermutationSigma s;
  s.map_.resize(p.alphabet_size());
  for (std::size_t i = 0; i < s.map_.size(); ++i)
    s.map_[i] = p.representative(static_cast<Letter>(i));
  return s;
}

std::vector<PermutationSigma> PermutationSigma::all(const Presentation& p) {
  const std::vector<Letter> reps = p.representative_letters();
  std::vector<Letter> images = reps;
  std::vector<PermutationSigma> out;
  std::sort(images.begin(), images.end());
  do {
    PermutationSigma s;
    s.map_.resize(p.alphabet_size());
    for (std::size_t i = 0; i < reps.size(); ++i) s.map_[reps[i]] = images[i];
    for (std::size_t i = 0; i < s.map_.size(); ++i)
      if (!p.is_representative(static_cast<Letter>(i)))
        s.map_[i] = s.map_[p.representative(static_cast<Letter>(i))];
    out.push_back(std::move(s));
  } while (std::next_permutation(images.begin(), images.end()));
  std::sort(out.begin(), out.end());
  return out;
}

PermutationSigma PermutationSigma::from_images(const Presentation& p,
                                               const std::vector<Letter>& images) {
  if (images.size() != p.alphabet_size())
    throw std::invalid_argument("permutation image table has wrong size");
  PermutationSigma s;
  s.map_.resize(p.alphabet_size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Letter src = static_cast<Letter>(i);
    if (p.representative(images[i]) != p.representative(images[p.representative(src)]))
      throw std::invalid_argument("permutation images are not constant on letter classes");
    s.map_[i] = p.representative(images[i]);
  }
  // bijectivity on representatives
  std::vector<Letter> seen;
  for (Letter r : p.representative_letters()) seen.push_back(s.map_[r]);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("permutation images are not a bijection on classes");
  return s;
}

Word PermutationSigma::apply(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (Letter a : w.letters()) out.push_back(map_[a]);
  return Word(std::move(out));
}

bool PermutationSigma::is_identity() const {
  // map_ stores class representatives, so sigma fixes every class exactly
  // when map_ is idempotent: a moved representative r has map_[r] = s != r
  // with map_[s] != s by injectivity.
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[map_[i]] != map_[i]) return false;
  return true;
}

PermutationSigma PermutationSigma::after(const PermutationSigma& first) const {
  PermutationSigma s;
  s.map_.resize(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) s.map_[i] = map_[first.map_[i]];
  return s;
}

std::vector<std::pair<Letter, Letter>> PermutationSigma::mapping(const Presentation& p) const {
  std::vector<std::pair<Letter, Letter>> out;
  for (Letter r : p.representative_letters()) out.emplace_back(r, map_[r]);
  return out;
}

std::string PermutationSigma::to_string(const Presentation& p) const {
  std::string out;
  for (auto [src, img] : mapping(p)) {
    if (!out.empty()) out += ", ";
    out += p.class_name(src) + "->" + p.class_name(img);
  }
  return out;
}

Result<std::vector<PermutationSigma>> quasi_central_sigmas(const RewriteEngine& eng,
                                                           const Word& delta_in, SearchBudget b) {
  const auto& p = eng.presentation();
  const Word delta = p.to_representatives(delta_in);
  if (delta.empty()) throw std::invalid_argument("quasi_central_sigmas: empty word");

  const std::vector<Letter> reps = p.representative_letters();
  std::vector<EquivClassPtr> left_classes;  // class of d * delta per rep
  for (Letter d : reps) {
    auto c = eng.equivalence_class(concat_letter(d, delta), b);
    if (!c.ok()) return c.budget();
    left_classes.push_back(*c);
  }
  std::vector<PermutationSigma> out;
  for (const auto& sigma : PermutationSigma::all(p)) {
    bool ok = true;
    for (std::size_t i = 0; i < reps.size() && ok; ++i)
      ok = left_classes[i]->contains(append_letter(delta, sigma.apply(reps[i])));
    if (ok) out.push_back(sigma);
  }
  return out;
}

Result<std::vector<FundamentalWitness>> fundamental_witnesses(const RewriteEngine& eng,
                                                              const Word& delta_in,
                                                              SearchBudget b) {
  const auto& p = eng.presentation();
  const Word delta = p.to_representatives(delta_in);
  if (delta.empty()) throw std::invalid_argument("fundamental_witnesses: empty word");

  auto cr = eng.equivalence_class(delta, b);
  if (!cr.ok()) return cr.budget();
  const EquivClass& cls = **cr;
  const unsigned n = static_cast<unsigned>(delta.length());
  const std::vector<Letter> reps = p.representative_letters();

  std::vector<FundamentalWitness> out;
  if (cls.is_packed()) {
    // bucket member codes by first letter
    std::array<std::vector<std::uint32_t>, kMaxPackedAlphabet> starts;
    for (std::uint32_t code : cls.codes()) starts[code >> (2 * (n - 1))].push_back(code);
    for (const auto& sigma : PermutationSigma::all(p)) {
      FundamentalWitness w{delta, sigma, {}};
      bool ok = true;
      for (Letter d : reps) {
        bool found = false;
        const Letter img = sigma.apply(d);
        for (std::uint32_t code : starts[d]) {
          const std::uint32_t suffix = code & mask2(n - 1);
          const std::uint32_t appended = (suffix << 2) | img;
          if (cls.contains_code(appended)) {
            w.per_generator.emplace_back(d, unpack32(suffix, n - 1));
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(w));
    }
  } else {
    for (const auto& sigma : PermutationSigma::all(p)) {
      FundamentalWitness w{delta, sigma, {}};
      bool ok = true;
      for (Letter d : reps) {
        bool found = false;
        const Letter img = sigma.apply(d);
        for (std::size_t i = 0; i < cls.size() && !found; ++i) {
          const Word m = cls.member(i);
          if (m[0] != d) continue;
          const Word suffix = m.suffix(n - 1);
          if (cls.contains(append_letter(suffix, img))) {
            w.per_generator.emplace_back(d, suffix);
            found = true;
          }
        }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(w));
    }
  }
  return out;
}

Result<std::vector<PermutationSigma>> fundamental_sigmas_split_witnesses(const RewriteEngine& eng,
                                                                         const Word& delta_in,
                                                                         SearchBudget b) {
  const auto& p = eng.presentation();
  const Word delta = p.to_representatives(delta_in);
  if (delta.empty())
    throw std::invalid_argument("fundamental_sigmas_split_witnesses: empty word");

  auto cr = eng.equivalence_class(delta, b);
  if (!cr.ok()) return cr.budget();
  const EquivClass& cls = **cr;
  const unsigned n = static_cast<unsigned>(delta.length());

  std::vector<bool> starts(p.alphabet_size(), false), ends(p.alphabet_size(), false);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    const Word m = cls.member(i);
    starts[m[0]] = true;
    ends[m[n - 1]] = true;
  }
  std::vector<PermutationSigma> out;
  for (const auto& sigma : PermutationSigma::all(p)) {
    bool ok = true;
    for (Letter d : p.representative_letters()) {
      if (!starts[d] || !ends[sigma.apply(d)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(sigma);
  }
  return out;
}

Result<std::vector<QuasiCentralElement>> quasi_center_scan(const RewriteEngine& eng,
                                                           std::size_t max_length,
                                                           SearchBudget b) {
  const auto& p = eng.presentation();
  const auto sigmas = PermutationSigma::all(p);
  const std::vector<Letter> reps = p.representative_letters();

  std::vector<QuasiCentralElement> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    auto pn = eng.level_partition(n, b);
    if (!pn.ok()) return pn.budget();
    auto pn1 = eng.level_partition(n + 1, b);
    if (!pn1.ok()) return pn1.budget();
    const LevelPartition& lo = **pn;
    const LevelPartition& hi = **pn1;
    for (std::uint32_t id = 0; id < lo.class_count(); ++id) {
      const std::uint32_t code = lo.canonical_code(id);
      QuasiCentralElement e{lo.canonical_word(id), {}};
      for (const auto& sigma : sigmas) {
        bool ok = true;
        for (Letter d : reps) {
          const std::uint32_t left = (std::uint32_t{d} << (2 * n)) | code;
          const std::uint32_t right = (code << 2) | sigma.apply(d);
          if (hi.class_id_code(left) != hi.class_id_code(right)) {
            ok = false;
            break;
          }
        }
        if (ok) e.sigmas.push_back(sigma);
      }
      if (!e.sigmas.empty()) out.push_back(std::move(e));
    }
  }
  return out;
}

Result<CancellationReport> cancellation_scan(const RewriteEngine& eng, std::size_t max_length,
                                             SearchBudget b) {
  const auto& p = eng.presentation();
  const std::vector<Letter> reps = p.representative_letters();
  CancellationReport report{p.name(), max_length, false, {}};

  for (std::size_t r = 1; r <= max_length; ++r) {
    auto plo = eng.level_partition(r, b);
    if (!plo.ok()) return plo.budget();
    auto phi = eng.level_partition(r + 1, b);
    if (!phi.ok()) return phi.budget();
    const LevelPartition& lo = **plo;
    const LevelPartition& hi = **phi;

    for (Side side : {Side::Left, Side::Right}) {
      // first quotient class seen per (letter, multiple class)
      constexpr std::uint32_t kNone = ~0u;
      std::vector<std::uint32_t> first_seen(reps.size() * hi.class_count(), kNone);
      std::unordered_set<std::uint64_t> reported;

      for (std::uint32_t xid = 0; xid < lo.class_count(); ++xid) {
        for (std::uint32_t code : lo.members(xid)) {
          for (std::size_t ui = 0; ui < reps.size(); ++ui) {
            const Letter u = reps[ui];
            const std::uint32_t big = side == Side::Left
                                          ? ((std::uint32_t{u} << (2 * r)) | code)
                                          : ((code << 2) | u);
            const std::uint32_t kid = hi.class_id_code(big);
            std::uint32_t& slot = first_seen[ui * hi.class_count() + kid];
            if (slot == kNone) {
              slot = xid;
            } else if (slot != xid) {
              const std::uint64_t key =
                  (std::uint64_t{ui} << 40) | (std::uint64_t{kid} << 8) |
                  (side == Side::Left ? 0 : 1);
              if (!reported.insert(key).second) continue;
              CancellationViolation v{u, side, hi.canonical_word(kid), lo.canonical_word(slot),
                                      lo.canonical_word(xid)};
              // re-verify through the engine before reporting
              const Word ux = side == Side::Left ? concat_letter(u, v.quotient_x)
                                                 : append_letter(v.quotient_x, u);
              const Word uy = side == Side::Left ? concat_letter(u, v.quotient_y)
                                                 : append_letter(v.quotient_y, u);
              if (eng.are_equivalent(ux, uy, b) == Verdict::Yes &&
                  eng.are_equivalent(v.quotient_x, v.quotient_y, b) == Verdict::No)
                report.violations.push_back(std::move(v));
            }
          }
        }
      }
    }
  }
  report.complete = true;
  return report;
}

Result<MorphismCheck> check_morphism(const RewriteEngine& from, const RewriteEngine& to,
                                     const std::vector<Word>& letter_images, SearchBudget b) {
  const auto& pf = from.presentation();
  if (letter_images.size() != pf.alphabet_size())
    throw std::invalid_argument("check_morphism: one image word per source letter required");

  auto image_of = [&letter_images](const Word& w) {
    Word out;
    for (Letter a : w.letters()) out += letter_images[a];
    return out;
  };

  // identified letters must have equivalent images
  for (std::size_t i = 0; i < pf.alphabet_size(); ++i) {
    const Letter a = static_cast<Letter>(i);
    if (pf.is_representative(a)) continue;
    const Verdict v =
        to.are_equivalent(letter_images[a], letter_images[pf.representative(a)], b);
    if (v == Verdict::Inconclusive) return BudgetExceeded{0, "check_morphism"};
    if (v == Verdict::No) return MorphismCheck{false, std::nullopt};
  }

  const auto& rels = pf.relations();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const Verdict v = to.are_equivalent(image_of(rels[i].lhs), image_of(rels[i].rhs), b);
    if (v == Verdict::Inconclusive) return BudgetExceeded{0, "check_morphism"};
    if (v == Verdict::No) return MorphismCheck{false, i};
  }
  return MorphismCheck{true, std::nullopt};
}

Result<UniversalDenominatorReport> universal_denominator_check(const RewriteEngine& eng,
                                                               const Word& delta_in,
                                                               std::size_t max_factor_length,
                                                               SearchBudget b) {
  const auto& p = eng.presentation();
  const Word delta = p.to_representatives(delta_in);
  auto fw = fundamental_witnesses(eng, delta, b);
  if (!fw.ok()) return fw.budget();
  UniversalDenominatorReport report{delta, max_factor_length, false, false, {}};
  report.delta_fundamental = !fw->empty();
  if (!report.delta_fundamental) return report;

  for (std::size_t len = 1; len <= max_factor_length; ++len) {
    const Word power = delta.pow(static_cast<unsigned>(len));
    auto cp = eng.equivalence_class(power, b);
    if (!cp.ok()) return cp.budget();
    auto part = eng.level_partition(len, b);
    if (!part.ok()) return part.budget();
    const LevelPartition& lp = **part;
    const unsigned n = static_cast<unsigned>(power.length());
    const unsigned l = static_cast<unsigned>(len);

    std::vector<bool> left_hit(lp.class_count(), false), right_hit(lp.class_count(), false);
    if ((*cp)->is_packed()) {
      for (std::uint32_t code : (*cp)->codes()) {
        left_hit[lp.class_id_code(code >> (2 * (n - l)))] = true;
        right_hit[lp.class_id_code(code & mask2(l))] = true;
      }
    } else {
      for (std::size_t i = 0; i < (*cp)->size(); ++i) {
        const Word m = (*cp)->member(i);
        left_hit[lp.class_id(m.prefix(l))] = true;
        right_hit[lp.class_id(m.suffix(l))] = true;
      }
    }
    for (std::uint32_t id = 0; id < lp.class_count(); ++id) {
      if (!left_hit[id]) report.failures.emplace_back(lp.canonical_word(id), Side::Left);
      if (!right_hit[id]) report.failures.emplace_back(lp.canonical_word(id), Side::Right);
    }
  }
  report.ok = report.delta_fundamental && report.failures.empty();
  return report;
}

Result<CoxeterPowerResult> coxeter_power_search(const RewriteEngine& eng, unsigned max_k,
                                                SearchBudget b) {
  const auto& p = eng.presentation();
  const Word coxeter = p.word_from_string("cba");
  for (unsigned k = 1; k <= max_k; ++k) {
    auto fw = fundamental_witnesses(eng, coxeter.pow(k), b);
    if (!fw.ok()) return fw.budget();
    if (!fw->empty()) return CoxeterPowerResult{k, fw->front()};
  }
  return CoxeterPowerResult{std::nullopt, std::nullopt};
}

Result<DivisorSymmetryReport> divisor_symmetry_check(const RewriteEngine& eng,
                                                     const Word& delta_in, SearchBudget b) {
  const auto& p = eng.presentation();
  const Word delta = p.to_representatives(delta_in);
  auto cr = eng.equivalence_class(delta, b);
  if (!cr.ok()) return cr.budget();
  const EquivClass& cls = **cr;
  const std::size_t n = delta.length();

  DivisorSymmetryReport report{delta, false, {}, 0, 0};
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<Word> pre, suf;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const Word w = cls.member(i);
      pre.push_back(w.prefix(m));
      suf.push_back(w.suffix(m));
    }
    for (auto* side : {&pre, &suf}) {
      std::sort(side->begin(), side->end());
      side->erase(std::unique(side->begin(), side->end()), side->end());
    }
    auto canon_set = [&](const std::vector<Word>& words) -> Result<std::vector<Word>> {
      std::vector<Word> out;
      for (const Word& w : words) {
        auto c = eng.canonical(w, b);
        if (!c.ok()) return c.budget();
        out.push_back(*c);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    };
    auto lc = canon_set(pre);
    if (!lc.ok()) return lc.budget();
    auto rc = canon_set(suf);
    if (!rc.ok()) return rc.budget();
    report.left_count += lc->size();
    report.right_count += rc->size();
    for (const Word& w : *lc)
      if (!std::binary_search(rc->begin(), rc->end(), w))
        report.asymmetries.emplace_back(w, Side::Left);
    for (const Word& w : *rc)
      if (!std::binary_search(lc->begin(), lc->end(), w))
        report.asymmetries.emplace_back(w, Side::Right);
  }
  report.equal = report.asymmetries.empty();
  return report;
}

const std::vector<FundamentalTableRow>& fundamental_element_table() {
  static const std::vector<FundamentalTableRow> rows = {
      {"A_i", "cbacba", {}, "bac"},
      {"A_ii", "aba", {}, "baa"},
      {"B_i", "cbacbacba", {}, "abc"},
      {"B_ii", "ababab", {}, "abc"},
      {"B_ii", "bccbccbcc", {"cbacbacba"}, "abc"},
      {"B_iii", "ac", {}, "abc"},
      {"B_iv", "abcb", {}, "acb"},
      {"B_v", "a", {}, "abc"},
      {"B_vi", "aaaaa", {"bbbbb", "ccccc"}, "abc"},
      {"B_vi", "abaaba", {}, "abc"},
      {"B_vi", "bccabcb", {}, "abc"},
      {"B_vi", "bbacbbac", {}, "abc"},
      {"B_vi", "acacaacaca", {}, "abc"},
      {"B_vi", "cbacbacba", {}, "abc"},
      {"B_vi", "cabcabcabcabcab", {}, "abc"},
      {"B_vii", "a", {}, "abc"},
      {"H_i", "cbacbacbacbacba", {}, "abc"},
      {"H_ii", "acacaacaca", {"acacacacac"}, "abc"},
      {"H_ii", "babacbabacbabac", {"cbacbacbacbacba"}, "abc"},
      {"H_iii", "aaaaa", {"bbbbb", "ccccc"}, "abc"},
      {"H_iii", "abaaba", {}, "abc"},
      {"H_iii", "accbaca", {}, "abc"},
      {"H_iii", "bcbabcba", {}, "abc"},
      {"H_iii", "bcbcbbcbcb", {"bcbcbcbcbc"}, "abc"},
      {"H_iii", "abcabcabc", {}, "abc"},
      {"H_iii", "cbacbacbacbacba", {}, "abc"},
      {"H_iv", "a", {}, "abc"},
      {"H_v", "a", {}, "abc"},
      {"H_vi", "a", {}, "abc"},
      {"H_vii", "a", {}, "abc"},
      {"H_viii", "a", {}, "abc"},
  };
  return rows;
}

Result<TableVerification> verify_fundamental_table(const RewriteEngine& eng,
                                                   const std::string& type, SearchBudget b) {
  const auto& p = eng.presentation();
  TableVerification out{type, false, {}};
  for (const auto& row : fundamental_element_table()) {
    if (row.type != type) continue;
    TableElementResult res{row, false, false, false, 0, std::nullopt, {}};
    const Word delta = p.word_from_string(row.delta);

    std::vector<Letter> images;
    for (char c : row.sigma_images) images.push_back(p.word_from_string(std::string(1, c))[0]);
    const PermutationSigma expected = PermutationSigma::from_images(p, images);

    auto fw = fundamental_witnesses(eng, delta, b);
    if (!fw.ok()) return fw.budget();
    res.fundamental = !fw->empty();
    for (const auto& w : *fw) {
      res.sigmas_found.push_back(w.sigma);
      if (w.sigma == expected) {
        res.sigma_matches = true;
        res.witness = w;
      }
    }
    auto cls = eng.equivalence_class(delta, b);
    if (!cls.ok()) return cls.budget();
    res.class_size = (*cls)->size();

    res.equivalents_ok = true;
    for (const auto& eq : row.equivalents)
      if (!(*cls)->contains(p.to_representatives(p.word_from_string(eq)))) res.equivalents_ok = false;

    out.elements.push_back(std::move(res));
  }
  if (out.elements.empty())
    throw std::invalid_argument("no catalog fundamental elements for type " + type);
  out.all_verified = std::all_of(out.elements.begin(), out.elements.end(), [](const auto& e) {
    return e.fundamental && e.sigma_matches && e.equivalents_ok;
  });
  return out;
}

}  // namespace phmon
