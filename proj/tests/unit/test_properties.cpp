#include <doctest.h>

#include <random>
#include <set>

#include "phmon/catalog.hpp"
#include "phmon/structure.hpp"

using namespace phmon;

namespace {

Word random_word(std::mt19937& rng, std::size_t max_len, unsigned k = 3) {
  const std::size_t n = 1 + rng() % max_len;
  std::vector<Letter> ls(n);
  for (auto& a : ls) a = static_cast<Letter>(rng() % k);
  return Word(std::move(ls));
}

}  // namespace

TEST_CASE("equivalence is an equivalence relation at bounded scale") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  std::mt19937 rng(1001);
  for (int t = 0; t < 120; ++t) {
    const Word u = random_word(rng, 6);
    CHECK(eng.are_equivalent(u, u) == Verdict::Yes);  // reflexive
    const auto cls = *eng.equivalence_class(u);
    const Word v = cls->member(rng() % cls->size());
    CHECK(eng.are_equivalent(v, u) == Verdict::Yes);  // symmetric
    const Word w = cls->member(rng() % cls->size());
    CHECK(eng.are_equivalent(u, w) == Verdict::Yes);  // transitive through v
    CHECK(*eng.canonical(u) == *eng.canonical(w));
  }
}

TEST_CASE("equivalence is a congruence for concatenation") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  std::mt19937 rng(2002);
  for (int t = 0; t < 120; ++t) {
    const Word u = random_word(rng, 6);
    const auto cls = *eng.equivalence_class(u);
    const Word v = cls->member(rng() % cls->size());
    for (Letter x : {Letter{0}, Letter{1}, Letter{2}}) {
      Word xu{{x}}, xv{{x}};
      xu += u;
      xv += v;
      CHECK(eng.are_equivalent(xu, xv) == Verdict::Yes);
      Word ux = u, vx = v;
      ux.push_back(x);
      vx.push_back(x);
      CHECK(eng.are_equivalent(ux, vx) == Verdict::Yes);
    }
  }
}

TEST_CASE("classes partition every level up to length seven") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto part = *eng.level_partition(n);
    std::size_t total = 0;
    std::set<std::uint32_t> seen_codes;
    for (std::uint32_t id = 0; id < part->class_count(); ++id) {
      for (std::uint32_t code : part->members(id)) {
        CHECK(seen_codes.insert(code).second);  // each word in exactly one class
        CHECK(part->class_id_code(code) == id);
      }
      total += part->class_size(id);
    }
    std::size_t universe = 1;
    for (std::size_t i = 0; i < n; ++i) universe *= 3;
    CHECK(total == universe);
  }
}

TEST_CASE("permutations compose contravariantly over products of quasi-central elements") {
  // two-class and three-class cases where the permutations are nontrivial
  for (const char* type : {"A_ii", "A_i", "B_iv"}) {
    RewriteEngine eng(catalog_lookup(type));
    const auto& p = eng.presentation();
    const Word delta = p.word_from_string(type == std::string("A_ii")  ? "aba"
                                          : type == std::string("A_i") ? "cbacba"
                                                                       : "abcb");
    const auto s1 = *quasi_central_sigmas(eng, delta);
    REQUIRE(!s1.empty());
    const auto square = *quasi_central_sigmas(eng, delta + delta);
    REQUIRE(!square.empty());
    const PermutationSigma composite = s1.front().after(s1.front());
    CHECK(std::find(square.begin(), square.end(), composite) != square.end());
    CHECK(composite.is_identity());  // all listed permutations are involutions
  }
  // mixed product in the deformed presentation
  RewriteEngine eng(catalog_lookup("B_ii"));
  const auto& p = eng.presentation();
  const Word d1 = p.word_from_string("ababab");
  const Word d2 = p.word_from_string("bbb");
  const auto s1 = *quasi_central_sigmas(eng, d1);
  const auto s2 = *quasi_central_sigmas(eng, d2);
  REQUIRE(!s1.empty());
  REQUIRE(!s2.empty());
  const auto prod = *quasi_central_sigmas(eng, d1 + d2);
  const PermutationSigma composite = s2.front().after(s1.front());
  CHECK(std::find(prod.begin(), prod.end(), composite) != prod.end());
}

TEST_CASE("products of fundamental and quasi-central elements stay fundamental") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  const auto& p = eng.presentation();
  const Word delta = p.word_from_string("ababab");   // fundamental
  const Word prime = p.word_from_string("bbb");      // quasi-central only
  for (const Word& produkt : {delta + prime, prime + delta}) {
    const auto fw = fundamental_witnesses(eng, produkt);
    REQUIRE(fw.ok());
    REQUIRE(!fw->empty());
    CHECK(fw->front().sigma.is_identity());
  }
}

TEST_CASE("fundamental elements are universal denominators at bounded scale") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  const auto rep = universal_denominator_check(eng, eng.presentation().word_from_string("ababab"), 2);
  REQUIRE(rep.ok());
  CHECK(rep->ok);
}

TEST_CASE("divisor sets of the fundamental element are side-symmetric") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  const auto rep = divisor_symmetry_check(eng, eng.presentation().word_from_string("ababab"));
  REQUIRE(rep.ok());
  CHECK(rep->equal);
}

TEST_CASE("reported permutations are compatible with the defining relations") {
  for (const char* type : {"B_ii", "A_ii", "A_i", "B_iv"}) {
    RewriteEngine eng(catalog_lookup(type));
    const auto& p = eng.presentation();
    const auto scan = quasi_center_scan(eng, 4);
    REQUIRE(scan.ok());
    for (const auto& e : *scan) {
      for (const auto& sigma : e.sigmas) {
        for (const auto& r : p.relations())
          CHECK(eng.are_equivalent(sigma.apply(r.lhs), sigma.apply(r.rhs)) == Verdict::Yes);
      }
    }
  }
}

TEST_CASE("quasi-central permutations are trivial in the four deformed monoids at small scale") {
  for (const char* type : {"B_ii", "B_vi", "H_ii", "H_iii"}) {
    RewriteEngine eng(catalog_lookup(type));
    const auto scan = quasi_center_scan(eng, 5);
    REQUIRE(scan.ok());
    for (const auto& e : *scan)
      for (const auto& sigma : e.sigmas) CHECK(sigma.is_identity());
  }
}

TEST_CASE("identical queries return identical classes") {
  RewriteEngine a(catalog_lookup("H_iii")), b(catalog_lookup("H_iii"));
  const Word w = a.presentation().word_from_string("bcbabcba");
  CHECK((*a.equivalence_class(w))->codes() == (*b.equivalence_class(w))->codes());
}
