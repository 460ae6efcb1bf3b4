#include <doctest.h>

#include <algorithm>
#include <random>

#include "naive_rewriter.hpp"
#include "phmon/catalog.hpp"
#include "phmon/divisibility.hpp"

using namespace phmon;

namespace {

RewriteEngine& b_ii() {
  static RewriteEngine eng(catalog_lookup("B_ii"));
  return eng;
}

const naive::Rules kBiiRules = {{"cbb", "bba"}, {"bc", "ab"}, {"ac", "ca"}};

Word parse(const RewriteEngine& eng, const std::string& s) {
  return eng.presentation().word_from_string(s);
}

std::string str(const RewriteEngine& eng, const Word& w) {
  return eng.presentation().word_to_string(w);
}

}  // namespace

TEST_CASE("divisibility of the shortest common multiple of b and c") {
  auto& eng = b_ii();
  CHECK(divides(eng, parse(eng, "b"), parse(eng, "bba"), Side::Left) == Verdict::Yes);
  CHECK(divides(eng, parse(eng, "c"), parse(eng, "bba"), Side::Left) == Verdict::Yes);
  CHECK(divides(eng, parse(eng, "a"), parse(eng, "bba"), Side::Left) == Verdict::No);
  CHECK(divides(eng, parse(eng, "bba"), parse(eng, "bcba"), Side::Left) == Verdict::No);
}

TEST_CASE("every element divides itself with identity quotient") {
  auto& eng = b_ii();
  const Word w = parse(eng, "bcba");
  CHECK(divides(eng, w, w, Side::Left) == Verdict::Yes);
  CHECK(divides(eng, w, w, Side::Right) == Verdict::Yes);
  const auto q = quotients(eng, w, w, Side::Left);
  REQUIRE(q.ok());
  REQUIRE(q->size() == 1);
  CHECK(q->front().empty());
}

TEST_CASE("quotients of the fundamental element by single letters") {
  auto& eng = b_ii();
  const Word delta = parse(eng, "ababab");
  const auto qa = quotients(eng, parse(eng, "a"), delta, Side::Left);
  REQUIRE(qa.ok());
  CHECK(std::find(qa->begin(), qa->end(), *eng.canonical(parse(eng, "babab"))) != qa->end());
  const auto qc = quotients(eng, parse(eng, "c"), delta, Side::Left);
  REQUIRE(qc.ok());
  CHECK(std::find(qc->begin(), qc->end(), *eng.canonical(parse(eng, "bbcba"))) != qc->end());
}

TEST_CASE("quotients witness their own consistency") {
  auto& eng = b_ii();
  std::mt19937 rng(4242);
  for (int t = 0; t < 60; ++t) {
    const std::size_t lu = 1 + rng() % 2, lw = lu + rng() % 3;
    std::string u, w;
    for (std::size_t i = 0; i < lu; ++i) u += "abc"[rng() % 3];
    for (std::size_t i = 0; i < lw; ++i) w += "abc"[rng() % 3];
    for (Side side : {Side::Left, Side::Right}) {
      const auto q = quotients(eng, parse(eng, u), parse(eng, w), side);
      REQUIRE(q.ok());
      for (const Word& x : *q) {
        const Word recombined = side == Side::Left ? parse(eng, u) + x : x + parse(eng, u);
        CHECK(eng.are_equivalent(recombined, parse(eng, w)) == Verdict::Yes);
      }
      CHECK((divides(eng, parse(eng, u), parse(eng, w), side) == Verdict::Yes) == !q->empty());
    }
  }
}

TEST_CASE("common multiples of b and c at length three are exactly one class") {
  auto& eng = b_ii();
  const auto ms = common_multiples(eng, parse(eng, "b"), parse(eng, "c"), Side::Left, 3);
  REQUIRE(ms.ok());
  REQUIRE(ms->multiples.size() == 1);
  CHECK(str(eng, ms->multiples.front()) == "bba");
}

TEST_CASE("length-four common multiples include the refutation witness") {
  auto& eng = b_ii();
  const auto ms = common_multiples(eng, parse(eng, "b"), parse(eng, "c"), Side::Left, 4);
  REQUIRE(ms.ok());
  const Word abba = parse(eng, "abba");  // canonical of the class of bcba
  CHECK(std::find(ms->multiples.begin(), ms->multiples.end(), abba) != ms->multiples.end());
}

TEST_CASE("an element is its own only multiple at its own length") {
  auto& eng = b_ii();
  const Word u = parse(eng, "bcba");
  const auto ms = common_multiples(eng, u, u, Side::Left, 4);
  REQUIRE(ms.ok());
  REQUIRE(ms->multiples.size() == 1);
  CHECK(ms->multiples.front() == (*eng.equivalence_class(u))->canonical());
}

TEST_CASE("least-common-multiple certificates") {
  SUBCASE("refutation for b and c") {
    auto& eng = b_ii();
    const auto cert = lcm_certificate(eng, parse(eng, "b"), parse(eng, "c"), Side::Left, 4);
    const auto* no = std::get_if<NoLcmUpTo>(&cert);
    REQUIRE(no != nullptr);
    CHECK(no->max_length == 4);
    CHECK(str(eng, no->minimal) == "bba");
    CHECK(str(eng, no->witness) == "abba");
    CHECK(divides(eng, no->minimal, no->witness, Side::Left) == Verdict::No);
  }
  SUBCASE("free monoid on one generator") {
    RewriteEngine eng(make_presentation({"a"}, {}, "free1"));
    const Word a = eng.presentation().word_from_string("a");
    const auto cert = lcm_certificate(eng, a, a, Side::Left, 3);
    const auto* found = std::get_if<LcmFound>(&cert);
    REQUIRE(found != nullptr);
    CHECK(eng.presentation().word_to_string(found->lcm) == "a");
  }
  SUBCASE("braid-type pair has a least common multiple") {
    RewriteEngine eng(catalog_lookup("A_i"));
    const auto& p = eng.presentation();
    const auto cert =
        lcm_certificate(eng, p.word_from_string("b"), p.word_from_string("c"), Side::Left, 3);
    const auto* found = std::get_if<LcmFound>(&cert);
    REQUIRE(found != nullptr);
    CHECK(p.word_to_string(found->lcm) == "bcb");
  }
}

TEST_CASE("divides agrees with enumeration of every factorization") {
  auto& eng = b_ii();
  for (std::size_t lw = 1; lw <= 4; ++lw) {
    for (const std::string& w : naive::all_words("abc", lw)) {
      for (std::size_t lu = 1; lu <= lw; ++lu) {
        for (const std::string& u : naive::all_words("abc", lu)) {
          CHECK((divides(eng, parse(eng, u), parse(eng, w), Side::Left) == Verdict::Yes) ==
                naive::divides(kBiiRules, "abc", u, w, true));
          CHECK((divides(eng, parse(eng, u), parse(eng, w), Side::Right) == Verdict::Yes) ==
                naive::divides(kBiiRules, "abc", u, w, false));
        }
      }
    }
  }
}

TEST_CASE("divisibility is invariant under replacing words by class members") {
  auto& eng = b_ii();
  std::mt19937 rng(7531);
  for (int t = 0; t < 80; ++t) {
    std::string u, w;
    const std::size_t lu = 1 + rng() % 3, lw = lu + rng() % 3;
    for (std::size_t i = 0; i < lu; ++i) u += "abc"[rng() % 3];
    for (std::size_t i = 0; i < lw; ++i) w += "abc"[rng() % 3];
    const auto cu = *eng.equivalence_class(parse(eng, u));
    const auto cw = *eng.equivalence_class(parse(eng, w));
    const Verdict base = divides(eng, parse(eng, u), parse(eng, w), Side::Left);
    const Word u2 = cu->member(rng() % cu->size());
    const Word w2 = cw->member(rng() % cw->size());
    CHECK(divides(eng, u2, w2, Side::Left) == base);
  }
}

TEST_CASE("divisibility is transitive at bounded scale") {
  auto& eng = b_ii();
  std::mt19937 rng(86420);
  int exercised = 0;
  while (exercised < 40) {
    std::string u, v, w;
    const std::size_t lu = 1 + rng() % 2;
    const std::size_t lv = lu + rng() % 2;
    const std::size_t lw = lv + rng() % 2;
    for (std::size_t i = 0; i < lu; ++i) u += "abc"[rng() % 3];
    for (std::size_t i = 0; i < lv; ++i) v += "abc"[rng() % 3];
    for (std::size_t i = 0; i < lw; ++i) w += "abc"[rng() % 3];
    if (divides(eng, parse(eng, u), parse(eng, v), Side::Left) != Verdict::Yes) continue;
    if (divides(eng, parse(eng, v), parse(eng, w), Side::Left) != Verdict::Yes) continue;
    CHECK(divides(eng, parse(eng, u), parse(eng, w), Side::Left) == Verdict::Yes);
    ++exercised;
  }
}

TEST_CASE("budget exhaustion surfaces as inconclusive") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  CHECK(divides(eng, parse(eng, "a"), parse(eng, "ababab"), Side::Left,
                SearchBudget::nodes(2)) == Verdict::Inconclusive);
}

TEST_CASE("pairs without any common multiple stay inconclusive") {
  RewriteEngine eng(make_presentation({"a", "b"}, {}, "free2"));
  const auto& p = eng.presentation();
  const auto cert =
      lcm_certificate(eng, p.word_from_string("a"), p.word_from_string("b"), Side::Left, 4);
  const auto* budget = std::get_if<BudgetExceeded>(&cert);
  REQUIRE(budget != nullptr);
  CHECK(budget->context.find("no common multiple") != std::string::npos);
}
