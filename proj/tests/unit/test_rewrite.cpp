#include <doctest.h>

#include <random>
#include <thread>

#include "naive_rewriter.hpp"
#include "phmon/catalog.hpp"
#include "phmon/rewrite.hpp"

using namespace phmon;

namespace {

RewriteEngine& b_ii() {
  static RewriteEngine eng(catalog_lookup("B_ii"));
  return eng;
}

const naive::Rules kBiiRules = {{"cbb", "bba"}, {"bc", "ab"}, {"ac", "ca"}};

std::vector<std::string> to_strings(const RewriteEngine& eng, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(eng.presentation().word_to_string(w));
  return out;
}

Word parse(const RewriteEngine& eng, const std::string& s) {
  return eng.presentation().word_from_string(s);
}

}  // namespace

TEST_CASE("single rewriting steps") {
  auto& eng = b_ii();
  CHECK(to_strings(eng, eng.neighbors(parse(eng, "bba"))) == std::vector<std::string>{"cbb"});
  CHECK(eng.neighbors(parse(eng, "aaa")).empty());
  // computed exactly: only ab->bc at position 0 and bc->ab at position 1 apply
  CHECK(to_strings(eng, eng.neighbors(parse(eng, "abc"))) ==
        std::vector<std::string>{"aab", "bcc"});
}

TEST_CASE("rewriting steps agree with the naive oracle on every short word") {
  auto& eng = b_ii();
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const std::string& w : naive::all_words("abc", n)) {
      const auto expected = naive::neighbors(kBiiRules, w);
      const auto got = to_strings(eng, eng.neighbors(parse(eng, w)));
      CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
    }
  }
}

TEST_CASE("equivalence classes at small scale") {
  auto& eng = b_ii();
  SUBCASE("two-member class") {
    const auto cls = eng.equivalence_class(parse(eng, "bba"));
    REQUIRE(cls.ok());
    CHECK((*cls)->size() == 2);
    CHECK(eng.presentation().word_to_string((*cls)->canonical()) == "bba");
    CHECK((*cls)->contains(parse(eng, "cbb")));
  }
  SUBCASE("singleton letter class") {
    const auto cls = eng.equivalence_class(parse(eng, "a"));
    REQUIRE(cls.ok());
    CHECK((*cls)->size() == 1);
  }
  SUBCASE("the four-letter class from the shortest refutation") {
    const auto cls = eng.equivalence_class(parse(eng, "bcba"));
    REQUIRE(cls.ok());
    std::vector<std::string> members;
    for (std::size_t i = 0; i < (*cls)->size(); ++i)
      members.push_back(eng.presentation().word_to_string((*cls)->member(i)));
    CHECK(members == std::vector<std::string>{"abba", "acbb", "bcba", "cabb", "cbcb"});
    CHECK((*cls)->contains(parse(eng, "cabb")));
  }
}

TEST_CASE("classes agree with the naive oracle on every word up to length five") {
  auto& eng = b_ii();
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const std::string& w : naive::all_words("abc", n)) {
      const auto expected = naive::equivalence_class(kBiiRules, w);
      const auto cls = eng.equivalence_class(parse(eng, w));
      REQUIRE(cls.ok());
      std::set<std::string> got;
      for (std::size_t i = 0; i < (*cls)->size(); ++i)
        got.insert(eng.presentation().word_to_string((*cls)->member(i)));
      CHECK(got == expected);
    }
  }
}

TEST_CASE("equivalence decisions") {
  auto& eng = b_ii();
  CHECK(eng.are_equivalent(parse(eng, "bcba"), parse(eng, "cabb")) == Verdict::Yes);
  CHECK(eng.are_equivalent(parse(eng, "abab"), parse(eng, "abab")) == Verdict::Yes);
  CHECK(eng.are_equivalent(parse(eng, "ab"), parse(eng, "ba")) == Verdict::No);
  CHECK(eng.are_equivalent(parse(eng, "ab"), parse(eng, "abc")) == Verdict::No);
}

TEST_CASE("the printed four-word chain has equivalent endpoints but a broken middle") {
  // bcba and cabb are equivalent; bbba lies in a different class entirely
  auto& eng = b_ii();
  CHECK(eng.are_equivalent(parse(eng, "bcba"), parse(eng, "cabb")) == Verdict::Yes);
  CHECK(eng.are_equivalent(parse(eng, "bcba"), parse(eng, "bbba")) == Verdict::No);
}

TEST_CASE("derivations replay") {
  RewriteEngine h_ii(catalog_lookup("H_ii"));
  const Word u = h_ii.presentation().word_from_string("acaca");
  const Word v = h_ii.presentation().word_from_string("cacac");
  const auto d = h_ii.derivation(u, v);
  REQUIRE(d.ok());
  REQUIRE(d->has_value());
  CHECK((*d)->steps.size() == 2);  // via acbac
  CHECK((*d)->words.front() == u);
  CHECK((*d)->words.back() == v);
  CHECK(h_ii.replay(**d));

  auto& eng = b_ii();
  const auto none = eng.derivation(parse(eng, "ab"), parse(eng, "ba"));
  REQUIRE(none.ok());
  CHECK(!none->has_value());

  const auto trivial = eng.derivation(parse(eng, "abab"), parse(eng, "abab"));
  REQUIRE(trivial.ok());
  REQUIRE(trivial->has_value());
  CHECK((*trivial)->steps.empty());
  CHECK(eng.replay(**trivial));
}

TEST_CASE("replay rejects corrupted certificates") {
  auto& eng = b_ii();
  auto d = **eng.derivation(parse(eng, "bba"), parse(eng, "cbb"));
  REQUIRE(d.steps.size() == 1);
  auto corrupted = d;
  corrupted.words.back() = parse(eng, "bbb");
  CHECK(!eng.replay(corrupted));
  auto shifted = d;
  shifted.steps[0].position += 1;
  CHECK(!eng.replay(shifted));
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
  RewriteEngine eng(catalog_lookup("B_ii"));  // fresh engine, empty cache
  const Word w = eng.presentation().word_from_string("ababab");
  const auto cls = eng.equivalence_class(w, SearchBudget::nodes(3));
  REQUIRE(!cls.ok());
  CHECK(cls.budget().nodes_visited >= 3);
  CHECK(eng.are_equivalent(w, eng.presentation().word_from_string("bababa"),
                           SearchBudget::nodes(2)) == Verdict::Inconclusive);
}

TEST_CASE("member enumeration is deterministic across runs") {
  RewriteEngine a(catalog_lookup("B_ii")), b(catalog_lookup("B_ii"));
  const Word w = a.presentation().word_from_string("ababab");
  const auto ca = a.equivalence_class(w);
  const auto cb = b.equivalence_class(w);
  REQUIRE(ca.ok());
  REQUIRE(cb.ok());
  CHECK((*ca)->codes() == (*cb)->codes());
}

TEST_CASE("neighbor symmetry") {
  auto& eng = b_ii();
  std::mt19937 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 6;
    std::vector<Letter> ls(n);
    for (auto& a : ls) a = static_cast<Letter>(rng() % 3);
    const Word u{std::vector<Letter>(ls)};
    for (const Word& v : eng.neighbors(u)) {
      const auto back = eng.neighbors(v);
      CHECK(std::find(back.begin(), back.end(), u) != back.end());
    }
  }
}

TEST_CASE("level partitions tile each level exactly") {
  auto& eng = b_ii();
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto part = eng.level_partition(n);
    REQUIRE(part.ok());
    std::size_t total = 0;
    for (std::uint32_t id = 0; id < (*part)->class_count(); ++id)
      total += (*part)->class_size(id);
    std::size_t universe = 1;
    for (std::size_t i = 0; i < n; ++i) universe *= 3;
    CHECK(total == universe);
  }
}

TEST_CASE("partitions and classes agree") {
  auto& eng = b_ii();
  const auto part = eng.level_partition(4);
  REQUIRE(part.ok());
  for (const std::string& s : naive::all_words("abc", 4)) {
    const Word w = parse(eng, s);
    const auto cls = eng.equivalence_class(w);
    REQUIRE(cls.ok());
    CHECK((*part)->canonical_word((*part)->class_id(w)) == (*cls)->canonical());
  }
}

TEST_CASE("words beyond the packed window fall back transparently") {
  auto& eng = b_ii();
  // seventeen letters: sixteen a's and one c; only ac = ca applies
  std::string s(16, 'a');
  s += 'c';
  const auto cls = eng.equivalence_class(parse(eng, s));
  REQUIRE(cls.ok());
  CHECK(!(*cls)->is_packed());
  CHECK((*cls)->size() == 17);
  CHECK(eng.presentation().word_to_string((*cls)->canonical()) == s);
  CHECK(eng.are_equivalent(parse(eng, s), parse(eng, "c" + std::string(16, 'a'))) ==
        Verdict::Yes);
}

TEST_CASE("letters outside the representative set map through identifications") {
  RewriteEngine eng(catalog_lookup("A_ii"));
  const Word w = eng.presentation().word_from_string("abc");  // c collapses to b
  const auto cls = eng.equivalence_class(w);
  REQUIRE(cls.ok());
  CHECK(eng.presentation().word_to_string((*cls)->seed()) == "abb");
}

TEST_CASE("classes are closed under single rewriting steps") {
  auto& eng = b_ii();
  for (const char* seed : {"bcba", "ababab", "bba"}) {
    const auto cls = *eng.equivalence_class(parse(eng, seed));
    for (std::size_t i = 0; i < cls->size(); ++i)
      for (const Word& nb : eng.neighbors(cls->member(i))) CHECK(cls->contains(nb));
  }
}

TEST_CASE("presentation fingerprints distinguish normalized content") {
  const auto a = normalize(catalog_lookup("B_ii"));
  const auto b = normalize(catalog_lookup("B_ii"));
  const auto c = normalize(catalog_lookup("B_vi"));
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK(a.fingerprint() != c.fingerprint());
}

TEST_CASE("concurrent readers see identical classes") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  const Word w = eng.presentation().word_from_string("ababab");
  std::vector<std::vector<std::uint32_t>> results(8);
  {
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i)
      threads.emplace_back([&eng, &w, &results, i] {
        results[i] = (*eng.equivalence_class(w))->codes();
      });
    for (auto& t : threads) t.join();
  }
  for (int i = 1; i < 8; ++i) CHECK(results[i] == results[0]);
}

TEST_CASE("derivation search respects the budget") {
  RewriteEngine eng(catalog_lookup("B_ii"));
  const auto& p = eng.presentation();
  const auto d = eng.derivation(p.word_from_string("ababab"), p.word_from_string("bababa"),
                                SearchBudget::nodes(2));
  CHECK(!d.ok());
}

TEST_CASE("level partitions require a packable alphabet") {
  RewriteEngine eng(make_presentation({"a", "b", "c", "d", "e"}, {}, "wide"));
  CHECK_THROWS_AS((void)eng.level_partition(2), std::invalid_argument);
}

TEST_CASE("a one-step derivation found by search") {
  auto& eng = b_ii();
  const auto d = eng.derivation(parse(eng, "abbac"), parse(eng, "acbbc"));
  REQUIRE(d.ok());
  REQUIRE(d->has_value());
  CHECK((*d)->steps.size() == 1);
  CHECK(eng.replay(**d));
}
