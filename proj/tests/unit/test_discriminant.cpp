#include <doctest.h>

#include <random>

#include "phmon/discriminant.hpp"

using namespace phmon;

namespace {

ZPoly zpoly(std::initializer_list<YPoly> ascending) {
  return ZPoly(std::vector<YPoly>(ascending));
}

YPoly yconst(long v) { return ypoly_from({Rational(v)}); }

}  // namespace

TEST_CASE("resultant convention on tiny inputs") {
  // z^2 - 1 against its scaled derivative 2z
  const ZPoly f = zpoly({yconst(-1), yconst(0), yconst(1)});
  const ZPoly g = zpoly({yconst(0), yconst(2)});
  CHECK(resultant(f, g) == yconst(-4));

  // linear against linear: (z - alpha, z - beta) -> alpha - beta
  const ZPoly fa = zpoly({yconst(-3), yconst(1)});
  const ZPoly gb = zpoly({yconst(-5), yconst(1)});
  CHECK(resultant(fa, gb) == yconst(-2));

  // a squared root against the derivative vanishes
  const ZPoly sq = zpoly({yconst(1), yconst(-2), yconst(1)});  // (z-1)^2
  CHECK(resultant(sq, sq.derivative()).is_zero());
}

TEST_CASE("resultant scales by the degree of the other argument") {
  std::mt19937 rng(1234);
  for (int t = 0; t < 10; ++t) {
    std::vector<YPoly> fc, gc;
    for (int i = 0; i < 4; ++i) fc.push_back(yconst(static_cast<long>(rng() % 9) - 4));
    for (int i = 0; i < 3; ++i) gc.push_back(yconst(static_cast<long>(rng() % 9) - 4));
    fc.push_back(yconst(1 + rng() % 3));
    gc.push_back(yconst(1 + rng() % 3));
    const ZPoly f{std::vector<YPoly>(fc)};
    const ZPoly g{std::vector<YPoly>(gc)};
    const Rational c(static_cast<long>(2 + rng() % 5));
    YPoly scaled_expect = resultant(f, g);
    Rational factor(1);
    for (int i = 0; i < f.degree(); ++i) factor *= c;
    ZPoly cg = g;
    cg = ZPoly(std::vector<YPoly>([&] {
      std::vector<YPoly> v;
      for (const auto& x : g.coeffs()) v.push_back(x * c);
      return v;
    }()));
    CHECK(resultant(f, cg) == scaled_expect * factor);
  }
}

TEST_CASE("polynomial division is exact") {
  const YPoly num = ypoly_from({Rational(2), Rational(7), Rational(3)});  // (2+y)(1+3y)
  const YPoly den = ypoly_from({Rational(1), Rational(3)});
  const auto [q, r] = divmod(num, den);
  CHECK(r.is_zero());
  CHECK(q == ypoly_from({Rational(2), Rational(1)}));
  const auto [q2, r2] = divmod(ypoly_from({Rational(1), Rational(1)}), den);
  CHECK(!r2.is_zero());
}

TEST_CASE("all seventeen divisor polynomials pass the weight audit") {
  const auto& table = divisor_polynomials();
  REQUIRE(table.size() == 17);
  for (const auto& p : table) {
    CHECK(weighted_homogeneous(p));
    // degree three in z, with the cubic term present
    unsigned max_ez = 0;
    for (const auto& t : p.terms) max_ez = std::max(max_ez, t.ez);
    CHECK(max_ez == 3);
  }
}

TEST_CASE("specialization keeps the cubic shape") {
  const auto& p = divisor_polynomial("A_i");
  const ZPoly z = specialize(p, epsilon_for(p.family));
  CHECK(z.degree() == 3);
  CHECK(z.leading() == yconst(256));
}

TEST_CASE("bifurcation rows verify for a sample across the three families") {
  for (const char* type : {"A_i", "A_ii", "B_ii", "B_vi", "H_i", "H_ii", "H_v"}) {
    const auto v = check_bifurcation_row(type);
    CHECK(v.weights_ok);
    CHECK(v.holds);
    CHECK(v.constant != 0);
    CHECK(v.computed.degree() == v.expected.degree());
  }
}

TEST_CASE("computed degrees match the factored forms for every type") {
  for (const auto& row : bifurcation_table()) {
    const auto v = check_bifurcation_row(row.type);
    CHECK(v.computed.degree() == v.expected.degree());
  }
}
