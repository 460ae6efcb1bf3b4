#include "phmon/representation.hpp"

#include "phmon/catalog.hpp"

namespace phmon {

RepType rep_type_from_string(std::string_view s) {
  if (s == "B_ii") return RepType::B_ii;
  if (s == "B_vi") return RepType::B_vi;
  if (s == "H_ii") return RepType::H_ii;
  if (s == "H_iii") return RepType::H_iii;
  throw std::invalid_argument("no matrix representation for type " + std::string(s));
}

std::string to_string(RepType t) {
  switch (t) {
    case RepType::B_ii: return "B_ii";
    case RepType::B_vi: return "B_vi";
    case RepType::H_ii: return "H_ii";
    default: return "H_iii";
  }
}

std::string to_string(RingBranch b) {
  switch (b) {
    case RingBranch::I: return "i";
    case RingBranch::II: return "ii";
    default: return "-";
  }
}

namespace {

Rational frac(long n, long d) { return Rational(n, d); }

Representation build_b_ii() {
  // primitive 6th root branch, so the squared eigenvalue is not 1
  auto ring = QuotientRing::create({"l"}, {{Rational(1), Rational(-1), Rational(1)}});
  const FieldElement l = ring->generator(0);
  const FieldElement one = ring->one(), zero = ring->zero();
  Matrix2 A(one, l * l, zero, one);
  Matrix2 B(l, zero, zero, l.inverse());
  Matrix2 C(one, one, zero, one);
  return {RepType::B_ii, RingBranch::Default, ring, A, B, C};
}

// shared by B_vi and H_iii: tenth-cyclotomic eigenvalue, identical B entries
struct TenthRootEntries {
  RingPtr ring;
  FieldElement l, a, b, c, d;
};

TenthRootEntries tenth_root_entries() {
  auto ring = QuotientRing::create(
      {"l"}, {{Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)}});
  const FieldElement l = ring->generator(0);
  const FieldElement one = ring->one();
  const FieldElement l2m1 = l * l - one;
  const FieldElement a = -(l * l2m1).inverse();
  const FieldElement d = l.pow(3) / l2m1;
  const FieldElement b = one;
  // bc = (-l^4 + l^2 - 1) / (1 - l^2)^2; the square makes both printed
  // denominator forms (1-l^2)^2 and (l^2-1)^2 the same element
  const FieldElement c = (-(l.pow(4)) + l * l - one) / (l2m1 * l2m1);
  return {ring, l, a, b, c, d};
}

Representation build_b_vi() {
  auto [ring, l, a, b, c, d] = tenth_root_entries();
  const FieldElement zero = ring->zero();
  const FieldElement l4 = l.pow(4);
  Matrix2 A(l, zero, zero, l.inverse());
  Matrix2 B(a, b, c, d);
  Matrix2 C(-l4 * a, -(b / l4), -l4 * c, -(d / l4));
  return {RepType::B_vi, RingBranch::Default, ring, A, B, C};
}

Representation build_h_iii() {
  auto [ring, l, a, b, c, d] = tenth_root_entries();
  const FieldElement zero = ring->zero();
  const FieldElement l4 = l.pow(4);
  Matrix2 A(l, zero, zero, l.inverse());
  Matrix2 B(a, b, c, d);
  Matrix2 C(a, b / l4, l4 * c, d);
  return {RepType::H_iii, RingBranch::Default, ring, A, B, C};
}

Representation build_h_ii(RingBranch branch) {
  // branch I: l^2 + l + 1 = 0 and 3p^2 + 3p + 2 = 0
  // branch II: l^2 - l + 1 = 0 and 3p^2 - 3p + 2 = 0
  const Rational lin = branch == RingBranch::I ? Rational(1) : Rational(-1);
  auto ring = QuotientRing::create({"l", "p"}, {{Rational(1), lin, Rational(1)},
                                                {frac(2, 3), lin, Rational(1)}});
  const FieldElement l = ring->generator(0);
  const FieldElement p = ring->generator(1);
  const FieldElement zero = ring->zero(), one = ring->one();
  const FieldElement b = one;
  const FieldElement c = ring->constant(frac(-2, 3));
  const FieldElement third = ring->constant(frac(1, 3));
  const FieldElement p3inv = (p * Rational(3)).inverse();

  FieldElement a, d, q, r, s;
  if (branch == RingBranch::I) {
    a = (l - one) * third;
    d = (-l - one - one) * third;
    q = -(b * (l + one + one)) * p3inv;
    r = p * (one - l) / (b * Rational(3));
    s = (one + one) * p3inv;
  } else {
    a = (l + one) * third;
    d = (-l + one + one) * third;
    q = b * (-l + one + one) * p3inv;
    r = -(p * (l + one)) / (b * Rational(3));
    s = (one + one) * p3inv;
  }
  Matrix2 A(l, zero, zero, l.inverse());
  Matrix2 B(a, b, c, d);
  Matrix2 C(p, q, r, s);
  return {RepType::H_ii, branch, ring, A, B, C};
}

}  // namespace

Representation build_representation(RepType type, RingBranch branch) {
  if (type == RepType::H_ii) {
    if (branch == RingBranch::Default)
      throw std::invalid_argument("H_ii requires an explicit branch (i or ii)");
    return build_h_ii(branch);
  }
  if (branch != RingBranch::Default)
    throw std::invalid_argument("branch selection only applies to H_ii");
  switch (type) {
    case RepType::B_ii: return build_b_ii();
    case RepType::B_vi: return build_b_vi();
    default: return build_h_iii();
  }
}

Matrix2 evaluate_word(const Representation& rep, const Word& w) {
  Matrix2 out = Matrix2::identity(rep.ring);
  for (Letter x : w.letters()) {
    switch (x) {
      case 0: out = out * rep.A; break;
      case 1: out = out * rep.B; break;
      case 2: out = out * rep.C; break;
      default: throw std::invalid_argument("word mentions a letter outside a, b, c");
    }
  }
  return out;
}

RepresentationReport verify_representation(const Representation& rep) {
  const Presentation pres = catalog_lookup(to_string(rep.type));
  RepresentationReport report{rep.type, rep.branch, false, pres.relations().size(), {}, false};
  report.all_invertible =
      !rep.A.det().is_zero() && !rep.B.det().is_zero() && !rep.C.det().is_zero();
  for (const Relation& r : pres.relations()) {
    const Matrix2 lhs = evaluate_word(rep, r.lhs);
    const Matrix2 rhs = evaluate_word(rep, r.rhs);
    if (lhs == rhs) continue;
    report.failures.push_back(RelationCheck{r, false, lhs.to_string(), rhs.to_string()});
  }
  report.all_hold = report.failures.empty() && report.all_invertible;
  return report;
}

std::optional<CommutatorWitness> nonabelian_witness(const Representation& rep) {
  const std::pair<const Matrix2*, const Matrix2*> pairs[] = {
      {&rep.A, &rep.B}, {&rep.A, &rep.C}, {&rep.B, &rep.C}};
  const char* names[] = {"a", "b", "c"};
  const std::pair<int, int> name_idx[] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix2& x = *pairs[i].first;
    const Matrix2& y = *pairs[i].second;
    const Matrix2 comm = x * y * x.inverse() * y.inverse();
    if (!comm.is_identity())
      return CommutatorWitness{names[name_idx[i].first], names[name_idx[i].second], comm};
  }
  return std::nullopt;
}

}  // namespace phmon
