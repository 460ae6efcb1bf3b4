#include "phmon/discriminant.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "phmon/embedded_data.hpp"

namespace phmon {

Weights family_weights(char family) {
  switch (family) {
    case 'A': return {2, 3, 4, 12};
    case 'B': return {2, 4, 6, 18};
    case 'H': return {2, 6, 10, 30};
    default: throw std::invalid_argument("unknown weight family");
  }
}

bool weighted_homogeneous(const DivisorPolynomial& p) {
  const Weights w = family_weights(p.family);
  for (const auto& t : p.terms)
    if (t.coef == 0 || w.x * t.ex + w.y * t.ey + w.z * t.ez != w.total) return false;
  return !p.terms.empty();
}

namespace {

std::vector<DivisorPolynomial> parse_divisor_table(const char* text) {
  std::vector<DivisorPolynomial> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("divisor polynomial data: missing ':' in " + line);
    DivisorPolynomial p;
    p.type = line.substr(0, colon);
    while (!p.type.empty() && p.type.back() == ' ') p.type.pop_back();
    p.family = p.type.at(0);

    std::string body = line.substr(colon + 1);
    std::replace(body.begin(), body.end(), ';', '\n');
    std::istringstream terms(body);
    std::string term_line;
    while (std::getline(terms, term_line)) {
      if (term_line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ts(term_line);
      std::string coef;
      TrivariateTerm t;
      if (!(ts >> coef >> t.ex >> t.ey >> t.ez))
        throw std::runtime_error("divisor polynomial data: bad term in " + p.type);
      t.coef = Rational(coef);
      t.coef.canonicalize();
      p.terms.push_back(std::move(t));
    }
    if (!weighted_homogeneous(p))
      throw std::runtime_error("divisor polynomial " + p.type + " fails the weight audit");
    out.push_back(std::move(p));
  }
  if (out.size() != 17)
    throw std::runtime_error("divisor polynomial data: expected 17 entries");
  return out;
}

}  // namespace

const std::vector<DivisorPolynomial>& divisor_polynomials() {
  static const std::vector<DivisorPolynomial> table =
      parse_divisor_table(embedded::kDivisorPolynomials);
  return table;
}

const DivisorPolynomial& divisor_polynomial(const std::string& type) {
  for (const auto& p : divisor_polynomials())
    if (p.type == type) return p;
  throw std::invalid_argument("unknown divisor type: " + type);
}

int epsilon_for(char family) { return family == 'A' ? -1 : 1; }

ZPoly specialize(const DivisorPolynomial& p, int epsilon) {
  unsigned max_ez = 0;
  for (const auto& t : p.terms) max_ez = std::max(max_ez, t.ez);
  std::vector<YPoly> zc(max_ez + 1);
  for (const auto& t : p.terms) {
    Rational c = t.coef;
    if (epsilon < 0 && (t.ex % 2) == 1) c = -c;
    std::vector<Rational> mono(t.ey + 1, Rational(0));
    mono[t.ey] = c;
    zc[t.ez] = zc[t.ez] + YPoly(std::move(mono));
  }
  return ZPoly(std::move(zc));
}

namespace {

OmegaFactor ypow(unsigned mult) { return {ypoly_from({Rational(0), Rational(1)}), mult}; }
OmegaFactor lin(long c0, long c1, unsigned mult) {
  return {ypoly_from({Rational(c0), Rational(c1)}), mult};
}
OmegaFactor quad(long c0, long c1, long c2, unsigned mult) {
  return {ypoly_from({Rational(c0), Rational(c1), Rational(c2)}), mult};
}

}  // namespace

const std::vector<OmegaRow>& bifurcation_table() {
  static const std::vector<OmegaRow> table = {
      {"A_i", {ypow(2), quad(-8, 0, 27, 3)}},
      {"A_ii", {ypow(6), quad(-4, 0, 27, 1)}},
      {"B_i", {ypow(4), lin(1, -4, 2), lin(1, -3, 3)}},
      {"B_ii", {ypow(6), lin(2, 3, 2), lin(1, 6, 1)}},
      {"B_iii", {ypow(8), lin(9, 40, 1)}},
      {"B_iv", {ypow(7), lin(9, -4, 2)}},
      {"B_v", {ypow(8), lin(27, 4, 1)}},
      {"B_vi", {ypow(5), lin(3, -64, 1), lin(2, -1, 3)}},
      {"B_vii", {ypow(7), quad(8, 13, 16, 1)}},
      {"H_i", {ypow(2), lin(2, -5, 5), lin(2, 27, 3)}},
      {"H_ii", {ypow(5), lin(4, -27, 1), lin(12, -1, 4)}},
      {"H_iii", {ypow(7), lin(1, -54, 3)}},
      {"H_iv", {ypow(9), lin(4, 27, 1)}},
      {"H_v", {ypow(8), lin(1, 1, 2)}},
      {"H_vi", {ypow(8), quad(3, 14, 27, 1)}},
      {"H_vii", {ypow(9), lin(4, 27, 1)}},
      {"H_viii", {ypow(7), lin(3, 1, 2), lin(32, 27, 1)}},
  };
  return table;
}

OmegaVerdict check_bifurcation_row(const std::string& type) {
  const DivisorPolynomial& poly = divisor_polynomial(type);
  OmegaVerdict v;
  v.type = type;
  v.epsilon = epsilon_for(poly.family);
  v.weights_ok = weighted_homogeneous(poly);

  const ZPoly zp = specialize(poly, v.epsilon);
  v.computed = resultant(zp, zp.derivative());

  const OmegaRow* row = nullptr;
  for (const auto& r : bifurcation_table())
    if (r.type == type) row = &r;
  if (!row) throw std::invalid_argument("no bifurcation row for type " + type);

  YPoly expected = ypoly_from({Rational(1)});
  for (const auto& f : row->factors) expected = expected * f.poly.pow(f.multiplicity);
  v.expected = expected;

  const auto [quotient, remainder] = divmod(v.computed, expected);
  if (remainder.is_zero() && quotient.degree() == 0) {
    v.holds = v.weights_ok;
    v.constant = quotient[0];
  } else {
    v.residual = remainder;
  }
  return v;
}

}  // namespace phmon
