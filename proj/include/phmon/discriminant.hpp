#pragma once

#include <string>
#include <vector>

#include "phmon/polynomial.hpp"

namespace phmon {

struct TrivariateTerm {
  Rational coef;
  unsigned ex, ey, ez;
};

// One divisor's defining polynomial in x, y, z, weighted homogeneous for
// its family's weights.
struct DivisorPolynomial {
  std::string type;
  char family;  // 'A', 'B' or 'H'
  std::vector<TrivariateTerm> terms;
};

struct Weights {
  unsigned x, y, z, total;
};

Weights family_weights(char family);
bool weighted_homogeneous(const DivisorPolynomial& p);

// The seventeen defining polynomials, parsed from the shipped data file.
// Loading aborts if any entry fails the weight audit.
const std::vector<DivisorPolynomial>& divisor_polynomials();
const DivisorPolynomial& divisor_polynomial(const std::string& type);

// x := epsilon, viewed as a cubic in z with coefficients in Q[y].
// epsilon is -1 for the A family and +1 for B and H.
int epsilon_for(char family);
ZPoly specialize(const DivisorPolynomial& p, int epsilon);

struct OmegaFactor {
  YPoly poly;
  unsigned multiplicity;
};

// Expected factored form of the bifurcation polynomial
// omega(eps, y) = Res_z(Delta, dDelta/dz), up to a nonzero constant.
struct OmegaRow {
  std::string type;
  std::vector<OmegaFactor> factors;
};

const std::vector<OmegaRow>& bifurcation_table();

struct OmegaVerdict {
  std::string type;
  int epsilon = 0;
  bool weights_ok = false;
  bool holds = false;
  Rational constant;  // computed = constant * expected, when holds
  YPoly computed;
  YPoly expected;
  YPoly residual;  // nonzero remainder when the division fails
};

OmegaVerdict check_bifurcation_row(const std::string& type);

}  // namespace phmon
