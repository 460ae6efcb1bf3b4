#include "phmon/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace phmon {

YDivMod divmod(const YPoly& num, const YPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<Rational> rem(num.coeffs());
  const int dd = den.degree();
  const int dn = num.degree();
  if (dn < dd) return {YPoly(), num};
  std::vector<Rational> quo(dn - dd + 1, Rational(0));
  for (int i = dn; i >= dd; --i) {
    if (rem[i] == 0) continue;
    const Rational f = rem[i] / den.leading();
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den[j];
  }
  return {YPoly(std::move(quo)), YPoly(std::move(rem))};
}

YPoly ypoly_from(std::initializer_list<Rational> ascending) {
  return YPoly(std::vector<Rational>(ascending));
}

std::string to_string(const YPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (i == 0 || a != 1) out << a.get_str();
    if (i > 0) {
      if (a != 1) out << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

namespace {

// determinant by cofactor expansion; fine for the 5x5 Sylvester matrices here
YPoly det(std::vector<std::vector<YPoly>>& m, std::vector<std::size_t> cols) {
  const std::size_t row = m.size() - cols.size();
  if (cols.size() == 1) return m[row][cols[0]];
  YPoly out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const YPoly& pivot = m[row][cols[i]];
    if (pivot.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i) rest.push_back(cols[j]);
    const YPoly sub = det(m, std::move(rest));
    out = (i % 2 == 0) ? out + pivot * sub : out - pivot * sub;
  }
  return out;
}

}  // namespace

YPoly resultant(const ZPoly& f, const ZPoly& g) {
  const int m = f.degree();
  const int n = g.degree();
  if (m < 0 && n < 0) throw std::invalid_argument("resultant of two zero polynomials");
  if (m < 0 || n < 0) return YPoly();
  if (m == 0 && n == 0) return ypoly_from({Rational(1)});
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<YPoly>> s(size, std::vector<YPoly>(size, YPoly()));
  // n rows of f's coefficients, descending, then m rows of g's
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[r][r + j] = f[static_cast<std::size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[n + r][r + j] = g[static_cast<std::size_t>(n - j)];
  std::vector<std::size_t> cols(size);
  for (std::size_t i = 0; i < size; ++i) cols[i] = i;
  return det(s, std::move(cols));
}

}  // namespace phmon
