#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace phmon {

using Rational = mpq_class;

// Dense univariate polynomial, coefficients ascending. The coefficient type
// is either Rational or another UniPoly (for polynomials in z over Q[y]).
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(T v) { return UniPoly(std::vector<T>{std::move(v)}); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& leading() const { return c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<T> out(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] - b.c_[i];
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
  }
  UniPoly operator-() const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const T& v : c_) out.push_back(T{} - v);
    return UniPoly(std::move(out));
  }
  friend UniPoly operator*(const UniPoly& a, const Rational& s) {
    std::vector<T> out;
    out.reserve(a.c_.size());
    for (const T& v : a.c_) out.push_back(v * s);
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<T> out;
    out.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * Rational(static_cast<long>(i)));
    return UniPoly(std::move(out));
  }

  UniPoly pow(unsigned k) const {
    UniPoly out(std::vector<T>{unit()});
    UniPoly base = *this;
    for (; k; k >>= 1) {
      if (k & 1) out = out * base;
      base = base * base;
    }
    return out;
  }

 private:
  static T unit() {
    if constexpr (std::is_same_v<T, Rational>) return Rational(1);
    else return T::constant(Rational(1));
  }
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }
  std::vector<T> c_;
};

using YPoly = UniPoly<Rational>;           // polynomials in y over Q
using ZPoly = UniPoly<YPoly>;              // polynomials in z over Q[y]

// Exact division with remainder over Q (field coefficients).
struct YDivMod {
  YPoly quotient;
  YPoly remainder;
};
YDivMod divmod(const YPoly& num, const YPoly& den);

YPoly ypoly_from(std::initializer_list<Rational> ascending);
std::string to_string(const YPoly& p, const std::string& var = "y");

// Resultant of f and g as the determinant of their Sylvester matrix: the
// first deg(g) rows carry f's coefficients (descending, shifted), the next
// deg(f) rows carry g's.
YPoly resultant(const ZPoly& f, const ZPoly& g);

}  // namespace phmon
