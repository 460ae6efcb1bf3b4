#pragma once

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace phmon {

using Rational = mpq_class;

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

class NonInvertibleError : public std::runtime_error {
 public:
  explicit NonInvertibleError(const std::string& element)
      : std::runtime_error("element is not invertible: " + element) {}
};

// Element of a quotient ring, kept in canonical normal form: degree in each
// generator strictly below the degree of that generator's defining
// polynomial. Arithmetic is exact.
class FieldElement {
 public:
  FieldElement() = default;  // the zero of no ring; usable only as placeholder

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coordinates() const { return coords_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const Rational& s);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;  // throws NonInvertibleError
  FieldElement pow(long k) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  friend class QuotientRing;
  FieldElement(RingPtr ring, std::vector<Rational> coords)
      : ring_(std::move(ring)), coords_(std::move(coords)) {}

  RingPtr ring_;
  std::vector<Rational> coords_;  // mixed-radix basis, generator 0 fastest
};

// Q[x_1, ..., x_t] modulo one monic defining polynomial per generator, each
// with rational coefficients; the quotient is a field for every ring this
// project instantiates, but inversion checks rather than assumes that.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  // defining_polys[i]: ascending coefficients including the leading 1.
  static RingPtr create(std::vector<std::string> generator_names,
                        std::vector<std::vector<Rational>> defining_polys);

  std::size_t generator_count() const { return names_.size(); }
  std::size_t degree(std::size_t i) const { return defs_[i].size() - 1; }
  std::size_t dimension() const { return dim_; }
  const std::string& generator_name(std::size_t i) const { return names_[i]; }
  const std::vector<Rational>& defining_poly(std::size_t i) const { return defs_[i]; }
  std::string description() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement constant(Rational v) const;
  FieldElement generator(std::size_t i) const;
  FieldElement from_coordinates(std::vector<Rational> coords) const;

  // normal-form product of two coordinate vectors
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;

 private:
  friend class FieldElement;
  QuotientRing() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<Rational>> defs_;
  std::vector<std::size_t> dims_;     // degree per generator
  std::vector<std::size_t> strides_;  // mixed-radix strides
  std::size_t dim_ = 0;
  // powers_[i][m]: coordinates of x_i^m over 1, x_i, .., x_i^{d_i - 1}
  // for m in [0, 2 d_i - 2]
  std::vector<std::vector<std::vector<Rational>>> powers_;
};

}  // namespace phmon
