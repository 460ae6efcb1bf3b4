#pragma once

#include <array>

#include "phmon/quotient_ring.hpp"

namespace phmon {

// 2x2 matrix over a quotient ring, row-major.
class Matrix2 {
 public:
  Matrix2() = default;
  Matrix2(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
      : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Matrix2 identity(const RingPtr& ring) {
    return Matrix2(ring->one(), ring->zero(), ring->zero(), ring->one());
  }

  const FieldElement& at(std::size_t row, std::size_t col) const { return e_[2 * row + col]; }

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    return Matrix2(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2], x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3],
                   x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2], x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3]);
  }

  FieldElement det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  FieldElement trace() const { return e_[0] + e_[3]; }

  Matrix2 inverse() const {
    const FieldElement inv_det = det().inverse();
    return Matrix2(e_[3] * inv_det, -e_[1] * inv_det, -e_[2] * inv_det, e_[0] * inv_det);
  }

  bool is_identity() const {
    return e_[0].is_one() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_one();
  }

  friend bool operator==(const Matrix2& x, const Matrix2& y) { return x.e_ == y.e_; }

  std::string to_string() const {
    return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() +
           ", " + e_[3].to_string() + "]]";
  }

 private:
  std::array<FieldElement, 4> e_;
};

}  // namespace phmon
