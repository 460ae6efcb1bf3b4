#include "phmon/quotient_ring.hpp"

#include <algorithm>
#include <sstream>

namespace phmon {

RingPtr QuotientRing::create(std::vector<std::string> generator_names,
                             std::vector<std::vector<Rational>> defining_polys) {
  if (generator_names.size() != defining_polys.size())
    throw std::invalid_argument("one defining polynomial per generator required");
  if (generator_names.empty()) throw std::invalid_argument("ring needs at least one generator");

  auto ring = std::shared_ptr<QuotientRing>(new QuotientRing());
  ring->names_ = std::move(generator_names);
  ring->defs_ = std::move(defining_polys);
  ring->dim_ = 1;
  for (const auto& f : ring->defs_) {
    if (f.size() < 2) throw std::invalid_argument("defining polynomial must have degree >= 1");
    if (f.back() != 1) throw std::invalid_argument("defining polynomial must be monic");
    ring->dims_.push_back(f.size() - 1);
    ring->strides_.push_back(ring->dim_);
    ring->dim_ *= f.size() - 1;
  }

  // power-reduction tables per generator
  for (std::size_t i = 0; i < ring->defs_.size(); ++i) {
    const std::size_t d = ring->dims_[i];
    std::vector<std::vector<Rational>> table;
    std::vector<Rational> cur(d, Rational(0));
    cur[0] = 1;  // x^0
    table.push_back(cur);
    for (std::size_t m = 1; m <= 2 * d - 2; ++m) {
      std::vector<Rational> next(d, Rational(0));
      // multiply by x, then fold the overflow with x^d = -(low part of f)
      Rational carry = cur[d - 1];
      for (std::size_t j = d - 1; j > 0; --j) next[j] = cur[j - 1];
      next[0] = 0;
      if (carry != 0)
        for (std::size_t j = 0; j < d; ++j) next[j] -= carry * ring->defs_[i][j];
      cur = next;
      table.push_back(cur);
    }
    ring->powers_.push_back(std::move(table));
  }
  return ring;
}

std::string QuotientRing::description() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out << ", ";
    out << names_[i] << ": ";
    // print the defining polynomial descending
    bool first = true;
    for (std::size_t j = defs_[i].size(); j-- > 0;) {
      const Rational& c = defs_[i][j];
      if (c == 0) continue;
      const bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      if (first) {
        if (neg) out << '-';
        first = false;
      } else {
        out << (neg ? " - " : " + ");
      }
      if (j == 0 || a != 1) out << a.get_str();
      if (j > 0) {
        if (a != 1) out << '*';
        out << names_[i];
        if (j > 1) out << '^' << j;
      }
    }
    out << " = 0";
  }
  return out.str();
}

FieldElement QuotientRing::zero() const {
  return FieldElement(shared_from_this(), std::vector<Rational>(dim_, Rational(0)));
}

FieldElement QuotientRing::one() const { return constant(Rational(1)); }

FieldElement QuotientRing::constant(Rational v) const {
  std::vector<Rational> c(dim_, Rational(0));
  c[0] = std::move(v);
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement QuotientRing::generator(std::size_t i) const {
  if (i >= names_.size()) throw std::invalid_argument("no such generator");
  std::vector<Rational> c(dim_, Rational(0));
  c[strides_[i]] = 1;
  return FieldElement(shared_from_this(), std::move(c));
}

FieldElement QuotientRing::from_coordinates(std::vector<Rational> coords) const {
  if (coords.size() != dim_) throw std::invalid_argument("coordinate vector has wrong size");
  return FieldElement(shared_from_this(), std::move(coords));
}

std::vector<Rational> QuotientRing::multiply(const std::vector<Rational>& a,
                                             const std::vector<Rational>& b) const {
  const std::size_t t = dims_.size();
  // extended mixed-radix space with degree up to 2 d_i - 2 per generator
  std::vector<std::size_t> ext_dims(t), ext_strides(t);
  std::size_t ext_dim = 1;
  for (std::size_t i = 0; i < t; ++i) {
    ext_dims[i] = 2 * dims_[i] - 1;
    ext_strides[i] = ext_dim;
    ext_dim *= ext_dims[i];
  }
  auto decompose = [&](std::size_t idx, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> e(t);
    for (std::size_t i = 0; i < t; ++i) {
      e[i] = idx % dims[i];
      idx /= dims[i];
    }
    return e;
  };

  std::vector<Rational> ext(ext_dim, Rational(0));
  for (std::size_t ia = 0; ia < dim_; ++ia) {
    if (a[ia] == 0) continue;
    const auto ea = decompose(ia, dims_);
    for (std::size_t ib = 0; ib < dim_; ++ib) {
      if (b[ib] == 0) continue;
      const auto eb = decompose(ib, dims_);
      std::size_t idx = 0;
      for (std::size_t i = 0; i < t; ++i) idx += (ea[i] + eb[i]) * ext_strides[i];
      ext[idx] += a[ia] * b[ib];
    }
  }

  // reduce generator by generator
  for (std::size_t g = 0; g < t; ++g) {
    std::vector<Rational> next(ext_dim, Rational(0));
    for (std::size_t idx = 0; idx < ext_dim; ++idx) {
      if (ext[idx] == 0) continue;
      const std::size_t m = (idx / ext_strides[g]) % ext_dims[g];
      if (m < dims_[g]) {
        next[idx] += ext[idx];
        continue;
      }
      const std::size_t base = idx - m * ext_strides[g];
      const auto& red = powers_[g][m];
      for (std::size_t j = 0; j < dims_[g]; ++j)
        if (red[j] != 0) next[base + j * ext_strides[g]] += ext[idx] * red[j];
    }
    ext = std::move(next);
  }

  // project the reduced extended array onto the normal-form basis
  std::vector<Rational> out(dim_, Rational(0));
  for (std::size_t idx = 0; idx < ext_dim; ++idx) {
    if (ext[idx] == 0) continue;
    const auto e = decompose(idx, ext_dims);
    std::size_t nidx = 0;
    for (std::size_t i = 0; i < t; ++i) nidx += e[i] * strides_[i];
    out[nidx] += ext[idx];
  }
  return out;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (coords_.empty() || coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](const Rational& c) { return c == 0; });
}

namespace {
void require_same_ring(const FieldElement& a, const FieldElement& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("elements of different rings");
}
}  // namespace

FieldElement FieldElement::operator-() const {
  std::vector<Rational> c;
  c.reserve(coords_.size());
  for (const Rational& v : coords_) c.push_back(-v);
  return FieldElement(ring_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_ring(a, b);
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return FieldElement(a.ring_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_ring(a, b);
  std::vector<Rational> c(a.coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return FieldElement(a.ring_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_ring(a, b);
  return FieldElement(a.ring_, a.ring_->multiply(a.coords_, b.coords_));
}

FieldElement operator*(const FieldElement& a, const Rational& s) {
  std::vector<Rational> c;
  c.reserve(a.coords_.size());
  for (const Rational& v : a.coords_) c.push_back(v * s);
  return FieldElement(a.ring_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
  const std::size_t d = ring_->dimension();
  // solve (this * x) = 1 via the regular representation
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> basis(d, Rational(0));
    basis[j] = 1;
    const auto col = ring_->multiply(coords_, basis);
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
  }
  m[0][d] = 1;

  // exact Gauss-Jordan
  for (std::size_t col = 0, row = 0; col < d && row < d; ++col) {
    std::size_t pivot = row;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) throw NonInvertibleError(to_string());
    std::swap(m[pivot], m[row]);
    const Rational p = m[row][col];
    for (std::size_t j = col; j <= d; ++j) m[row][j] /= p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j <= d; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
  return FieldElement(ring_, std::move(x));
}

FieldElement FieldElement::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement out = ring_->one();
  FieldElement base = *this;
  for (unsigned long e = static_cast<unsigned long>(k); e; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_ring(a, b);
  return a.coords_ == b.coords_;
}

std::string FieldElement::to_string() const {
  if (!ring_) return "0";
  std::ostringstream out;
  bool first = true;
  const std::size_t t = ring_->generator_count();
  for (std::size_t idx = 0; idx < coords_.size(); ++idx) {
    const Rational& c = coords_[idx];
    if (c == 0) continue;
    // monomial exponents from the mixed radix index
    std::size_t rest = idx;
    std::string mono;
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t e = rest % ring_->degree(i);
      rest /= ring_->degree(i);
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->generator_name(i);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    const bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mono.empty() || a != 1) out << a.get_str();
    if (!mono.empty()) {
      if (a != 1) out << '*';
      out << mono;
    }
  }
  if (first) return "0";
  return out.str();
}

}  // namespace phmon
