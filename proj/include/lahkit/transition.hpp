#pragma once

#include "lahkit/numbers.hpp"
#include "lahkit/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lahkit {

/**
 * Square change-of-basis matrix. Row n, column k holds the coefficient of
 * the target basis element of degree k in the expansion of the source basis
 * element of degree n, so a coefficient row vector c in `from` maps to
 * c * M in `to`.
 */
class TransitionMatrix {
 public:
  TransitionMatrix(BasisTag from, BasisTag to, std::size_t size)
      : from_(from), to_(to), size_(size), entries_(size * size) {}

  const BasisTag& from() const noexcept { return from_; }
  const BasisTag& to() const noexcept { return to_; }
  std::size_t size() const noexcept { return size_; }

  const Int& at(std::size_t n, std::size_t k) const { return entries_.at(n * size_ + k); }
  Int& at(std::size_t n, std::size_t k) { return entries_.at(n * size_ + k); }

  bool is_identity() const {
    for (std::size_t n = 0; n < size_; ++n) {
      for (std::size_t k = 0; k < size_; ++k) {
        if (at(n, k) != (n == k ? 1 : 0)) return false;
      }
    }
    return true;
  }

  bool is_lower_unitriangular() const {
    for (std::size_t n = 0; n < size_; ++n) {
      if (at(n, n) != 1) return false;
      for (std::size_t k = n + 1; k < size_; ++k) {
        if (!at(n, k).is_zero()) return false;
      }
    }
    return true;
  }

  // Entry-only comparison; basis tags are ignored.
  bool same_entries(const TransitionMatrix& o) const {
    return size_ == o.size_ && entries_ == o.entries_;
  }

  // Composition: (A -> B) * (B -> C) = (A -> C).
  friend TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
    if (!(a.to_ == b.from_) || a.size_ != b.size_) {
      throw ParameterError("cannot compose " + a.from_.str() + "->" + a.to_.str() + " with " +
                           b.from_.str() + "->" + b.to_.str());
    }
    TransitionMatrix out(a.from_, b.to_, a.size_);
    for (std::size_t n = 0; n < a.size_; ++n) {
      for (std::size_t j = 0; j < a.size_; ++j) {
        const Int& x = a.at(n, j);
        if (x.is_zero()) continue;
        for (std::size_t k = 0; k < a.size_; ++k) out.at(n, k) += x * b.at(j, k);
      }
    }
    return out;
  }

 private:
  BasisTag from_;
  BasisTag to_;
  std::size_t size_;
  std::vector<Int> entries_;
};

namespace detail {

inline void require_compatible(const BasisTag& from, const BasisTag& to) {
  if (!from.is_standard() && !to.is_standard() && !(from.level() == to.level())) {
    throw ParameterError("level mismatch between " + from.str() + " and " + to.str() +
                         "; convert through standard first");
  }
}

}  // namespace detail

inline TransitionMatrix transition_matrix(const BasisTag& from, const BasisTag& to,
                                          std::size_t size) {
  detail::require_compatible(from, to);
  TransitionMatrix m(from, to, size);
  if (from == to) {
    for (std::size_t n = 0; n < size; ++n) m.at(n, n) = 1;
    return m;
  }
  const Level s = from.is_standard() ? to.level() : from.level();
  const BasisKind f = from.kind();
  const BasisKind t = to.kind();

  TriangleKind kind = TriangleKind::lah_order();
  bool is_signed = false;
  if (f == BasisKind::rising && t == BasisKind::standard) {
    kind = TriangleKind::stirling_first_hl();
  } else if (f == BasisKind::standard && t == BasisKind::falling) {
    kind = TriangleKind::stirling_second_hl();
  } else if (f == BasisKind::rising && t == BasisKind::falling) {
    kind = TriangleKind::lah_order();
  } else if (f == BasisKind::falling && t == BasisKind::standard) {
    kind = TriangleKind::stirling_first_hl();
    is_signed = true;
  } else if (f == BasisKind::standard && t == BasisKind::rising) {
    kind = TriangleKind::stirling_second_hl();
    is_signed = true;
  } else {
    kind = TriangleKind::lah_order();
    is_signed = true;
  }

  if (size == 0) return m;
  const TriangleTable table = triangle(kind, s, size - 1);
  for (std::size_t n = 0; n < size; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Int v = table.rows[n][k].value();
      if (is_signed && (n + k) % 2 == 1) v = -v;
      m.at(n, k) = std::move(v);
    }
  }
  return m;
}

// Re-expresses p in the target basis.
inline Polynomial convert(const Polynomial& p, const BasisTag& target) {
  if (p.basis() == target) return p;
  detail::require_compatible(p.basis(), target);
  const auto& c = p.coeffs();
  const TransitionMatrix m = transition_matrix(p.basis(), target, c.size());
  std::vector<Int> out(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n].is_zero()) continue;
    for (std::size_t k = 0; k <= n; ++k) out[k] += c[n] * m.at(n, k);
  }
  return Polynomial(std::move(out), target);
}

}  // namespace lahkit
