#pragma once

#include "lahkit/numbers.hpp"
#include "lahkit/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

// Row polynomials of the Lah families and their one-step recurrences. Every
// step takes only the previous polynomial as input, so comparing a step with
// the directly built row is a genuine check of the recurrence.

namespace lahkit {

enum class PolyForm { definition, derivative };

namespace detail {

inline void require_n_at_least(std::size_t n, std::size_t lo, const char* what) {
  if (n < lo) {
    throw ParameterError(std::string(what) + " requires n >= " + std::to_string(lo) +
                         ", got " + std::to_string(n));
  }
}

inline Polynomial row_from(const TriangleKind& kind, std::size_t n, Level s) {
  std::vector<Int> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = value(kind, n, k, s).value();
  return Polynomial(std::move(c));
}

// classical Stirling numbers of the second kind
inline Int stirling2(std::size_t j, std::size_t i) { return stirling2_hl(j, i, Level{1}).value(); }

// sum_{i=lo}^{j} S(j,i) x^i d^i/dx^i p, i.e. the operator x^k -> k^j x^k.
inline Polynomial euler_power(const Polynomial& p, std::size_t j, std::size_t lo = 0) {
  Polynomial out;
  for (std::size_t i = lo; i <= j; ++i) {
    Int w = stirling2(j, i);
    if (w.is_zero()) continue;
    out += w * derivative(p, i).shifted_up(i);
  }
  return out;
}

}  // namespace detail

// L_n^s(x) = sum_k hlah(n,k,s) x^k
inline Polynomial row_poly_hl(std::size_t n, Level s) {
  detail::require_n_at_least(n, 1, "row_poly_hl");
  return detail::row_from(TriangleKind::lah_hl(), n, s);
}

// L_{n+1} = x L_n + sum_{i=1}^{s} S(s,i) x^{i-n} d^i/dx^i (x^n L_n)
inline Polynomial row_poly_hl_step(const Polynomial& ln, std::size_t n, Level s) {
  ln.require_standard("row_poly_hl_step");
  const Polynomial q = ln.shifted_up(n);
  Polynomial out = ln.shifted_up(1);
  for (std::size_t i = 1; i <= s.value(); ++i) {
    Polynomial term = detail::stirling2(s.value(), i) * derivative(q, i);
    out += i >= n ? term.shifted_up(i - n) : term.divided_by_x_power(n - i);
  }
  return out;
}

// Q_n^s(x) = x^n L_n^s(x)
inline Polynomial q_poly(std::size_t n, Level s) { return row_poly_hl(n, s).shifted_up(n); }

// Q_{n+1} = x^2 Q_n + sum_{i=1}^{s} S(s,i) x^{i+1} d^i/dx^i Q_n
inline Polynomial q_step(const Polynomial& qn, std::size_t n, Level s) {
  qn.require_standard("q_step");
  detail::require_n_at_least(n, 1, "q_step");
  return qn.shifted_up(2) + detail::euler_power(qn, s.value(), 1).shifted_up(1);
}

inline Polynomial a_poly(std::size_t n, Level s, PolyForm form) {
  detail::require_n_at_least(n, 1, "a_poly");
  if (form == PolyForm::derivative) return detail::euler_power(q_poly(n, s), s.value());
  std::vector<Int> c(2 * n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[n + k] = (ipow(n + k, s.value()) * lah_higher_level(n, k, s)).value();
  }
  return Polynomial(std::move(c));
}

// sum_k olah(n,k,s) x^k
inline Polynomial lah_order_poly(std::size_t n, Level s) {
  detail::require_n_at_least(n, 1, "lah_order_poly");
  return detail::row_from(TriangleKind::lah_order(), n, s);
}

inline Polynomial b_poly(std::size_t n, Level s, PolyForm form) {
  detail::require_n_at_least(n, 1, "b_poly");
  if (form == PolyForm::derivative) return detail::euler_power(lah_order_poly(n, s), s.value());
  std::vector<Int> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = (ipow(k, s.value()) * lah_order(n, k, s)).value();
  }
  return Polynomial(std::move(c));
}

// P_{n+1} = x P_n + n^s P_n + B_n, with B_n taken in derivative form from P_n.
inline Polynomial lah_order_poly_step(const Polynomial& pn, std::size_t n, Level s) {
  pn.require_standard("lah_order_poly_step");
  detail::require_n_at_least(n, 1, "lah_order_poly_step");
  return pn.shifted_up(1) + ipow(n, s.value()).value() * pn +
         detail::euler_power(pn, s.value());
}

// sum_k lrlah(n,k,s,r) x^k, n >= max(r, 1)
inline Polynomial lr_row_poly(std::size_t n, Level s, std::size_t r) {
  detail::require_n_at_least(n, std::max<std::size_t>(r, 1), "lr_row_poly");
  return detail::row_from(TriangleKind::lr_lah(r), n, s);
}

// L_{n+1} = x L_n + sum_{j=0}^{s} C(s,j) n^{s-j} sum_{i=0}^{j} S(j,i) x^i d^i/dx^i L_n
inline Polynomial lr_row_poly_step(const Polynomial& ln, std::size_t n, Level s) {
  ln.require_standard("lr_row_poly_step");
  const unsigned e = s.value();
  Polynomial out = ln.shifted_up(1);
  for (unsigned j = 0; j <= e; ++j) {
    Int w = (binomial(e, j) * ipow(n, e - j)).value();
    if (w.is_zero()) continue;
    out += w * detail::euler_power(ln, j);
  }
  return out;
}

}  // namespace lahkit
