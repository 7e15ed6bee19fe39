#pragma once

#include "lahkit/bigint.hpp"
#include "lahkit/types.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

namespace lahkit {

using Row = std::vector<Nat>;

// Rows 0..nmax of one triangle; row n holds k = 0..n.
struct TriangleTable {
  TriangleKind kind;
  Level level;
  std::vector<Row> rows;

  // Entry (n, k), zero above the diagonal.
  Nat at(std::size_t n, std::size_t k) const {
    if (k > n) return Nat{};
    return rows.at(n)[k];
  }
};

enum class ClosedFormCase { k_eq_1, k_eq_n_minus_1 };

namespace detail {

// Builds row n from row n-1 (empty span for n == 0).
inline Row next_row(const TriangleKind& kind, unsigned s, std::size_t n, const Row& prev) {
  Row row(n + 1);
  if (kind.family() == Family::lr_lah) {
    const std::size_t r = kind.r();
    if (n == 0) {
      row[0] = Nat{1};
      return row;
    }
    if (n < r) return row;
    if (n == r) {
      row[r] = Nat{1};
      return row;
    }
    for (std::size_t k = std::max<std::size_t>(1, r); k <= n; ++k) {
      Nat v = prev[k - 1];
      if (k < n) v += ipow(n + k - 1, s) * prev[k];
      row[k] = std::move(v);
    }
    return row;
  }

  if (n == 0) {
    row[0] = Nat{1};
    return row;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    Nat v = prev[k - 1];
    if (k < n) {
      Nat weight;
      switch (kind.family()) {
        case Family::stirling_first_hl: weight = ipow(n - 1, s); break;
        case Family::stirling_second_hl: weight = ipow(k, s); break;
        case Family::lah_hl: weight = ipow(n + k - 1, s); break;
        case Family::lah_order: weight = ipow(n - 1, s) + ipow(k, s); break;
        case Family::lr_lah: break;
      }
      v += weight * prev[k];
    }
    row[k] = std::move(v);
  }
  return row;
}

/**
 * Append-only row cache for one (family, s, r) key. Rows are filled strictly
 * in order under an exclusive lock; readers take a shared lock.
 */
class RowCache {
 public:
  RowCache(TriangleKind kind, unsigned s) : kind_(kind), s_(s) {}

  Nat at(std::size_t n, std::size_t k) {
    if (k > n) return Nat{};
    {
      std::shared_lock lock(mu_);
      if (n < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mu_);
    fill_to(n);
    return rows_[n][k];
  }

  std::vector<Row> rows_upto(std::size_t nmax) {
    {
      std::shared_lock lock(mu_);
      if (nmax < rows_.size()) return {rows_.begin(), rows_.begin() + nmax + 1};
    }
    std::unique_lock lock(mu_);
    fill_to(nmax);
    return {rows_.begin(), rows_.begin() + nmax + 1};
  }

 private:
  void fill_to(std::size_t n) {
    static const Row empty;
    while (rows_.size() <= n) {
      const std::size_t next = rows_.size();
      rows_.push_back(next_row(kind_, s_, next, next == 0 ? empty : rows_.back()));
    }
  }

  TriangleKind kind_;
  unsigned s_;
  std::shared_mutex mu_;
  std::vector<Row> rows_;
};

inline RowCache& row_cache(const TriangleKind& kind, Level s) {
  using Key = std::tuple<Family, unsigned, std::size_t>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<RowCache>> caches;

  std::lock_guard lock(mu);
  auto& slot = caches[Key{kind.family(), s.value(), kind.r()}];
  if (!slot) slot = std::make_unique<RowCache>(kind, s.value());
  return *slot;
}

// Sum over 1+r <= j_1 < ... < j_m <= n of prod_i (2 j_i - (i+1))^s, m = n-k.
inline void explicit_tuples(std::size_t n, std::size_t m, unsigned s, std::size_t pos,
                            std::size_t lo, const Nat& prefix, Nat& total) {
  if (pos > m) {
    total += prefix;
    return;
  }
  // leave room for the remaining m - pos tuple entries
  for (std::size_t j = lo; j + (m - pos) <= n; ++j) {
    const std::size_t base = 2 * j - (pos + 1);
    if (base == 0) continue;  // zero factor prunes the branch
    explicit_tuples(n, m, s, pos + 1, j + 1, prefix * ipow(base, s), total);
  }
}

}  // namespace detail

// Value of any family at (n, k); zero for n < k.
inline Nat value(const TriangleKind& kind, std::size_t n, std::size_t k, Level s) {
  return detail::row_cache(kind, s).at(n, k);
}

inline Nat stirling1_hl(std::size_t n, std::size_t k, Level s) {
  return value(TriangleKind::stirling_first_hl(), n, k, s);
}

inline Nat stirling2_hl(std::size_t n, std::size_t k, Level s) {
  return value(TriangleKind::stirling_second_hl(), n, k, s);
}

inline Nat lah_higher_level(std::size_t n, std::size_t k, Level s) {
  return value(TriangleKind::lah_hl(), n, k, s);
}

inline Nat lah_order(std::size_t n, std::size_t k, Level s) {
  return value(TriangleKind::lah_order(), n, k, s);
}

inline Nat lr_lah(std::size_t n, std::size_t k, Level s, std::size_t r) {
  return value(TriangleKind::lr_lah(r), n, k, s);
}

// Lah number of order s as the Stirling product sum_j [[n,j]]_s {j,k}_s.
inline Nat lah_order_via_stirling(std::size_t n, std::size_t k, Level s) {
  Nat total;
  for (std::size_t j = k; j <= n; ++j) total += stirling1_hl(n, j, s) * stirling2_hl(j, k, s);
  return total;
}

// Explicit tuple sum for the (s,r)-Lah numbers; 1 when n == k >= r.
inline Nat lr_lah_explicit(std::size_t n, std::size_t k, Level s, std::size_t r) {
  if (k > n) return Nat{};
  if (n == 0) return Nat{1};
  if (k < r) return Nat{};
  Nat total;
  detail::explicit_tuples(n, n - k, s.value(), 1, r + 1, Nat{1}, total);
  return total;
}

inline Nat lah_hl_explicit(std::size_t n, std::size_t k, Level s) {
  return lr_lah_explicit(n, k, s, 0);
}

// (-1)^(n+k) times the unsigned value; defined for the three families that
// give inverse transition matrices.
inline Int signed_value(const TriangleKind& kind, std::size_t n, std::size_t k, Level s) {
  switch (kind.family()) {
    case Family::stirling_first_hl:
    case Family::stirling_second_hl:
    case Family::lah_order:
      return sign_power(n + k) * value(kind, n, k, s).value();
    default:
      throw ParameterError("no signed variant for kind " + std::string(kind.name()));
  }
}

inline Nat closed_form(const TriangleKind& kind, ClosedFormCase which, std::size_t n, Level s) {
  if (n < 1) throw ParameterError("closed_form requires n >= 1");
  const unsigned e = s.value();
  switch (kind.family()) {
    case Family::lah_hl:
      if (which == ClosedFormCase::k_eq_1) return ipow(factorial(static_cast<unsigned>(n)), e);
      {
        Nat sum;
        for (std::size_t j = 1; j < n; ++j) sum += ipow(j, e);
        return ipow(2, e) * sum;
      }
    case Family::lah_order:
      if (which == ClosedFormCase::k_eq_1) {
        Nat prod{1};
        for (std::size_t i = 1; i <= n; ++i) prod *= ipow(n - i, e) + Nat{1};
        return prod;
      } else {
        Nat sum;
        for (std::size_t j = 1; j < n; ++j) sum += Nat{2} * ipow(j, e);
        return sum;
      }
    default:
      throw ParameterError("no closed form for kind " + std::string(kind.name()));
  }
}

inline TriangleTable triangle(const TriangleKind& kind, Level s, std::size_t nmax) {
  return TriangleTable{kind, s, detail::row_cache(kind, s).rows_upto(nmax)};
}

}  // namespace lahkit
