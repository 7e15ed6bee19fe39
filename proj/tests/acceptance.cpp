// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Every comparison is exact.

#include "lahkit/lahkit.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef LAHKIT_GOLDEN_DIR
#error "LAHKIT_GOLDEN_DIR must point at tests/golden"
#endif

using namespace lahkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // <= 0: no limit
  std::function<std::string()> run;  // empty string on success
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Nat classical_lah(std::size_t n, std::size_t k) {
  if (n == 0 && k == 0) return Nat{1};
  if (k == 0 || k > n) return Nat{0};
  return Nat((binomial(n - 1, k - 1) * factorial(n)).value() / factorial(k).value());
}

template <class... Parts>
std::string msg(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string table_reproduction() {
  struct Golden {
    const char* file;
    TriangleKind kind;
    unsigned s;
  };
  const std::vector<Golden> goldens{
      {"lah_hl_s2.tsv", TriangleKind::lah_hl(), 2},       {"lah_hl_s3.tsv", TriangleKind::lah_hl(), 3},
      {"lah_hl_s4.tsv", TriangleKind::lah_hl(), 4},       {"lah_order_s2.tsv", TriangleKind::lah_order(), 2},
      {"lah_order_s3.tsv", TriangleKind::lah_order(), 3}, {"lah_order_s4.tsv", TriangleKind::lah_order(), 4},
  };
  std::size_t entries = 0;
  for (const auto& g : goldens) {
    const std::string expect = read_file(std::string(LAHKIT_GOLDEN_DIR) + "/" + g.file);
    if (expect.empty()) return msg("missing golden file ", g.file);
    const auto t = triangle(g.kind, Level{g.s}, 6);
    std::ostringstream got;
    write_tsv(got, t);
    if (got.str() != expect) return msg(g.file, " differs:\n", got.str());
    for (const auto& row : t.rows) entries += row.size();
  }
  if (entries != 168) return msg("expected 168 entries, compared ", entries);
  return {};
}

std::string mega_values() {
  const std::string hl = lah_higher_level(6, 2, Level{25}).str();
  const std::string ord = lah_order(6, 2, Level{25}).str();
  const std::string hl_expect =
      "12793287638873373780319124433790833727169139966926481069803446896427008000";
  const std::string ord_expect = "19080000046878387911728136488155674014369724428110000";
  if (hl != hl_expect) return msg("hlah(6,2,25) = ", hl);
  if (ord != ord_expect) return msg("olah(6,2,25) = ", ord);
  return {};
}

std::string worked_examples() {
  const Level two{2};
  if (lah_higher_level(4, 3, two) != Nat{56}) return "hlah(4,3,2) != 56";
  if (lah_order(4, 3, two) != Nat{28}) return "olah(4,3,2) != 28";
  if (lah_order_via_stirling(4, 3, two) != Nat{28}) return "Stirling product (4,3,2) != 28";
  if (oracle::oracle_count(TriangleKind::lah_hl(), 4, 3, two) != Nat{56}) return "oracle(4,3,2) != 56";
  const auto p = oracle::enumerate_profiles(4, 3, oracle::BlockWeighting::lists, 0);
  const std::map<std::vector<std::size_t>, Nat> expect{
      {{1, 2, 3}, Nat{6}}, {{1, 2, 4}, Nat{4}}, {{1, 3, 4}, Nat{2}}};
  if (p.entries != expect) return "leader-set profile differs";
  return {};
}

std::string oracle_equivalence() {
  for (unsigned s = 1; s <= 3; ++s) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& kind : {TriangleKind::lah_hl(), TriangleKind::stirling_first_hl(),
                                 TriangleKind::stirling_second_hl()}) {
          if (oracle::oracle_count(kind, n, k, Level{s}) != value(kind, n, k, Level{s})) {
            return msg(kind.name(), " n=", n, " k=", k, " s=", s);
          }
        }
      }
    }
  }
  // (s,r)-Lah numbers are compared on their domain n >= r
  for (std::size_t r = 0; r <= 3; ++r) {
    for (unsigned s = 1; s <= 2; ++s) {
      for (std::size_t n = r; n <= 6; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          if (oracle::oracle_count(TriangleKind::lr_lah(r), n, k, Level{s}) != lr_lah(n, k, Level{s}, r)) {
            return msg("lrlah r=", r, " n=", n, " k=", k, " s=", s);
          }
        }
      }
    }
  }
  return {};
}

std::string polynomial_identity() {
  for (unsigned s = 1; s <= 4; ++s) {
    const Level lv{s};
    for (std::size_t n = 0; n <= 10; ++n) {
      const auto rise = Polynomial::basis_element(BasisTag::rising(lv), n);
      const auto fall = Polynomial::basis_element(BasisTag::falling(lv), n);
      const auto r2f = convert(rise, BasisTag::falling(lv));
      const auto f2r = convert(fall, BasisTag::rising(lv));
      if (r2f.degree() != static_cast<long>(n) || f2r.degree() != static_cast<long>(n)) {
        return msg("degree n=", n, " s=", s);
      }
      for (std::size_t k = 0; k <= n; ++k) {
        if (r2f.coeff(k) != lah_order(n, k, lv).value()) return msg("rising->falling n=", n, " k=", k, " s=", s);
        if (f2r.coeff(k) != signed_value(TriangleKind::lah_order(), n, k, lv)) {
          return msg("falling->rising n=", n, " k=", k, " s=", s);
        }
      }
      for (int x = -3; x <= 3; ++x) {
        if (eval(rise, x) != eval(r2f, x)) return msg("rising eval n=", n, " s=", s, " x=", x);
        if (eval(fall, x) != eval(f2r, x)) return msg("falling eval n=", n, " s=", s, " x=", x);
      }
    }
  }
  return {};
}

std::string matrix_algebra() {
  const std::size_t N = 12;
  for (unsigned s = 1; s <= 4; ++s) {
    const Level lv{s};
    const std::vector<BasisTag> bases{BasisTag::standard(), BasisTag::rising(lv), BasisTag::falling(lv)};
    for (const auto& a : bases) {
      for (const auto& b : bases) {
        if (!(transition_matrix(a, b, N) * transition_matrix(b, a, N)).is_identity()) {
          return msg(a.str(), " -> ", b.str(), " not inverted");
        }
      }
    }
    const auto direct = transition_matrix(BasisTag::rising(lv), BasisTag::falling(lv), N);
    const auto via = transition_matrix(BasisTag::rising(lv), BasisTag::standard(), N) *
                     transition_matrix(BasisTag::standard(), BasisTag::falling(lv), N);
    if (!direct.same_entries(via)) return msg("factorization fails at s=", s);
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        Nat sum;
        for (std::size_t j = k; j <= n; ++j) sum += stirling1_hl(n, j, lv) * stirling2_hl(j, k, lv);
        if (direct.at(n, k) != sum.value()) return msg("entry (", n, ",", k, ") s=", s);
      }
    }
  }
  const std::vector<std::vector<long long>> worked{
      {1, 0, 0, 0, 0, 0, 0},           {0, 1, 0, 0, 0, 0, 0},         {0, 2, 1, 0, 0, 0, 0},
      {0, 10, 10, 1, 0, 0, 0},         {0, 100, 140, 28, 1, 0, 0},    {0, 1700, 2900, 840, 60, 1, 0},
      {0, 44200, 85800, 31460, 3300, 110, 1}};
  const auto m = transition_matrix(BasisTag::rising(Level{2}), BasisTag::falling(Level{2}), 7);
  for (std::size_t n = 0; n < 7; ++n)
    for (std::size_t k = 0; k < 7; ++k)
      if (m.at(n, k) != worked[n][k]) return msg("7x7 entry (", n, ",", k, ")");
  return {};
}

std::string stepper_equivalence() {
  for (unsigned s = 1; s <= 4; ++s) {
    const Level lv{s};
    for (std::size_t n = 1; n <= 8; ++n) {
      if (q_step(q_poly(n, lv), n, lv) != q_poly(n + 1, lv)) return msg("q_step n=", n, " s=", s);
      if (row_poly_hl_step(row_poly_hl(n, lv), n, lv) != row_poly_hl(n + 1, lv)) {
        return msg("row_poly_hl_step n=", n, " s=", s);
      }
      if (lah_order_poly_step(lah_order_poly(n, lv), n, lv) != lah_order_poly(n + 1, lv)) {
        return msg("lah_order_poly_step n=", n, " s=", s);
      }
      if (a_poly(n, lv, PolyForm::definition) != a_poly(n, lv, PolyForm::derivative)) {
        return msg("A forms n=", n, " s=", s);
      }
      if (b_poly(n, lv, PolyForm::definition) != b_poly(n, lv, PolyForm::derivative)) {
        return msg("B forms n=", n, " s=", s);
      }
    }
  }
  return {};
}

std::string connection_theorems() {
  for (unsigned s = 1; s <= 5; ++s) {
    const Level lv{s};
    for (std::size_t n = 1; n <= 10; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        const Nat h = lah_higher_level(n, k, lv);
        const Nat o = lah_order(n, k, lv);
        const Nat c = stirling1_hl(n, k, lv);
        const Nat p = stirling2_hl(n, k, lv);
        if (!(h >= o && o >= c && c >= p)) return msg("chain n=", n, " k=", k, " s=", s);
      }
    }
  }
  for (unsigned s = 1; s <= 6; ++s) {
    for (std::size_t n = 2; n <= 12; ++n) {
      if (ipow(2, s - 1) * lah_order(n, n - 1, Level{s}) != lah_higher_level(n, n - 1, Level{s})) {
        return msg("ratio n=", n, " s=", s);
      }
    }
  }
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const Nat expect = classical_lah(n, k);
      if (lah_higher_level(n, k, Level{1}) != expect || lah_order(n, k, Level{1}) != expect) {
        return msg("s=1 collapse n=", n, " k=", k);
      }
    }
  }
  return {};
}

std::string closed_forms() {
  for (unsigned s = 1; s <= 4; ++s) {
    const Level lv{s};
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const auto& kind : {TriangleKind::lah_hl(), TriangleKind::lah_order()}) {
        if (closed_form(kind, ClosedFormCase::k_eq_1, n, lv) != value(kind, n, 1, lv)) {
          return msg(kind.name(), " k=1 n=", n, " s=", s);
        }
        if (closed_form(kind, ClosedFormCase::k_eq_n_minus_1, n, lv) != value(kind, n, n - 1, lv)) {
          return msg(kind.name(), " k=n-1 n=", n, " s=", s);
        }
      }
      if (closed_form(TriangleKind::lah_hl(), ClosedFormCase::k_eq_1, n, lv) !=
          ipow(factorial(static_cast<unsigned>(n)), s)) {
        return msg("(n!)^s n=", n, " s=", s);
      }
    }
    const Nat both = ipow(2, s + 1) + Nat{2};
    if (lah_order(2, 1, lv) != Nat{2}) return msg("olah(2,1) s=", s);
    if (lah_order(3, 1, lv) != both || lah_order(3, 2, lv) != both) return msg("2^(s+1)+2 s=", s);
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction (168 entries)", 1.0, table_reproduction},
      {2, "mega-values at level/order 25", 1.0, mega_values},
      {3, "worked examples and leader-set profile", 0, worked_examples},
      {4, "oracle equivalence", 60.0, oracle_equivalence},
      {5, "rising/falling polynomial identities", 5.0, polynomial_identity},
      {6, "transition-matrix algebra", 0, matrix_algebra},
      {7, "recurrence-stepper equivalence", 0, stepper_equivalence},
      {8, "inequality chain, ratio identity, s=1 collapse", 0, connection_theorems},
      {9, "closed forms", 0, closed_forms},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    std::string failure = c.run();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (failure.empty() && c.time_limit_s > 0 && secs >= c.time_limit_s) {
      failure = msg("took ", secs, " s, limit ", c.time_limit_s, " s");
    }
    const bool ok = failure.empty();
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << secs * 1000.0
              << " ms)";
    if (!ok) std::cout << ": " << failure;
    std::cout << '\n';
  }
  std::cout << (all_ok ? "all acceptance criteria passed" : "acceptance criteria FAILED") << '\n';
  return all_ok ? 0 : 1;
}
