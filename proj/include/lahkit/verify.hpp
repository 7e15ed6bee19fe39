#pragma once

#include "lahkit/numbers.hpp"
#include "lahkit/oracle.hpp"
#include "lahkit/polynomial.hpp"
#include "lahkit/recurrences.hpp"
#include "lahkit/transition.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Invariant suites run by `lahkit verify`. A check returns the first
// counterexample it finds, or nothing when it holds on the whole range.

namespace lahkit::verify {

using Outcome = std::optional<std::string>;

struct Check {
  std::string name;
  std::function<Outcome()> run;
};

struct Result {
  std::string name;
  Outcome failure;
};

struct Bounds {
  std::size_t nmax = 6;
  unsigned smax = 3;
};

namespace detail {

template <class... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

inline std::string str(const Polynomial& p) { return to_text(p); }

inline std::array<BasisTag, 3> bases(Level s) {
  return {BasisTag::standard(), BasisTag::rising(s), BasisTag::falling(s)};
}

}  // namespace detail

inline std::vector<Check> oracle_checks(Bounds b) {
  std::vector<Check> out;
  const std::array<TriangleKind, 3> kinds{TriangleKind::lah_hl(), TriangleKind::stirling_first_hl(),
                                          TriangleKind::stirling_second_hl()};
  for (const auto& kind : kinds) {
    out.push_back({"oracle." + std::string(kind.name()), [b, kind]() -> Outcome {
                     for (unsigned s = 1; s <= b.smax; ++s) {
                       for (std::size_t n = 0; n <= b.nmax; ++n) {
                         for (std::size_t k = 0; k <= n; ++k) {
                           Nat o = oracle::oracle_count(kind, n, k, Level{s});
                           Nat v = value(kind, n, k, Level{s});
                           if (o != v) {
                             return detail::describe("n=", n, " k=", k, " s=", s, ": oracle ", o,
                                                     " != recurrence ", v);
                           }
                         }
                       }
                     }
                     return std::nullopt;
                   }});
  }
  out.push_back({"oracle.lrlah", [b]() -> Outcome {
                   for (std::size_t r = 0; r <= 3; ++r) {
                     for (unsigned s = 1; s <= b.smax; ++s) {
                       for (std::size_t n = r; n <= b.nmax; ++n) {
                         for (std::size_t k = 0; k <= n; ++k) {
                           Nat o = oracle::oracle_count(TriangleKind::lr_lah(r), n, k, Level{s});
                           Nat v = lr_lah(n, k, Level{s}, r);
                           if (o != v) {
                             return detail::describe("r=", r, " n=", n, " k=", k, " s=", s,
                                                     ": oracle ", o, " != recurrence ", v);
                           }
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"oracle.classical-lah", [b]() -> Outcome {
                   for (std::size_t n = 0; n <= b.nmax; ++n) {
                     for (std::size_t k = 0; k <= n; ++k) {
                       Nat expect = (n == 0) ? Nat{1}
                                    : (k == 0)
                                        ? Nat{0}
                                        : Nat((binomial(n - 1, k - 1) * factorial(n)).value() /
                                              factorial(k).value());
                       Nat got = oracle::classic_count(n, k, oracle::BlockWeighting::lists);
                       if (got != expect) {
                         return detail::describe("n=", n, " k=", k, ": ", got, " != ", expect);
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"oracle.profile-keys", [b]() -> Outcome {
                   for (std::size_t n = 1; n <= b.nmax; ++n) {
                     for (std::size_t k = 1; k <= n; ++k) {
                       auto p = oracle::enumerate_profiles(n, k, oracle::BlockWeighting::lists, 0);
                       for (const auto& [key, g] : p.entries) {
                         if (key.size() != k || key.front() != 1) {
                           return detail::describe("n=", n, " k=", k, ": bad leader set");
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  return out;
}

inline std::vector<Check> identity_checks(Bounds b) {
  std::vector<Check> out;
  out.push_back({"identities.order-via-stirling", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     for (std::size_t n = 0; n <= b.nmax; ++n) {
                       for (std::size_t k = 0; k <= n; ++k) {
                         if (lah_order(n, k, Level{s}) != lah_order_via_stirling(n, k, Level{s})) {
                           return detail::describe("n=", n, " k=", k, " s=", s);
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.explicit-formula", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     for (std::size_t n = 0; n <= b.nmax; ++n) {
                       for (std::size_t k = 0; k <= n; ++k) {
                         if (lah_hl_explicit(n, k, Level{s}) != lah_higher_level(n, k, Level{s})) {
                           return detail::describe("n=", n, " k=", k, " s=", s);
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.lr-reduction", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     for (std::size_t n = 0; n <= b.nmax; ++n) {
                       for (std::size_t k = 0; k <= n; ++k) {
                         Nat h = lah_higher_level(n, k, Level{s});
                         if (lr_lah(n, k, Level{s}, 0) != h || lr_lah(n, k, Level{s}, 1) != h) {
                           return detail::describe("n=", n, " k=", k, " s=", s);
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.rising-falling", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     for (std::size_t n = 0; n <= b.nmax; ++n) {
                       auto rise = Polynomial::basis_element(BasisTag::rising(lv), n);
                       auto fall = Polynomial::basis_element(BasisTag::falling(lv), n);
                       auto r2f = convert(rise, BasisTag::falling(lv));
                       auto f2r = convert(fall, BasisTag::rising(lv));
                       for (std::size_t k = 0; k <= n; ++k) {
                         if (r2f.coeff(k) != lah_order(n, k, lv).value() ||
                             f2r.coeff(k) != signed_value(TriangleKind::lah_order(), n, k, lv)) {
                           return detail::describe("n=", n, " k=", k, " s=", s);
                         }
                       }
                       for (int x = -3; x <= 3; ++x) {
                         if (eval(rise, x) != eval(r2f, x) || eval(fall, x) != eval(f2r, x)) {
                           return detail::describe("n=", n, " s=", s, " x=", x, ": eval mismatch");
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.matrix-inverse", [b]() -> Outcome {
                   const std::size_t size = b.nmax + 1;
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     for (const auto& x : detail::bases(Level{s})) {
                       for (const auto& y : detail::bases(Level{s})) {
                         auto prod = transition_matrix(x, y, size) * transition_matrix(y, x, size);
                         if (!prod.is_identity()) {
                           return detail::describe(x.str(), " -> ", y.str(), " N=", size);
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.matrix-factorization", [b]() -> Outcome {
                   const std::size_t size = b.nmax + 1;
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     auto direct = transition_matrix(BasisTag::rising(lv), BasisTag::falling(lv), size);
                     auto via = transition_matrix(BasisTag::rising(lv), BasisTag::standard(), size) *
                                transition_matrix(BasisTag::standard(), BasisTag::falling(lv), size);
                     if (!direct.same_entries(via)) return detail::describe("s=", s, " N=", size);
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.factorial-expansions", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     for (std::size_t n = 0; n <= b.nmax; ++n) {
                       auto rise = factorial_poly(FactorialKind::rising, n, lv);
                       for (std::size_t k = 0; k <= n; ++k) {
                         if (rise.coeff(k) != stirling1_hl(n, k, lv).value()) {
                           return detail::describe("rising n=", n, " k=", k, " s=", s);
                         }
                       }
                       Polynomial power;
                       for (std::size_t k = 0; k <= n; ++k) {
                         power += stirling2_hl(n, k, lv).value() *
                                  factorial_poly(FactorialKind::falling, k, lv);
                       }
                       if (power != Polynomial::monomial(n)) {
                         return detail::describe("x^", n, " s=", s, ": ", detail::str(power));
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.polynomial-steps", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     for (std::size_t n = 1; n <= b.nmax; ++n) {
                       if (q_step(q_poly(n, lv), n, lv) != q_poly(n + 1, lv)) {
                         return detail::describe("q_step n=", n, " s=", s);
                       }
                       if (row_poly_hl_step(row_poly_hl(n, lv), n, lv) != row_poly_hl(n + 1, lv)) {
                         return detail::describe("row_poly_hl_step n=", n, " s=", s);
                       }
                       if (lah_order_poly_step(lah_order_poly(n, lv), n, lv) !=
                           lah_order_poly(n + 1, lv)) {
                         return detail::describe("lah_order_poly_step n=", n, " s=", s);
                       }
                       if (a_poly(n, lv, PolyForm::definition) != a_poly(n, lv, PolyForm::derivative)) {
                         return detail::describe("a_poly n=", n, " s=", s);
                       }
                       if (b_poly(n, lv, PolyForm::definition) != b_poly(n, lv, PolyForm::derivative)) {
                         return detail::describe("b_poly n=", n, " s=", s);
                       }
                       for (std::size_t r = 0; r <= std::min<std::size_t>(n, 3); ++r) {
                         if (lr_row_poly_step(lr_row_poly(std::max<std::size_t>(n, 1), lv, r), n, lv) !=
                             lr_row_poly(n + 1, lv, r)) {
                           return detail::describe("lr_row_poly_step n=", n, " s=", s, " r=", r);
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"identities.unitriangular", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     for (const auto& kind :
                          {TriangleKind::stirling_first_hl(), TriangleKind::stirling_second_hl(),
                           TriangleKind::lah_hl(), TriangleKind::lah_order()}) {
                       auto t = triangle(kind, lv, b.nmax);
                       for (std::size_t n = 0; n <= b.nmax; ++n) {
                         if (t.at(n, n) != Nat{1} || (n > 0 && !t.at(n, 0).is_zero())) {
                           return detail::describe(kind.name(), " n=", n, " s=", s);
                         }
                       }
                     }
                     for (const auto& x : detail::bases(lv)) {
                       for (const auto& y : detail::bases(lv)) {
                         if (!transition_matrix(x, y, b.nmax + 1).is_lower_unitriangular()) {
                           return detail::describe(x.str(), " -> ", y.str());
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  return out;
}

inline std::vector<Check> inequality_checks(Bounds b) {
  std::vector<Check> out;
  out.push_back({"inequalities.chain", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     for (std::size_t n = 1; n <= b.nmax; ++n) {
                       for (std::size_t k = 1; k <= n; ++k) {
                         Nat h = lah_higher_level(n, k, lv);
                         Nat o = lah_order(n, k, lv);
                         Nat c = stirling1_hl(n, k, lv);
                         Nat p = stirling2_hl(n, k, lv);
                         if (!(h >= o && o >= c && c >= p)) {
                           return detail::describe("n=", n, " k=", k, " s=", s, ": ", h, ", ", o,
                                                   ", ", c, ", ", p);
                         }
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"inequalities.ratio", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     for (std::size_t n = 2; n <= b.nmax; ++n) {
                       if (ipow(2, s - 1) * lah_order(n, n - 1, lv) != lah_higher_level(n, n - 1, lv)) {
                         return detail::describe("n=", n, " s=", s);
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  out.push_back({"inequalities.level-one-collapse", [b]() -> Outcome {
                   const Level one{1};
                   for (std::size_t n = 0; n <= b.nmax; ++n) {
                     for (std::size_t k = 0; k <= n; ++k) {
                       Nat classical = (n == 0) ? Nat{1}
                                       : (k == 0)
                                           ? Nat{0}
                                           : Nat((binomial(n - 1, k - 1) * factorial(n)).value() /
                                                 factorial(k).value());
                       if (lah_higher_level(n, k, one) != classical || lah_order(n, k, one) != classical) {
                         return detail::describe("n=", n, " k=", k);
                       }
                     }
                   }
                   return std::nullopt;
                 }});
  return out;
}

inline std::vector<Check> closed_form_checks(Bounds b) {
  std::vector<Check> out;
  for (const auto& kind : {TriangleKind::lah_hl(), TriangleKind::lah_order()}) {
    out.push_back({"closed-forms." + std::string(kind.name()), [b, kind]() -> Outcome {
                     for (unsigned s = 1; s <= b.smax; ++s) {
                       const Level lv{s};
                       for (std::size_t n = 1; n <= b.nmax; ++n) {
                         if (closed_form(kind, ClosedFormCase::k_eq_1, n, lv) != value(kind, n, 1, lv)) {
                           return detail::describe("k=1 n=", n, " s=", s);
                         }
                         if (closed_form(kind, ClosedFormCase::k_eq_n_minus_1, n, lv) !=
                             value(kind, n, n - 1, lv)) {
                           return detail::describe("k=n-1 n=", n, " s=", s);
                         }
                       }
                     }
                     return std::nullopt;
                   }});
  }
  out.push_back({"closed-forms.small-order-cases", [b]() -> Outcome {
                   for (unsigned s = 1; s <= b.smax; ++s) {
                     const Level lv{s};
                     Nat both = ipow(2, s + 1) + Nat{2};
                     if (b.nmax >= 2 && lah_order(2, 1, lv) != Nat{2}) return detail::describe("(2,1) s=", s);
                     if (b.nmax >= 3 && (lah_order(3, 1, lv) != both || lah_order(3, 2, lv) != both)) {
                       return detail::describe("(3,1)/(3,2) s=", s);
                     }
                   }
                   return std::nullopt;
                 }});
  return out;
}

inline const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"oracle", "identities", "inequalities",
                                                   "closed-forms", "all"};
  return names;
}

// Checks of the named suite, sorted by name.
inline std::vector<Check> suite(std::string_view name, Bounds b) {
  std::vector<Check> out;
  auto append = [&](std::vector<Check> more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  const bool all = name == "all";
  if (all || name == "oracle") append(oracle_checks(b));
  if (all || name == "identities") append(identity_checks(b));
  if (all || name == "inequalities") append(inequality_checks(b));
  if (all || name == "closed-forms") append(closed_form_checks(b));
  if (out.empty() && !all) throw ParameterError("unknown suite: " + std::string(name));
  std::sort(out.begin(), out.end(), [](const Check& x, const Check& y) { return x.name < y.name; });
  return out;
}

inline std::vector<Result> run(const std::vector<Check>& checks) {
  std::vector<Result> results;
  results.reserve(checks.size());
  for (const auto& c : checks) results.push_back({c.name, c.run()});
  return results;
}

// One PASS/FAIL line per check; returns true iff all passed.
inline bool report(std::ostream& os, const std::vector<Result>& results) {
  bool ok = true;
  for (const auto& r : results) {
    if (r.failure) {
      ok = false;
      os << "FAIL " << r.name << ": " << *r.failure << '\n';
    } else {
      os << "PASS " << r.name << '\n';
    }
  }
  return ok;
}

}  // namespace lahkit::verify
