#pragma once

#include "lahkit/bigint.hpp"
#include "lahkit/types.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lahkit {

enum class BasisKind { standard, rising, falling };

// Standard powers x^n, or rising / falling factorials with higher level s.
class BasisTag {
 public:
  static BasisTag standard() { return BasisTag{BasisKind::standard, Level{1}}; }
  static BasisTag rising(Level s) { return BasisTag{BasisKind::rising, s}; }
  static BasisTag falling(Level s) { return BasisTag{BasisKind::falling, s}; }

  BasisKind kind() const noexcept { return kind_; }
  bool is_standard() const noexcept { return kind_ == BasisKind::standard; }
  // Only meaningful for rising / falling.
  Level level() const noexcept { return level_; }

  friend bool operator==(const BasisTag& a, const BasisTag& b) {
    if (a.kind_ != b.kind_) return false;
    return a.is_standard() || a.level_ == b.level_;
  }

  // "standard", "rising:s", "falling:s"
  std::string str() const {
    switch (kind_) {
      case BasisKind::standard: return "standard";
      case BasisKind::rising: return "rising:" + std::to_string(level_.value());
      case BasisKind::falling: return "falling:" + std::to_string(level_.value());
    }
    return "?";
  }

  static BasisTag parse(std::string_view text) {
    if (text == "standard") return standard();
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw ParameterError("bad basis name: " + std::string(text));
    }
    auto head = text.substr(0, colon);
    auto tail = text.substr(colon + 1);
    long long s = 0;
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), s);
    if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
      throw ParameterError("bad basis level: " + std::string(text));
    }
    if (head == "rising") return rising(Level{s});
    if (head == "falling") return falling(Level{s});
    throw ParameterError("bad basis name: " + std::string(text));
  }

 private:
  BasisTag(BasisKind k, Level s) : kind_(k), level_(s) {}

  BasisKind kind_;
  Level level_;
};

/**
 * Integer polynomial written in one of the three bases. coeffs()[i] is the
 * coefficient of the basis element of degree i. Trailing zeros are always
 * trimmed, so the zero polynomial has no coefficients and equality is plain
 * coefficient-sequence equality under the same basis.
 */
class Polynomial {
 public:
  Polynomial() : basis_(BasisTag::standard()) {}
  explicit Polynomial(std::vector<Int> coeffs, BasisTag basis = BasisTag::standard())
      : basis_(basis), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial monomial(std::size_t degree, Int c = 1) {
    std::vector<Int> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  // The degree-n element of `basis`, written in that basis.
  static Polynomial basis_element(const BasisTag& basis, std::size_t n) {
    std::vector<Int> v(n + 1);
    v[n] = 1;
    return Polynomial(std::move(v), basis);
  }

  const BasisTag& basis() const noexcept { return basis_; }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int{0}; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial& operator+=(const Polynomial& o) {
    require_same_basis(o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  Polynomial& operator*=(const Int& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
  }
  friend Polynomial operator*(Polynomial p, const Int& c) { return p *= c; }
  friend Polynomial operator*(const Int& c, Polynomial p) { return p *= c; }

  // Product of two standard-basis polynomials.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_standard("multiplication");
    b.require_standard("multiplication");
    if (a.is_zero() || b.is_zero()) return Polynomial{};
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  // Multiply by x^m (standard basis).
  Polynomial shifted_up(std::size_t m) const {
    require_standard("shift");
    if (is_zero()) return *this;
    std::vector<Int> out(m, Int{0});
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  // Exact division by x^m; throws ConsistencyError on a nonzero remainder.
  Polynomial divided_by_x_power(std::size_t m) const {
    require_standard("monomial division");
    for (std::size_t i = 0; i < std::min(m, coeffs_.size()); ++i) {
      if (!coeffs_[i].is_zero()) {
        throw ConsistencyError("inexact division by x^" + std::to_string(m));
      }
    }
    if (m >= coeffs_.size()) return Polynomial{};
    return Polynomial(std::vector<Int>(coeffs_.begin() + static_cast<long>(m), coeffs_.end()));
  }

  void require_standard(const char* what) const {
    if (!basis_.is_standard()) {
      throw ParameterError(std::string(what) + " needs a standard-basis polynomial, got " +
                           basis_.str());
    }
  }

 private:
  void require_same_basis(const Polynomial& o) const {
    if (!(basis_ == o.basis_)) {
      throw ParameterError("basis mismatch: " + basis_.str() + " vs " + o.basis_.str());
    }
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  BasisTag basis_;
  std::vector<Int> coeffs_;
};

enum class FactorialKind { rising, falling };

// Standard-basis expansion of prod_{i=0}^{n-1} (x +- i^s).
inline Polynomial factorial_poly(FactorialKind kind, std::size_t n, Level s) {
  Polynomial p = Polynomial::monomial(0);
  for (std::size_t i = 0; i < n; ++i) {
    Int shift = ipow(i, s.value()).value();
    if (kind == FactorialKind::falling) shift = -shift;
    p = p * Polynomial(std::vector<Int>{shift, Int{1}});
  }
  return p;
}

// Exact value at x. Non-standard bases are evaluated from the product form
// of each basis element, never through a conversion.
inline Int eval(const Polynomial& p, const Int& x) {
  const auto& c = p.coeffs();
  if (p.basis().is_standard()) {
    Int acc{0};
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  const unsigned s = p.basis().level().value();
  const bool rising = p.basis().kind() == BasisKind::rising;
  Int acc{0};
  Int element{1};
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc += c[i] * element;
    const Int step = ipow(i, s).value();
    element *= rising ? Int(x + step) : Int(x - step);
  }
  return acc;
}

// Formal derivative of the given order.
inline Polynomial derivative(const Polynomial& p, std::size_t order) {
  p.require_standard("derivative");
  const auto& c = p.coeffs();
  if (order >= c.size()) return Polynomial{};
  std::vector<Int> out(c.size() - order);
  for (std::size_t i = order; i < c.size(); ++i) {
    Int falling{1};
    for (std::size_t j = 0; j < order; ++j) falling *= i - j;
    out[i - order] = c[i] * falling;
  }
  return Polynomial(std::move(out));
}

// ---- text and JSON forms ------------------------------------------------

inline std::string coeff_list(const Polynomial& p) {
  std::string out = "[";
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += c[i].str();
  }
  return out + "]";
}

// basis=<standard|rising:s|falling:s> coeffs=[c0,c1,...]
inline std::string to_text(const Polynomial& p) {
  return "basis=" + p.basis().str() + " coeffs=" + coeff_list(p);
}

inline std::vector<Int> parse_coeff_list(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParameterError("unterminated coefficient list");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    auto digits = item;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw ParameterError("bad coefficient: '" + std::string(item) + "'");
    }
    out.emplace_back(std::string(item.front() == '+' ? item.substr(1) : item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Polynomial from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string field;
  std::optional<BasisTag> basis;
  std::optional<std::vector<Int>> coeffs;
  while (in >> field) {
    if (field.rfind("basis=", 0) == 0) {
      basis = BasisTag::parse(std::string_view(field).substr(6));
    } else if (field.rfind("coeffs=", 0) == 0) {
      coeffs = parse_coeff_list(std::string_view(field).substr(7));
    } else {
      throw ParameterError("unknown field: " + field);
    }
  }
  if (!coeffs) throw ParameterError("missing coeffs=");
  return Polynomial(std::move(*coeffs), basis.value_or(BasisTag::standard()));
}

// {"basis": "...", "level": s|null, "coeffs": ["c0", ...]}; values are strings.
inline nlohmann::ordered_json to_json(const Polynomial& p) {
  nlohmann::ordered_json j;
  switch (p.basis().kind()) {
    case BasisKind::standard: j["basis"] = "standard"; break;
    case BasisKind::rising: j["basis"] = "rising"; break;
    case BasisKind::falling: j["basis"] = "falling"; break;
  }
  if (p.basis().is_standard()) {
    j["level"] = nullptr;
  } else {
    j["level"] = p.basis().level().value();
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.str());
  j["coeffs"] = std::move(arr);
  return j;
}

inline Polynomial from_json(const nlohmann::ordered_json& j) {
  const std::string name = j.at("basis").get<std::string>();
  BasisTag basis = BasisTag::standard();
  if (name != "standard") {
    const auto& lv = j.at("level");
    if (!lv.is_number_integer()) throw ParameterError("level must be an integer");
    basis = BasisTag::parse(name + ":" + std::to_string(lv.get<long long>()));
  }
  std::vector<Int> coeffs;
  for (const auto& c : j.at("coeffs")) {
    auto parsed = parse_coeff_list(c.get<std::string>());
    if (parsed.size() != 1) throw ParameterError("bad coefficient in JSON");
    coeffs.push_back(std::move(parsed.front()));
  }
  return Polynomial(std::move(coeffs), basis);
}

}  // namespace lahkit
