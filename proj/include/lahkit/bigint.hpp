#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lahkit {

// Signed arbitrary-precision integer. Zero has no sign.
using Int = boost::multiprecision::cpp_int;

/**
 * Arbitrary-precision nonnegative integer.
 *
 * Thin value wrapper over Int that keeps the magnitude >= 0. Only the
 * operations the triangle recurrences need are exposed: addition,
 * multiplication, comparison and decimal conversion.
 */
class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  explicit Nat(const Int& v) : v_(v) {
    if (v_ < 0) throw std::domain_error("Nat: negative value " + v_.str());
  }

  static Nat from_string(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("Nat: empty string");
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Nat: not a decimal numeral: " +
                                    std::string(digits));
      }
    }
    return Nat(Int(std::string(digits)));
  }

  const Int& value() const noexcept { return v_; }
  Int to_int() const { return v_; }
  bool is_zero() const noexcept { return v_.is_zero(); }
  std::string str() const { return v_.str(); }

  Nat& operator+=(const Nat& o) {
    v_ += o.v_;
    return *this;
  }
  Nat& operator*=(const Nat& o) {
    v_ *= o.v_;
    return *this;
  }
  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    int c = a.v_.compare(b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) {
    return os << n.v_.str();
  }

 private:
  Int v_{0};
};

// base^exp with 0^0 = 1 and 0^e = 0 for e >= 1.
inline Nat ipow(const Nat& base, unsigned exp) {
  Nat result{1};
  Nat b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp != 0) b *= b;
  }
  return result;
}

inline Nat ipow(std::uint64_t base, unsigned exp) { return ipow(Nat{base}, exp); }

inline Nat factorial(unsigned n) {
  Nat f{1};
  for (unsigned i = 2; i <= n; ++i) f *= Nat{i};
  return f;
}

inline Nat binomial(unsigned n, unsigned k) {
  if (k > n) return Nat{};
  Int c{1};
  for (unsigned i = 0; i < k; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return Nat(c);
}

// (-1)^e
inline Int sign_power(std::size_t e) { return (e % 2 == 0) ? Int{1} : Int{-1}; }

}  // namespace lahkit
