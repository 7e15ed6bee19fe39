#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lahkit {

// Bad caller-supplied parameter (level, kind, basis mismatch, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An identity that must hold exactly did not (e.g. inexact monomial division).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The level / order s >= 1.
class Level {
 public:
  explicit Level(long long s) {
    if (s <= 0) {
      throw ParameterError("level must be >= 1, got " + std::to_string(s));
    }
    s_ = static_cast<unsigned>(s);
  }

  unsigned value() const noexcept { return s_; }
  friend bool operator==(Level, Level) = default;
  friend auto operator<=>(Level, Level) = default;

 private:
  unsigned s_ = 1;
};

enum class Family {
  stirling_first_hl,
  stirling_second_hl,
  lah_hl,
  lah_order,
  lr_lah,
};

/**
 * One of the five number families. Only the (s,r)-Lah family carries the
 * extra restriction parameter r (elements 1..r in distinct lists).
 */
class TriangleKind {
 public:
  static TriangleKind stirling_first_hl() { return TriangleKind{Family::stirling_first_hl, 0}; }
  static TriangleKind stirling_second_hl() { return TriangleKind{Family::stirling_second_hl, 0}; }
  static TriangleKind lah_hl() { return TriangleKind{Family::lah_hl, 0}; }
  static TriangleKind lah_order() { return TriangleKind{Family::lah_order, 0}; }
  static TriangleKind lr_lah(std::size_t r) { return TriangleKind{Family::lr_lah, r}; }

  Family family() const noexcept { return family_; }
  std::size_t r() const noexcept { return r_; }

  friend bool operator==(const TriangleKind&, const TriangleKind&) = default;

  // Short CLI name: stirling1, stirling2, hlah, olah, lrlah.
  std::string_view name() const noexcept {
    switch (family_) {
      case Family::stirling_first_hl: return "stirling1";
      case Family::stirling_second_hl: return "stirling2";
      case Family::lah_hl: return "hlah";
      case Family::lah_order: return "olah";
      case Family::lr_lah: return "lrlah";
    }
    return "?";
  }

 private:
  TriangleKind(Family f, std::size_t r) : family_(f), r_(r) {}

  Family family_;
  std::size_t r_;
};

}  // namespace lahkit
