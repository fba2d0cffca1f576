#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace hyperlab {

using i128 = __int128;

// Exact rational with 64-bit storage; every product is formed in 128 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Reduces an integer value into [0, 1).
  Rational frac() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, std::int64_t k);

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const;

 private:
  static Rational from_wide(i128 num, i128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// |a - b| folded onto [0, 1/2]: the circular separation of two angles in turns.
double circular_gap(const Rational& a, const Rational& b) noexcept;

// |a - b| as a double, exact up to the final rounding.
double abs_difference(const Rational& a, const Rational& b) noexcept;

}  // namespace hyperlab
