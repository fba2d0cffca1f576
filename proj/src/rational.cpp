#include "hyperlab/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hyperlab {
namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || -num > kMax || den > kMax) {
    throw std::overflow_error("Rational: value exceeds 64-bit storage");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::frac() const {
  std::int64_t n = num_ % den_;
  if (n < 0) n += den_;
  return from_wide(n, den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                             static_cast<i128>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, std::int64_t k) {
  return Rational::from_wide(static_cast<i128>(a.num_) * k, a.den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double abs_difference(const Rational& a, const Rational& b) noexcept {
  i128 num = static_cast<i128>(a.num()) * b.den() - static_cast<i128>(b.num()) * a.den();
  if (num < 0) num = -num;
  const i128 den = static_cast<i128>(a.den()) * b.den();
  return static_cast<double>(num) / static_cast<double>(den);
}

double circular_gap(const Rational& a, const Rational& b) noexcept {
  i128 num = static_cast<i128>(a.num()) * b.den() - static_cast<i128>(b.num()) * a.den();
  if (num < 0) num = -num;
  const i128 den = static_cast<i128>(a.den()) * b.den();
  // both angles lie in [0,1), so num < den
  if (2 * num > den) num = den - num;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace hyperlab
