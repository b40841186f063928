#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace vpg {

/// Exact non-negative-denominator fraction. Used for the grid step and for
/// approximation parameters, where floating point would break guarantees.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Accepts "a" or "a/b" with optional leading minus sign.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Smallest integer >= q.
std::int64_t ceil(const Rational& q);
/// Largest integer <= q.
std::int64_t floor(const Rational& q);

}  // namespace vpg
