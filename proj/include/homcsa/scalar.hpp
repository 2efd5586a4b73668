#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace homcsa {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Values that fit in a pair of 64-bit integers are stored inline; anything
/// larger spills to a shared, immutable GMP rational. The representation is
/// canonical in both directions: a big value that fits is always demoted, so
/// equality is plain structural comparison.
class Scalar {
 public:
  Scalar() = default;
  Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(const mpq_class& value);

  /// Accepts `[+-]digits` or `[+-]digits/digits`. Non-canonical input such as
  /// "2/4" is normalized. Throws InputError on syntax errors or zero
  /// denominators.
  static Scalar parse(std::string_view text);

  std::string to_string() const;
  mpq_class to_mpq() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_small() const { return !big_; }
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws std::domain_error on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  static Scalar from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace homcsa
