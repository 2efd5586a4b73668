#include "homcsa/scalar.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

#include "homcsa/errors.hpp"

namespace homcsa {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 uabs(i128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  // 64-bit Euclid once both operands fit; the 128-bit modulo is a libcall.
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      std::uint64_t x = std::uint64_t(a), y = std::uint64_t(b);
      while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_small(i128 v) { return v > i128(INT64_MIN) && v <= i128(INT64_MAX); }

// mpz from a signed 128-bit value without going through strings.
mpz_class mpz_from(i128 v) {
  u128 mag = uabs(v);
  mpz_class hi = mpz_class(static_cast<unsigned long>(std::uint64_t(mag >> 64)));
  mpz_class lo = mpz_class(static_cast<unsigned long>(std::uint64_t(mag)));
  mpz_class out = (hi << 64) + lo;
  return v < 0 ? mpz_class(-out) : out;
}

}  // namespace

Scalar::Scalar(std::int64_t value) {
  if (value == INT64_MIN) {
    big_ = std::make_shared<const mpq_class>(mpz_from(i128(value)));
    return;
  }
  num_ = value;
}

Scalar::Scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  *this = from_wide(num, den);
}

Scalar::Scalar(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
    num_ = n.get_si();
    den_ = d.get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Scalar Scalar::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd128(uabs(num), u128(den));
  if (g > 1) {
    num /= i128(g);
    den /= i128(g);
  }
  Scalar out;
  if (fits_small(num) && fits_small(den)) {
    out.num_ = std::int64_t(num);
    out.den_ = std::int64_t(den);
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(mpz_from(num), mpz_from(den));
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  auto bad = [&](const char* why) {
    return InputError("invalid rational \"" + std::string(text) + "\": " + why);
  };
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  std::string_view numText = body, denText;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    numText = body.substr(0, slash);
    denText = body.substr(slash + 1);
    if (!digits_ok(denText)) throw bad("denominator must be digits");
  }
  if (!digits_ok(numText)) throw bad("numerator must be digits");
  mpz_class n(std::string(numText), 10);
  mpz_class d(1);
  if (!denText.empty()) d = mpz_class(std::string(denText), 10);
  if (d == 0) throw bad("zero denominator");
  if (neg) n = -n;
  return Scalar(mpq_class(n, d));
}

std::string Scalar::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

int Scalar::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Scalar Scalar::operator-() const {
  if (big_) return Scalar(mpq_class(-*big_));
  Scalar out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t s;
      if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != INT64_MIN) return Scalar(s);
    }
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    return Scalar::from_wide(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                             i128(a.den_) * b.den_);
  }
  return Scalar(mpq_class(a.to_mpq() + b.to_mpq()));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Scalar();
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t p;
      if (!__builtin_mul_overflow(a.num_, b.num_, &p) && p != INT64_MIN) return Scalar(p);
    }
    return Scalar::from_wide(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  return Scalar(mpq_class(a.to_mpq() * b.to_mpq()));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_) return Scalar::from_wide(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  return Scalar(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;  // canonical: a big value never fits small
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (!a.big_ && !b.big_) return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace homcsa
