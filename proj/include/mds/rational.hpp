#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mds {

using Integer = mpz_class;

/// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
  Rational(int v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  // Integer-valued gmpxx expression templates such as a + 1.
  template <typename E>
  Rational(const __gmp_expr<mpz_t, E>& e) : v_(Integer(e)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Accepts "p/q" or an integer literal; no decimal points.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational abs(const Rational& q);

/// x (x-1) ... (x-i+1); the empty product is 1.
Rational falling_factorial(const Rational& x, long i);

std::string to_string(const Integer& v);
Integer parse_integer(std::string_view text);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& v);

}  // namespace mds
