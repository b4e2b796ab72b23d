#include "mds/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "mds/errors.hpp"

namespace mds {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw ParseError("expected an integer, got '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw ParseError("expected an integer, got '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) { return -floor(-q); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational falling_factorial(const Rational& x, long i) {
  if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rational out(1);
  for (long k = 0; k < i; ++k) out *= x - Rational(k);
  return out;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::int64_t to_int64(const Integer& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) {
    throw std::overflow_error("integer " + v.get_str() + " does not fit in 64 bits");
  }
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return v.get_si();
}

}  // namespace mds
