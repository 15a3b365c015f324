#include "paramgb/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace paramgb {

namespace {

bool is_decimal(std::string_view digits) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer Integer::parse(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_decimal(digits)) {
    throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
  }
  mpz_class v(std::string(digits), 10);
  if (negative) v = -v;
  return Integer(std::move(v));
}

Integer operator/(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Integer(std::move(q));
}

Integer operator%(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  mpz_class r;
  mpz_tdiv_r(r.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Integer(std::move(r));
}

Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(g));
}

Integer lcm(const Integer& a, const Integer& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Integer(std::move(l));
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

Rational Rational::normalize(const Integer& n, const Integer& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  mpq_class q(n.raw(), d.raw());
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  auto den = text.substr(slash + 1);
  if (!is_decimal(den)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  return normalize(Integer::parse(text.substr(0, slash)), Integer::parse(den));
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace paramgb
