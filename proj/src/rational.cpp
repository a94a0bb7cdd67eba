#include "psp/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>

#include "psp/errors.hpp"

namespace psp {
namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.sign() == 0) throw PreconditionError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  const std::string_view int_part = body.substr(0, dot);
  const std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty()) {
    throw ParseError(0, "not a number: '" + std::string(text) + "'");
  }
  if (!all_digits(int_part) || !all_digits(frac_part)) {
    throw ParseError(0, "not a decimal number: '" + std::string(text) + "'");
  }
  std::string digits(int_part);
  digits += frac_part;
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  if (negative) num = -num;
  mpq_class q(num, pow10(frac_part.size()));
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);

  std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) {
    throw ParseError(0, "not a fraction: '" + std::string(text) + "'");
  }
  mpz_class n{std::string(num), 10};
  const mpz_class d{std::string(den), 10};
  if (d == 0) throw ParseError(0, "zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal_or_fraction() const {
  mpz_class den = value_.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return str();

  const unsigned long places = std::max(twos, fives);
  const mpz_class scaled = value_.get_num() * pow10(places) / value_.get_den();
  if (places == 0) return scaled.get_str();

  const bool negative = scaled < 0;
  std::string digits = mpz_class(abs(scaled)).get_str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

std::string Rational::to_decimal(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, to_double());
  return buf;
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) +
         mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace psp
