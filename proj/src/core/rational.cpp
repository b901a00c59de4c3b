#include "betlogic/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

#include "betlogic/error.hpp"

namespace betlogic {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](std::size_t at) -> Rational {
    throw SyntaxError(at, {"rational"}, std::string(text));
  };
  if (i < text.size() && text[i] == '-') ++i;
  const std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail(i);
  mpz_class num(std::string(text.substr(0, i)), 10);
  mpz_class den = 1;
  if (i < text.size()) {
    if (text[i] != '/') return fail(i);
    ++i;
    const std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return fail(i);
    den = mpz_class(std::string(text.substr(den_begin)), 10);
    if (den == 0) return fail(den_begin);
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::string Rational::fraction_str() const { return numerator() + "/" + denominator(); }

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace betlogic
