#include "naphopf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace naphopf {

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  if (!is_integer_literal(num_part)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer den = 1;
  if (slash != std::string_view::npos) {
    const auto den_part = text.substr(slash + 1);
    if (!is_integer_literal(den_part)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    den = parse_integer(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Rational result(parse_integer(num_part), den);
  result.canonicalize();
  return result;
}

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational result(numerator, denominator);
  result.canonicalize();
  return result;
}

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

}  // namespace naphopf
