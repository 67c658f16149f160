#include "core/rational.hpp"

#include <cctype>

#include "core/error.hpp"

namespace ugfpc {
namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(ErrorKind::Parse, "not a rational: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::Parse, "not a rational: '" + std::string(whole) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::Domain, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

BigInt floor(const Rational& value) {
  BigInt num = numerator_of(value), den = denominator_of(value);
  BigInt q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

BigInt ceil(const Rational& value) {
  return -floor(Rational(-value));
}

BigInt pow_int(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace ugfpc
