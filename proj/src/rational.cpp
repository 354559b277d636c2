#include "theta/rational.hpp"

#include "theta/errors.hpp"

namespace theta {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw UsageError("not a rational number: " + text);
  }
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  BigInt num = numerator(value), den = denominator(value);
  BigInt rn = sqrt(num), rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace theta
