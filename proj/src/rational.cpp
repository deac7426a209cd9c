#include "revlex/rational.hpp"

#include <cctype>
#include <string>

#include "revlex/error.hpp"

namespace revlex {

std::string to_string(const Rational& value) {
  Rational reduced(value);
  reduced.canonicalize();
  return reduced.get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) throw InputError("negative decimal digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt num = abs(value.get_num()) * scale * 2 + value.get_den();
  BigInt den = value.get_den() * 2;
  BigInt scaled = num / den;  // round half away from zero

  std::string body = scaled.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(value) < 0 && scaled != 0 ? "-" : "") + body;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw InputError("empty rational");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto frac_len = s.size() - dot - 1;
    if (frac_len == 0 || s.find('/') != std::string::npos) {
      throw InputError("malformed decimal '" + s + "'");
    }
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw InputError("malformed decimal '" + s + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational result(num, den);
    result.canonicalize();
    return result;
  }

  Rational result;
  if (s.front() == '+') s.erase(0, 1);
  if (result.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
  if (result.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  result.canonicalize();
  return result;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace revlex
