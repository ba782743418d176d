#include "subtour/rational.hpp"

#include <cctype>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

BigInt parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ParseError("empty integer in rational '" + whole + "'");
  size_t i = 0;
  bool neg = false;
  if (s[0] == '+' || s[0] == '-') {
    neg = (s[0] == '-');
    i = 1;
  }
  if (i == s.size()) throw ParseError("missing digits in rational '" + whole + "'");
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("invalid character '" + std::string(1, s[i]) + "' in rational '" + whole + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? BigInt(-v) : v;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty rational");
  const size_t slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s, s));
  const BigInt p = parse_int(s.substr(0, slash), s);
  const BigInt q = parse_int(s.substr(slash + 1), s);
  if (q == 0) throw ParseError("zero denominator in rational '" + s + "'");
  // The wire format keeps the sign on the numerator.
  if (q < 0) throw ParseError("negative denominator in rational '" + s + "'");
  return Rat(p, q);
}

std::string rat_to_string(const Rat& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

bool rat_to_decimal(const Rat& r, int max_digits, std::string& out) {
  BigInt den = rat_den(r);
  int k = 0;  // digits needed: den must be 2^a * 5^b with max(a, b) <= max_digits
  int a = 0, b = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++a;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++b;
  }
  if (den != 1) return false;
  k = a > b ? a : b;
  if (k > max_digits) return false;
  if (k == 0) {
    out = rat_num(r).str();
    return true;
  }
  BigInt pow10 = 1;
  for (int i = 0; i < k; ++i) pow10 *= 10;
  BigInt scaled = rat_num(r) * (pow10 / rat_den(r));
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.str();
  if (static_cast<int>(digits.size()) <= k)
    digits.insert(0, std::string(static_cast<size_t>(k) + 1 - digits.size(), '0'));
  digits.insert(digits.size() - static_cast<size_t>(k), ".");
  out = (neg ? "-" : "") + digits;
  return true;
}

}  // namespace subtour
