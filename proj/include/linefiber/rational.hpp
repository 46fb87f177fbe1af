#pragma once

// Arbitrary-precision exact rationals, backed by GMP. The canonical mpq form
// (denominator > 0, fraction fully reduced, zero stored as 0/1) is the
// representation invariant relied on by every module above this one.

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include <linefiber/errors.hpp>

namespace linefiber {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

inline Rational make_fraction(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("make_fraction: zero denominator");
  Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// Accepts [+-]digits and [+-]digits/digits, nothing else.
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&text]() -> void {
    throw ParseError("invalid rational literal: '" + std::string(text) + "'");
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const auto digits = [&]() -> std::string {
    std::string out;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out += text[pos++];
    if (out.empty()) fail();
    return out;
  };
  const std::string num = digits();
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits();
  }
  if (pos != text.size()) fail();
  const Integer n(num);
  const Integer d(den);
  if (d == 0) fail();
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace linefiber
