#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m). Elements live in the
// power basis 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic
// polynomial Phi_m, so two elements are equal iff their coefficient vectors
// are equal. One order m is fixed per value; mixing orders is rejected, never
// coerced. m = 1 and m = 2 degenerate to Q and are supported uniformly.

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <linefiber/errors.hpp>
#include <linefiber/numeric.hpp>
#include <linefiber/rational.hpp>

namespace linefiber {
namespace detail {

using QPoly = std::vector<Rational>;  // ascending coefficients
using ZPoly = std::vector<Integer>;

inline void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

inline QPoly poly_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// Euclidean division in Q[x]; the divisor must be nonzero.
inline std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  poly_trim(a);
  if (b.empty() || b.back() == 0) throw std::invalid_argument("poly_divmod: zero divisor");
  if (a.size() < b.size()) return {QPoly{}, std::move(a)};
  QPoly q(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = Rational(1) / b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational t = a[i + b.size() - 1] * lead_inv;
    if (t == 0) continue;
    q[i] = t;
    for (std::size_t k = 0; k < b.size(); ++k) a[i + k] -= t * b[k];
  }
  a.resize(b.size() - 1);
  poly_trim(a);
  return {std::move(q), std::move(a)};
}

// Extended Euclid tracking only the first Bezout coefficient:
// returns (g, u) with u * a == g modulo b.
inline std::pair<QPoly, QPoly> poly_extended_gcd_first(QPoly a, QPoly b) {
  poly_trim(a);
  poly_trim(b);
  QPoly r0 = std::move(a), r1 = std::move(b);
  QPoly u0{Rational(1)}, u1{};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(std::move(r0), r1);
    QPoly u2 = poly_sub(std::move(u0), poly_mul(quot, u1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {std::move(r0), std::move(u0)};
}

// Exact division in Z[x] by a monic divisor; throws if a remainder is left.
inline ZPoly zpoly_exact_div_monic(ZPoly num, const ZPoly& den) {
  if (num.size() < den.size()) throw std::invalid_argument("zpoly_exact_div_monic: degree underflow");
  ZPoly q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer t = num[i + den.size() - 1];
    if (t == 0) continue;
    q[i] = t;
    for (std::size_t k = 0; k < den.size(); ++k) num[i + k] -= t * den[k];
  }
  for (const auto& c : num)
    if (c != 0) throw ConsistencyError("cyclotomic polynomial division left a remainder");
  return q;
}

}  // namespace detail

// Phi_m, ascending integer coefficients, computed by exact division of
// x^m - 1 by the product of Phi_e over the proper divisors e of m.
inline std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  std::map<int, detail::ZPoly> phi;  // Phi_e for divisors e of m, smallest first
  for (int e = 1; e <= m; ++e) {
    if (m % e != 0) continue;
    detail::ZPoly num(static_cast<std::size_t>(e) + 1);
    num.front() = -1;
    num.back() = 1;
    for (const auto& [f, phi_f] : phi)
      if (e % f == 0) num = detail::zpoly_exact_div_monic(std::move(num), phi_f);
    phi.emplace(e, std::move(num));
  }
  return phi.at(m);
}

class Cyclotomic {
 public:
  Cyclotomic() = default;  // zero in Q(zeta_1) = Q

  Cyclotomic(int order, std::vector<Rational> coeffs) : order_(order), c_(std::move(coeffs)) {
    if (order_ < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
    if (c_.size() != static_cast<std::size_t>(euler_phi(order_)))
      throw std::invalid_argument("Cyclotomic: coefficient vector must have length phi(order)");
  }

  static Cyclotomic zero(int order) {
    return Cyclotomic(order, std::vector<Rational>(euler_phi(order), Rational(0)));
  }
  static Cyclotomic one(int order) { return from_rational(order, Rational(1)); }
  static Cyclotomic from_rational(int order, const Rational& r) {
    std::vector<Rational> c(euler_phi(order), Rational(0));
    c[0] = r;
    return Cyclotomic(order, std::move(c));
  }
  static Cyclotomic zeta_power(int order, long exponent) {
    long e = exponent % order;
    if (e < 0) e += order;
    detail::QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p.back() = 1;
    return from_polynomial(order, std::move(p));
  }
  // Reduces an arbitrary polynomial in zeta to canonical form.
  static Cyclotomic from_polynomial(int order, std::vector<Rational> ascending) {
    detail::QPoly r = detail::poly_divmod(std::move(ascending), phi_over_q(order)).second;
    r.resize(euler_phi(order), Rational(0));
    return Cyclotomic(order, std::move(r));
  }

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
  }
  bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return r == 0; });
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    std::vector<Rational> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return Cyclotomic(a.order_, std::move(c));
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    std::vector<Rational> c(a.c_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return Cyclotomic(a.order_, std::move(c));
  }
  friend Cyclotomic operator-(const Cyclotomic& a) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x = -x;
    return Cyclotomic(a.order_, std::move(c));
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    check_orders(a, b);
    return from_polynomial(a.order_, detail::poly_mul(a.c_, b.c_));
  }

  // Via extended Euclid against Phi_m, which succeeds for every nonzero
  // element because Phi_m is irreducible over Q.
  Cyclotomic inverse() const {
    if (is_zero()) throw FieldError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    detail::QPoly a(c_);
    detail::poly_trim(a);
    auto [g, u] = detail::poly_extended_gcd_first(std::move(a), phi_over_q(order_));
    if (g.size() != 1)
      throw ConsistencyError("cyclotomic inverse: gcd with Phi_m is not a constant");
    const Rational scale = Rational(1) / g[0];
    for (auto& c : u) c *= scale;
    return from_polynomial(order_, std::move(u));
  }

  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Lexicographic order on coefficient vectors; a container key order, not a
  // field order.
  int compare(const Cyclotomic& b) const {
    check_orders(*this, b);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const int s = cmp(c_[i], b.c_[i]);
      if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
  }
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) { return a.compare(b) < 0; }

 private:
  static void check_orders(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ != b.order_)
      throw FieldError("cyclotomic order mismatch: " + std::to_string(a.order_) + " vs " +
                       std::to_string(b.order_));
  }
  static detail::QPoly phi_over_q(int order) {
    const std::vector<Integer> z = cyclotomic_polynomial(order);
    return detail::QPoly(z.begin(), z.end());
  }

  int order_ = 1;
  std::vector<Rational> c_ = std::vector<Rational>(1, Rational(0));
};

// Grammar: sums/differences of terms, each term a '*'-product of factors,
// each factor an unsigned rational "p" / "p/q" or a power "z" / "z^k" of
// zeta_m. Whitespace is ignored.
inline Cyclotomic parse_cyclotomic(std::string_view text, int order) {
  if (order < 1) throw std::invalid_argument("parse_cyclotomic: order must be positive");
  struct Parser {
    std::string_view s;
    std::size_t i = 0;
    int order;

    void skip() {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
      skip();
      if (i < s.size() && s[i] == c) {
        ++i;
        return true;
      }
      return false;
    }
    [[noreturn]] void fail(const std::string& why) {
      throw ParseError("coefficient parse error at position " + std::to_string(i) + " in '" +
                       std::string(s) + "': " + why);
    }
    std::string digits() {
      skip();
      std::string out;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
      if (out.empty()) fail("expected digits");
      return out;
    }
    Cyclotomic factor() {
      skip();
      if (i >= s.size()) fail("expected a factor");
      if (s[i] == 'z') {
        ++i;
        long e = 1;
        if (eat('^')) {
          const Integer k(digits());
          e = mpz_class(k % order).get_si();
        }
        return Cyclotomic::zeta_power(order, e);
      }
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        const Integer n(digits());
        Integer d(1);
        if (eat('/')) {
          d = Integer(digits());
          if (d == 0) fail("zero denominator");
        }
        Rational r(n, d);
        r.canonicalize();
        return Cyclotomic::from_rational(order, r);
      }
      fail("expected a rational or 'z'");
    }
    Cyclotomic term() {
      Cyclotomic v = factor();
      while (eat('*')) v = v * factor();
      return v;
    }
    Cyclotomic expr() {
      Cyclotomic acc = Cyclotomic::zero(order);
      int sign = +1;
      if (eat('+')) sign = +1;
      else if (eat('-')) sign = -1;
      while (true) {
        const Cyclotomic t = term();
        acc = sign > 0 ? acc + t : acc - t;
        skip();
        if (i >= s.size()) break;
        if (eat('+')) sign = +1;
        else if (eat('-')) sign = -1;
        else fail("expected '+', '-' or end of input");
      }
      return acc;
    }
  };
  Parser p{text, 0, order};
  p.skip();
  if (p.i >= text.size()) throw ParseError("empty coefficient string");
  return p.expr();
}

// Renders the canonical form in the same grammar parse_cyclotomic accepts.
inline std::string to_string(const Cyclotomic& a) {
  std::string out;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const bool negative = c[i] < 0;
    const Rational mag = negative ? Rational(-c[i]) : c[i];
    std::string term;
    if (i == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += "z";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace linefiber
