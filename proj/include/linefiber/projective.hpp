#pragma once

// Points and lines of the projective plane over Q(zeta_m), stored as
// homogeneous coordinate triples normalized so that the first nonzero entry
// is exactly 1. Proportionality testing is then plain equality.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include <linefiber/cyclotomic.hpp>
#include <linefiber/errors.hpp>

namespace linefiber {

template <class Tag>
struct Homogeneous3 {
  std::array<Cyclotomic, 3> h;

  int order() const { return h[0].order(); }
  friend bool operator==(const Homogeneous3&, const Homogeneous3&) = default;
  friend bool operator<(const Homogeneous3& a, const Homogeneous3& b) {
    for (int i = 0; i < 3; ++i) {
      const int s = a.h[i].compare(b.h[i]);
      if (s != 0) return s < 0;
    }
    return false;
  }
};

struct PointTag {};
struct LineTag {};
using ProjectivePoint = Homogeneous3<PointTag>;
using ProjectiveLine = Homogeneous3<LineTag>;

template <class Tag>
Homogeneous3<Tag> make_normalized(std::array<Cyclotomic, 3> raw) {
  if (raw[1].order() != raw[0].order() || raw[2].order() != raw[0].order())
    throw FieldError("homogeneous triple mixes cyclotomic orders");
  int lead = -1;
  for (int i = 0; i < 3; ++i) {
    if (!raw[i].is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) throw std::invalid_argument("homogeneous triple must not be identically zero");
  const Cyclotomic scale = raw[lead].inverse();
  for (auto& c : raw) c = c * scale;
  return Homogeneous3<Tag>{std::move(raw)};
}

inline ProjectivePoint make_point(Cyclotomic x, Cyclotomic y, Cyclotomic z) {
  return make_normalized<PointTag>({std::move(x), std::move(y), std::move(z)});
}
inline ProjectiveLine make_line(Cyclotomic a, Cyclotomic b, Cyclotomic c) {
  return make_normalized<LineTag>({std::move(a), std::move(b), std::move(c)});
}
inline ProjectivePoint parse_point(int order, std::string_view x, std::string_view y,
                                   std::string_view z) {
  return make_point(parse_cyclotomic(x, order), parse_cyclotomic(y, order),
                    parse_cyclotomic(z, order));
}
inline ProjectiveLine parse_line(int order, std::string_view a, std::string_view b,
                                 std::string_view c) {
  return make_line(parse_cyclotomic(a, order), parse_cyclotomic(b, order),
                   parse_cyclotomic(c, order));
}

// a*x + b*y + c*z for the line ax + by + cz = 0.
inline Cyclotomic evaluate(const ProjectiveLine& l, const ProjectivePoint& p) {
  return l.h[0] * p.h[0] + l.h[1] * p.h[1] + l.h[2] * p.h[2];
}

inline bool incident(const ProjectiveLine& l, const ProjectivePoint& p) {
  return evaluate(l, p).is_zero();
}

// Cross product of the coefficient triples; any two distinct projective
// lines meet in exactly one point.
inline ProjectivePoint intersect_lines(const ProjectiveLine& l1, const ProjectiveLine& l2) {
  const auto& a = l1.h;
  const auto& b = l2.h;
  std::array<Cyclotomic, 3> x{
      a[1] * b[2] - a[2] * b[1],
      a[2] * b[0] - a[0] * b[2],
      a[0] * b[1] - a[1] * b[0],
  };
  if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero())
    throw std::invalid_argument("intersect_lines: proportional lines");
  return make_normalized<PointTag>(std::move(x));
}

template <class Tag>
std::string to_string(const Homogeneous3<Tag>& t) {
  return "[" + to_string(t.h[0]) + ":" + to_string(t.h[1]) + ":" + to_string(t.h[2]) + "]";
}

}  // namespace linefiber
