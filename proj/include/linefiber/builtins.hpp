#pragma once

#include <string>
#include <vector>

#include <linefiber/arrangement.hpp>
#include <linefiber/errors.hpp>

namespace linefiber {

struct BuiltinInfo {
  std::string name;
  std::string description;
};

inline const std::vector<BuiltinInfo>& builtin_list() {
  static const std::vector<BuiltinInfo> list{
      {"ceva3", "9 lines (x^3-y^3)(x^3-z^3)(y^3-z^3) over Q(zeta_3): 12 triple points, beta3 = 2"},
      {"ceva2", "6 lines x+-y, x+-z, y+-z: 4 triple and 3 double points, beta3 = 1"},
      {"triangle", "coordinate triangle x, y, z: 3 double points"},
  };
  return list;
}

inline Arrangement make_builtin(const std::string& name) {
  if (name == "triangle") {
    return make_arrangement(1, {parse_line(1, "1", "0", "0"), parse_line(1, "0", "1", "0"),
                                parse_line(1, "0", "0", "1")});
  }
  if (name == "ceva2") {
    return make_arrangement(
        1, {parse_line(1, "1", "1", "0"), parse_line(1, "1", "-1", "0"),
            parse_line(1, "1", "0", "1"), parse_line(1, "1", "0", "-1"),
            parse_line(1, "0", "1", "1"), parse_line(1, "0", "1", "-1")});
  }
  if (name == "ceva3") {
    std::vector<ProjectiveLine> lines;
    for (int a = 0; a < 3; ++a) {
      const std::string za = a == 0 ? "-1" : (a == 1 ? "-z" : "-z^2");
      lines.push_back(parse_line(3, "1", za, "0"));  // x - zeta^a y
      lines.push_back(parse_line(3, "1", "0", za));  // x - zeta^a z
      lines.push_back(parse_line(3, "0", "1", za));  // y - zeta^a z
    }
    return make_arrangement(3, std::move(lines));
  }
  throw ParseError("unknown builtin arrangement '" + name + "'");
}

}  // namespace linefiber
