#pragma once

#include <map>
#include <string>
#include <vector>

#include "rbody/geom.hpp"

namespace rbody {

struct Witness {
  std::string label;
  Point2 at;
};

/// Structured verdict of a check: pass/fail, named statistics, witnesses and flags.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::map<std::string, double> stats;
  std::vector<Witness> witnesses;
  std::vector<std::string> flags;

  bool has_flag(const std::string& f) const;
  void add_flag(const std::string& f);
};

}  // namespace rbody
