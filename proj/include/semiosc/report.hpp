#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace semiosc {

struct CheckDetail {
  std::string location;
  double error = 0.0;
};

// Outcome of one verification suite: worst residual against its tolerance,
// with per-relation breakdown.  pass is only meaningful after finalize().
struct CheckReport {
  std::string name;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::vector<CheckDetail> details;
};

inline CheckReport make_report(std::string name, double tolerance) {
  CheckReport r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  return r;
}

inline void record(CheckReport& r, std::string location, double error) {
  r.max_abs_error = std::max(r.max_abs_error, error);
  r.details.push_back({std::move(location), error});
}

inline CheckReport& finalize(CheckReport& r) {
  r.pass = r.max_abs_error <= r.tolerance;
  return r;
}

}  // namespace semiosc
