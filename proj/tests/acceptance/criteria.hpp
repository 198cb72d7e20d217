#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "catnet/information.hpp"

namespace catnet::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string measured;
  double seconds = 0.0;
};

struct SuiteOptions {
  int corrupt = 0;  // criterion whose tolerance is replaced by an impossible one
  std::vector<int> only;  // empty = all
};

/// Tolerance handed to one criterion; corrupted tolerances reject every value.
struct Tol {
  bool corrupted = false;
  double max(double base) const { return corrupted ? -1.0 : base; }
  double min_fraction(double base) const { return corrupted ? 2.0 : base; }
};

using Criterion = std::function<CriterionResult(const Tol&)>;

struct CriterionEntry {
  int id;
  const char* name;
  Criterion run;
};

const std::vector<CriterionEntry>& criteria();

/// Runs the selected criteria, printing one line per criterion to `out`.
std::vector<CriterionResult> run_regression_suite(const SuiteOptions& opts, std::ostream& out);

std::string format_line(const CriterionResult& r);

/// The fixed 2-unit battery: joints over (X1, X2, Y1, Y2), binary axes.
std::vector<JointDistribution> two_unit_battery();

/// Random product-form joint Q(x) q1(y1|x1) q2(y2|x2) over binary units.
JointDistribution product_joint(std::size_t units, std::uint64_t seed);

}  // namespace catnet::acceptance
