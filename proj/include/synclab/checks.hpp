#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "synclab/serialize.hpp"

namespace synclab {

// A measured quantity and the closed/open interval it must fall in.
struct Metric {
  enum class Op { Less, LessEq, Greater, GreaterEq, Within };
  std::string name;
  double value = 0.0;
  Op op = Op::Less;
  double a = 0.0;
  double b = 0.0;  // upper end for Within

  bool passed() const;
  std::string describe() const;
};

Metric less(std::string name, double value, double limit);
Metric less_eq(std::string name, double value, double limit);
Metric greater(std::string name, double value, double limit);
Metric greater_eq(std::string name, double value, double limit);
Metric within(std::string name, double value, double lo, double hi);
Metric holds(std::string name, bool ok);

struct CheckResult {
  int id = 0;
  std::string title;
  std::vector<Metric> metrics;
  std::string error;  // non-empty when the check threw
  double seconds = 0.0;

  bool passed() const;
  // Worst metric first, so one-line summaries show what matters.
  std::string summary() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20241016;
inline constexpr int kCriterionCount = 14;

// Runs one acceptance criterion (1..14) from a seeded, reproducible setup.
CheckResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::string criterion_title(int id);

const std::vector<std::string>& suite_names();
// Criteria making up a suite; throws ErrorCode::InvalidArgument for unknown names.
std::vector<int> suite_criteria(const std::string& name);

std::string summary_table(const std::vector<CheckResult>& results);
json summary_json(const std::string& suite, std::uint64_t seed, const std::vector<CheckResult>& results);

}  // namespace synclab
