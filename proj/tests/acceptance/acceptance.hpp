#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superinv::acceptance {

struct Outcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

std::vector<int> all_criteria();
std::string criterion_title(int id);
// Throws std::out_of_range for an unknown id. Exceptions inside a check become a failure.
Outcome run_criterion(int id);
// "PASS  3  title (1.2 s): detail"
std::string format_line(const Outcome& o);
// One line per criterion, flushed as each finishes. True when every one passed.
bool run_suite(const std::vector<int>& ids, std::ostream& os);

}  // namespace superinv::acceptance
