#pragma once

#include <cstdint>
#include <stdexcept>

namespace superinv {

inline constexpr std::uint64_t kDefaultOpCap = 10'000'000;
inline constexpr const char* kOpCapEnvVar = "SUPERINV_OP_CAP";

class ResourceCapExceeded : public std::runtime_error {
 public:
  explicit ResourceCapExceeded(std::uint64_t cap);
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

// Counts scalar term operations on the current thread while alive.
// Nested budgets are all charged.
class OpBudget {
 public:
  explicit OpBudget(std::uint64_t cap);
  ~OpBudget();
  OpBudget(const OpBudget&) = delete;
  OpBudget& operator=(const OpBudget&) = delete;

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t cap() const noexcept { return cap_; }

  // Called by the scalar kernel; throws ResourceCapExceeded past the cap.
  static void charge(std::uint64_t ops);

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
  OpBudget* previous_;
};

// Cap from SUPERINV_OP_CAP when set to a positive integer, else the default.
std::uint64_t op_cap_from_env();

}  // namespace superinv
