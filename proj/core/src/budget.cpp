#include "superinv/budget.hpp"

#include <cstdlib>
#include <string>

namespace superinv {

namespace {
thread_local OpBudget* current_budget = nullptr;
}

ResourceCapExceeded::ResourceCapExceeded(std::uint64_t cap)
    : std::runtime_error("resource cap exceeded: more than " + std::to_string(cap) + " scalar term operations"),
      cap_(cap) {}

OpBudget::OpBudget(std::uint64_t cap) : cap_(cap), previous_(current_budget) { current_budget = this; }

OpBudget::~OpBudget() { current_budget = previous_; }

void OpBudget::charge(std::uint64_t ops) {
  for (OpBudget* b = current_budget; b != nullptr; b = b->previous_) {
    b->used_ += ops;
    if (b->used_ > b->cap_) throw ResourceCapExceeded(b->cap_);
  }
}

std::uint64_t op_cap_from_env() {
  const char* raw = std::getenv(kOpCapEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultOpCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultOpCap;
  return v;
}

}  // namespace superinv
