#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace letgrid {

// Malformed input: bad text, out-of-range vertex, violated precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search ran out of steps before reaching a decision.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Step limit for exhaustive searches. A default-constructed budget is unlimited.
struct Budget {
  std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();

  static Budget steps(std::uint64_t n) { return Budget{n}; }
  bool unlimited() const { return max_steps == std::numeric_limits<std::uint64_t>::max(); }
};

// Counts steps against a Budget; throws BudgetExhausted when the limit is passed.
class StepCounter {
 public:
  explicit StepCounter(Budget b, std::string what = "search") : limit_(b.max_steps), what_(std::move(what)) {}

  void tick() {
    if (++used_ > limit_) throw BudgetExhausted(what_ + ": step budget of " + std::to_string(limit_) + " exhausted");
  }
  bool try_tick() { return ++used_ <= limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string what_;
};

}  // namespace letgrid
