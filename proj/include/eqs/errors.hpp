#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqs {

// Bad user input or inconsistent parameters. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonInvertible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A Pochhammer or hypergeometric denominator vanishes at the requested parameters.
struct SingularParameter : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-thread cap on the number of terms of any single polynomial or tensor
// element. 0 disables the check.
struct TermBudget {
  static thread_local std::size_t limit;
  static void check(std::size_t n, const char* what) {
    if (limit != 0 && n > limit)
      throw ResourceLimit(std::string("term budget exceeded in ") + what + " (" +
                          std::to_string(n) + " > " + std::to_string(limit) + ")");
  }
};

struct ScopedTermBudget {
  std::size_t saved;
  explicit ScopedTermBudget(std::size_t n) : saved(TermBudget::limit) { TermBudget::limit = n; }
  ~ScopedTermBudget() { TermBudget::limit = saved; }
};

}  // namespace eqs
