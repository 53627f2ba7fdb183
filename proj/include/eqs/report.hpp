#pragma once
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "eqs/pbw.hpp"
#include "eqs/superop.hpp"

namespace eqs {

using json = nlohmann::json;

// One identity check. pass means the residual is identically zero; negative controls
// expect a failure and carry expect_pass = false.
struct CheckResult {
  std::string id;
  bool pass = false;
  bool expect_pass = true;
  json witness;  // null when the residual vanished
  std::string error;
  double ms = 0;
  bool ok() const { return error.empty() && pass == expect_pass; }
};

struct VerificationReport {
  std::string suite;
  json config;
  std::vector<CheckResult> results;
  bool ok() const;
  json to_json(bool with_timing = true) const;
  std::string to_text() const;
};

json witness_of(const TElem& residual);
json witness_of(const SuperOp<RatFunc>& residual);
json witness_of(const SuperOp<Series>& residual);
json witness_of(const Series& residual);
json ratfunc_json(const RatFunc& c);
json series_json(const Series& s);
json superop_json(const SuperOp<Series>& m);
json superop_json(const SuperOp<RatFunc>& m);

// Runs f, which returns the residual witness (null json when zero).
CheckResult run_check(const std::string& id, const std::function<json()>& f, bool expect_pass = true);

template <class T>
json zero_or_witness(const T& residual) {
  return residual.is_zero() ? json() : witness_of(residual);
}

}  // namespace eqs
