#include "eqs/report.hpp"

#include <sstream>

#include "eqs/errors.hpp"

namespace eqs {

namespace {

json poly_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json e = json::object();
    for (int v = 0; v < kMaxVars; ++v)
      if (t.e[static_cast<std::size_t>(v)]) e[sym_name(v)] = t.e[static_cast<std::size_t>(v)];
    terms.push_back({{"exp", e}, {"coeff", t.c.get_str()}});
  }
  return terms;
}

}  // namespace

json ratfunc_json(const RatFunc& c) {
  return {{"num", poly_json(c.num())}, {"den", poly_json(c.den())}};
}

json series_json(const Series& s) {
  json coeffs = json::array();
  const auto& sh = *s.shape();
  for (int i = 0; i < sh.size; ++i) {
    const RatFunc& c = s.coeff(i);
    if (c.is_zero()) continue;
    json r = ratfunc_json(c);
    r["exp"] = sh.unflatten(i);
    coeffs.push_back(r);
  }
  return {{"vars", sh.vars}, {"bounds", sh.bound}, {"coeffs", coeffs}};
}

json superop_json(const SuperOp<Series>& m) {
  json entries = json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) entries.push_back({{"row", i}, {"col", j}, {"value", series_json(m(i, j))}});
  std::vector<int> parity;
  for (int i = 0; i < m.dim(); ++i) parity.push_back(state_parity(i));
  return {{"legs", m.legs()}, {"parity", parity}, {"entries", entries}};
}

json superop_json(const SuperOp<RatFunc>& m) {
  json entries = json::array();
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) entries.push_back({{"row", i}, {"col", j}, {"value", ratfunc_json(m(i, j))}});
  std::vector<int> parity;
  for (int i = 0; i < m.dim(); ++i) parity.push_back(state_parity(i));
  return {{"legs", m.legs()}, {"parity", parity}, {"entries", entries}};
}

json witness_of(const TElem& r) {
  if (r.is_zero()) return json();
  const auto& [k, c] = *r.terms().begin();
  return {{"term", r.term_str(k)}, {"coeff", c.str()}, {"nterms", r.size()}};
}

json witness_of(const SuperOp<RatFunc>& r) {
  auto e = r.first_nonzero();
  if (!e) return json();
  return {{"row", e->first}, {"col", e->second}, {"value", r(e->first, e->second).str()}};
}

json witness_of(const Series& s) {
  auto f = s.first_nonzero();
  if (!f) return json();
  json exp = json::object();
  for (std::size_t v = 0; v < f->first.size(); ++v) exp[s.shape()->vars[v]] = f->first[v];
  return {{"exp", exp}, {"coeff", f->second.str()}};
}

json witness_of(const SuperOp<Series>& r) {
  auto e = r.first_nonzero();
  if (!e) return json();
  json w = witness_of(r(e->first, e->second));
  w["row"] = e->first;
  w["col"] = e->second;
  return w;
}

CheckResult run_check(const std::string& id, const std::function<json()>& f, bool expect_pass) {
  CheckResult r;
  r.id = id;
  r.expect_pass = expect_pass;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.witness = f();
    r.pass = r.witness.is_null();
  } catch (const ResourceLimit& e) {
    r.error = std::string("resource limit: ") + e.what();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool VerificationReport::ok() const {
  for (const auto& r : results)
    if (!r.ok()) return false;
  return true;
}

json VerificationReport::to_json(bool with_timing) const {
  json res = json::array();
  for (const auto& r : results) {
    json j = {{"id", r.id}, {"status", r.pass ? "pass" : "fail"}, {"expected", r.expect_pass ? "pass" : "fail"}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    if (!r.error.empty()) j["error"] = r.error;
    if (with_timing) j["ms"] = r.ms;
    res.push_back(j);
  }
  return {{"suite", suite}, {"config", config}, {"results", res}, {"version", "1.0.0"}};
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << ": " << (ok() ? "OK" : "FAILED") << "\n";
  for (const auto& r : results) {
    os << "  " << (r.ok() ? "ok  " : "BAD ") << r.id << "  " << (r.pass ? "pass" : "fail");
    if (!r.expect_pass) os << " (negative control)";
    os << "  " << static_cast<long>(r.ms) << " ms";
    if (!r.error.empty()) os << "  error: " << r.error;
    os << "\n";
    if (!r.witness.is_null()) os << "      witness " << r.witness.dump() << "\n";
  }
  return os.str();
}

}  // namespace eqs
