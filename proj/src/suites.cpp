#include "eqs/suites.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "eqs/affine.hpp"
#include "eqs/errors.hpp"
#include "eqs/face.hpp"
#include "eqs/quasihopf.hpp"
#include "eqs/rootdata.hpp"
#include "eqs/vertex.hpp"

namespace eqs {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// Sampled q values, empty for symbolic q.
std::vector<Rat> q_values(const std::string& q) {
  if (q == "symbolic" || q == "default") return {};
  std::vector<Rat> out;
  for (const auto& t : split(q)) {
    Rat r = parse_rat(t);
    if (!admissible_q(r)) throw ConfigError("q sample " + r.get_str() + " is 0 or a root of unity");
    out.push_back(r);
  }
  return out;
}

std::optional<Rat> w_value(const std::string& w) {
  if (w == "symbolic") return std::nullopt;
  Rat r = parse_rat(w);
  if (r == 0 || r == 1) throw ConfigError("w = " + r.get_str() + " is a singular face parameter");
  return r;
}

RatFunc q_symbol() { return RatFunc::sym(PbwSyms::get().q); }
RatFunc w_symbol() { return RatFunc::sym(PbwSyms::get().w); }

// Fixed registration order so that term ordering never depends on thread scheduling.
void register_symbols() {
  PbwSyms::get();
  sym("z");
  for (int k = 1; k <= 3; ++k) sym("s" + std::to_string(k));
}

struct Sampler {
  std::mt19937_64 gen;
  explicit Sampler(std::uint64_t seed) : gen(seed) {}
  Rat rat(int max_num, int max_den) {
    std::uniform_int_distribution<int> n(1, max_num), d(1, max_den);
    Rat r(n(gen), d(gen));
    r.canonicalize();
    return r;
  }
  Rat q() {
    for (;;) {
      Rat r = rat(11, 7);
      if (admissible_q(r)) return r;
    }
  }
  // three distinct points with pairwise ratios different from 1 and q^{+-2}
  std::vector<Rat> points() {
    for (;;) {
      std::vector<Rat> z = {rat(13, 7), rat(13, 7), rat(13, 7)};
      if (z[0] != z[1] && z[0] != z[2] && z[1] != z[2]) return z;
    }
  }
};

int order_or(const std::optional<int>& o, int dflt) { return o ? *o : dflt; }

struct Ctx {
  const SuiteConfig& c;
  json resolved = json::object();
  std::vector<CheckResult> out;

  void add(const std::string& prefix, std::vector<CheckResult> rs) {
    for (auto& r : rs) {
      if (!prefix.empty()) r.id = prefix + r.id;
      out.push_back(std::move(r));
    }
  }
  // Runs body once with symbolic q, or once per sampled q with a "q=..:" prefix.
  void per_q(const std::vector<Rat>& qs, const std::function<std::vector<CheckResult>(const RatFunc&)>& body) {
    if (qs.empty()) {
      add("", body(q_symbol()));
      return;
    }
    for (const auto& q : qs) add("q=" + q.get_str() + ":", body(RatFunc(q)));
  }
  std::vector<Rat> qs(const std::vector<Rat>& dflt) {
    std::vector<Rat> r = c.q == "default" ? dflt : q_values(c.q);
    json j = json::array();
    for (const auto& x : r) j.push_back(x.get_str());
    resolved["q"] = r.empty() ? json("symbolic") : j;
    return r;
  }
  RatFunc w() {
    auto v = w_value(c.w_mode);
    resolved["w"] = v ? json(v->get_str()) : json("symbolic");
    return v ? RatFunc(*v) : w_symbol();
  }
};

using SuiteFn = std::function<void(Ctx&)>;

const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> t = {
      {"base-hopf", [](Ctx& x) { x.add("", verify_base_hopf()); }},
      {"quasi-hopf-twist", [](Ctx& x) { x.add("", verify_twisted_quasi_hopf(x.w())); }},
      {"cocycle", [](Ctx& x) { x.add("", verify_shifted_cocycle()); }},
      {"dynamical-ybe", [](Ctx& x) { x.add("", verify_dynamical_identities()); }},
      {"drinfeld",
       [](Ctx& x) {
         int modes = order_or(x.c.modes, 4);
         std::vector<int> th = x.c.theta.empty() ? std::vector<int>{1, 2, 3} : x.c.theta;
         x.resolved["modes"] = modes;
         x.resolved["theta"] = th;
         x.per_q(x.qs({}), [&](const RatFunc& q) {
           std::vector<CheckResult> all;
           for (int t : th) {
             auto rs = verify_drinfeld_relations(modes, q, t);
             for (auto& r : rs) r.id = "theta=" + std::to_string(t) + ":" + r.id;
             all.insert(all.end(), rs.begin(), rs.end());
           }
           return all;
         });
       }},
      {"r-universal-vs-closed",
       [](Ctx& x) {
         int Nz = order_or(x.c.order_z, 8);
         std::vector<std::pair<int, int>> pairs = {{1, 1}, {1, 2}, {2, 3}};
         if (!x.c.theta.empty()) {
           if (x.c.theta.size() != 2) throw ConfigError("r-universal-vs-closed takes --theta as a pair");
           pairs = {{x.c.theta[0], x.c.theta[1]}};
         }
         x.resolved["order_z"] = Nz;
         x.per_q(x.qs({}), [&](const RatFunc& q) { return verify_r_universal(q, Nz, pairs); });
       }},
      {"graded-ybe",
       [](Ctx& x) {
         Sampler S(x.c.seed);
         std::vector<Rat> qs = x.c.q == "default" ? std::vector<Rat>{} : q_values(x.c.q);
         bool symbolic = x.c.q == "symbolic";
         std::vector<int> th2 = {1, 2, 3};
         if (!x.c.theta.empty()) {
           if (x.c.theta.size() != 3) throw ConfigError("graded-ybe takes --theta as a triple");
           th2 = x.c.theta;
         }
         std::vector<YbeSample> samples;
         std::size_t k = 0;
         auto next_q = [&]() -> std::optional<Rat> {
           if (symbolic) return std::nullopt;
           if (!qs.empty()) return qs[k++ % qs.size()];
           return S.q();
         };
         for (int i = 0; i < x.c.q_samples; ++i) {
           auto q = next_q();
           samples.push_back({q, S.points(), {1, 1, 1}});
         }
         for (const auto& th : {th2, std::vector<int>{th2[1], th2[0], th2[2]}}) {
           auto q = next_q();
           samples.push_back({q, S.points(), th});
         }
         x.resolved["q"] = symbolic ? "symbolic" : "sampled";
         x.resolved["samples"] = samples.size();
         x.add("", verify_graded_ybe(q_symbol(), samples));
       }},
      {"face-diff-eq",
       [](Ctx& x) {
         int Np = order_or(x.c.order_p, 6), Nz = order_or(x.c.order_z, 6);
         x.resolved["order_p"] = Np;
         x.resolved["order_z"] = Nz;
         RatFunc w = x.w();
         x.per_q(x.qs({}), [&](const RatFunc& q) { return verify_face_difference({q, w}, Np, Nz); });
       }},
      {"face-initial",
       [](Ctx& x) {
         int Np = order_or(x.c.order_p, 6);
         x.resolved["order_p"] = Np;
         x.add("", verify_face_initial(Np));
       }},
      {"face-dybe",
       [](Ctx& x) {
         int Np = order_or(x.c.order_p, 4);
         x.resolved["order_p"] = Np;
         RatFunc w = x.w();
         Sampler S(x.c.seed);
         std::vector<Rat> z = S.points();
         json zj = json::array();
         for (const auto& v : z) zj.push_back(v.get_str());
         x.resolved["z"] = zj;
         x.per_q(x.qs({Rat(7, 5)}), [&](const RatFunc& q) { return verify_face_dybe({q, w}, z, Np); });
       }},
      {"qseries-identities",
       [](Ctx& x) {
         int N = std::max(order_or(x.c.order_p, 8), order_or(x.c.order_z, 8));
         x.resolved["order"] = N;
         x.per_q(x.qs({}), [&](const RatFunc& q) { return verify_phi10(q, N); });
       }},
      {"vertex-product-vs-closed",
       [](Ctx& x) {
         int Nh = order_or(x.c.order_p, 8), Nz = order_or(x.c.order_zeta, 8);
         int Nbc = Nh * 3 / 2, Nx = Nh;
         x.resolved["order_p_half"] = Nh;
         x.resolved["order_zeta"] = Nz;
         x.resolved["order_p_half_bc"] = Nbc;
         x.resolved["order_p_half_xij"] = Nx;
         x.per_q(x.qs({}), [&](const RatFunc& q) { return verify_vertex_product(q, Nh, Nz, Nbc, Nx); });
       }},
      {"vertex-diff-eq",
       [](Ctx& x) {
         int Nh = order_or(x.c.order_p, 6), Nz = order_or(x.c.order_zeta, 6);
         x.resolved["order_p_half"] = Nh;
         x.resolved["order_zeta"] = Nz;
         x.per_q(x.qs({}), [&](const RatFunc& q) { return verify_vertex_difference(q, Nh, Nz); });
       }},
      {"vertex-ybe",
       [](Ctx& x) {
         // modulo p^2: orders p^{0}, p^{1/2}, p^{1}, p^{3/2}
         int Nh = order_or(x.c.order_p, 3);
         x.resolved["order_p_half"] = Nh;
         Sampler S(x.c.seed);
         std::vector<Rat> z = S.points();
         json zj = json::array();
         for (const auto& v : z) zj.push_back(v.get_str());
         x.resolved["zeta"] = zj;
         x.per_q(x.qs({}), [&](const RatFunc& q) { return verify_vertex_ybe(q, z, Nh); });
       }},
      {"root-data",
       [](Ctx& x) {
         json xs = json::array();
         for (const auto& v : x.c.xi) xs.push_back(v.get_str());
         x.resolved["n"] = {1, 2, 3, 4};
         x.resolved["xi"] = xs;
         for (int n = 1; n <= 4; ++n)
           for (const auto& xi : x.c.xi) x.add("", verify_root_data(n, xi));
       }},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "base-hopf",      "quasi-hopf-twist",   "cocycle",     "dynamical-ybe",
      "drinfeld",       "r-universal-vs-closed", "graded-ybe", "face-diff-eq",
      "face-initial",   "face-dybe",          "qseries-identities", "vertex-product-vs-closed",
      "vertex-diff-eq", "vertex-ybe",         "root-data"};
  return ids;
}

void validate(const SuiteConfig& c) {
  if (c.suites.empty()) throw ConfigError("no suite selected");
  for (const auto& s : c.suites)
    if (!suite_table().count(s)) throw ConfigError("unknown suite '" + s + "'");
  q_values(c.q);
  w_value(c.w_mode);
  for (const auto* o : {&c.order_p, &c.order_z, &c.order_zeta, &c.modes})
    if (o->has_value() && **o < 1) throw ConfigError("truncation orders must be >= 1");
  if (c.q_samples < 1) throw ConfigError("--q-samples must be >= 1");
  for (int t : c.theta)
    if (t < 1) throw ConfigError("theta must be a positive integer");
  if (c.xi.empty()) throw ConfigError("xi list is empty");
  if (c.workers < 1) throw ConfigError("--workers must be >= 1");
  if (c.format != "json" && c.format != "text" && c.format != "csv")
    throw ConfigError("unknown format '" + c.format + "' (json, text, csv)");
}

json config_json(const SuiteConfig& c) {
  json j = {{"suite", c.suites},   {"q", c.q},           {"q_samples", c.q_samples}, {"theta", c.theta},
            {"w_mode", c.w_mode},  {"seed", c.seed},     {"format", c.format},       {"term_budget", c.term_budget}};
  json xs = json::array();
  for (const auto& v : c.xi) xs.push_back(v.get_str());
  j["xi"] = xs;
  auto opt = [](const std::optional<int>& o) { return o ? json(*o) : json(); };
  j["order_p"] = opt(c.order_p);
  j["order_z"] = opt(c.order_z);
  j["order_zeta"] = opt(c.order_zeta);
  j["modes"] = opt(c.modes);
  return j;
}

void merge_config(SuiteConfig& c, const json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "suite") {
        c.suites.clear();
        if (v.is_array())
          for (const auto& s : v) c.suites.push_back(s.get<std::string>());
        else
          c.suites = split(v.get<std::string>());
      } else if (k == "q") {
        c.q = v.is_string() ? v.get<std::string>() : v.dump();
      } else if (k == "q_samples" || k == "q-samples") {
        c.q_samples = v.get<int>();
      } else if (k == "theta") {
        c.theta = v.is_array() ? v.get<std::vector<int>>() : std::vector<int>{v.get<int>()};
      } else if (k == "w_mode" || k == "w-mode") {
        c.w_mode = v.is_string() ? v.get<std::string>() : v.dump();
      } else if (k == "xi") {
        c.xi.clear();
        auto one = [&](const json& e) { c.xi.push_back(parse_rat(e.is_string() ? e.get<std::string>() : e.dump())); };
        if (v.is_array())
          for (const auto& e : v) one(e);
        else
          one(v);
      } else if (k == "order_p" || k == "order-p") {
        c.order_p = v.get<int>();
      } else if (k == "order_z" || k == "order-z") {
        c.order_z = v.get<int>();
      } else if (k == "order_zeta" || k == "order-zeta") {
        c.order_zeta = v.get<int>();
      } else if (k == "modes") {
        c.modes = v.get<int>();
      } else if (k == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (k == "out") {
        c.out = v.get<std::string>();
      } else if (k == "format") {
        c.format = v.get<std::string>();
      } else if (k == "workers") {
        c.workers = v.get<int>();
      } else if (k == "term_budget" || k == "term-budget") {
        c.term_budget = v.get<std::size_t>();
      } else {
        throw ConfigError("unknown config key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
}

VerificationReport run_suite(const std::string& id, const SuiteConfig& c) {
  auto it = suite_table().find(id);
  if (it == suite_table().end()) throw ConfigError("unknown suite '" + id + "'");
  register_symbols();
  ScopedTermBudget budget(c.term_budget);
  Ctx x{c, json::object(), {}};
  it->second(x);
  VerificationReport r;
  r.suite = id;
  r.config = config_json(c);
  r.config["resolved"] = x.resolved;
  r.results = std::move(x.out);
  return r;
}

std::vector<VerificationReport> run_suites(const SuiteConfig& c) {
  validate(c);
  register_symbols();
  const std::size_t n = c.suites.size();
  std::vector<VerificationReport> reports(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        reports[i] = run_suite(c.suites[i], c);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(c.workers), n);
  for (std::size_t k = 1; k < w; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

std::string xij_csv(const SuiteConfig& c) {
  register_symbols();
  ScopedTermBudget budget(c.term_budget);
  const int Nh = order_or(c.order_p, 8), Nz = order_or(c.order_zeta, 8);
  std::vector<Rat> qs = q_values(c.q);
  std::ostringstream os;
  auto field = [](const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; };
  auto table = [&](const RatFunc& q, const std::string& qlabel) {
    auto X = solve_xij(q, vertex_shape(Nh, Nz));
    for (std::size_t k = 0; k < 4; ++k) {
      os << "# " << kXijNames[k] << qlabel << "\n";
      os << "p_half_order,zeta_order,num,den\n";
      const auto& sh = *X[k].shape();
      for (int i = 0; i < sh.size; ++i) {
        const RatFunc& v = X[k].coeff(i);
        if (v.is_zero()) continue;
        auto e = sh.unflatten(i);
        os << e[0] << "," << e[1] << "," << field(v.num().str()) << "," << field(v.den().str()) << "\n";
      }
    }
  };
  if (qs.empty())
    table(q_symbol(), "");
  else
    for (const auto& q : qs) table(RatFunc(q), " q=" + q.get_str());
  return os.str();
}

std::string results_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream os;
  os << "# results\nsuite,id,status,expected\n";
  for (const auto& r : reports)
    for (const auto& x : r.results)
      os << r.suite << ",\"" << x.id << "\"," << (x.error.empty() ? (x.pass ? "pass" : "fail") : "error") << ","
         << (x.expect_pass ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace eqs
