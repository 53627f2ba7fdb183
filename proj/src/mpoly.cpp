#include "eqs/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "eqs/errors.hpp"

namespace eqs {

thread_local std::size_t TermBudget::limit = 0;

namespace {
std::mutex g_sym_mu;
std::vector<std::string>& sym_table() {
  static std::vector<std::string> t;
  return t;
}
}  // namespace

int sym(std::string_view name) {
  std::lock_guard<std::mutex> lk(g_sym_mu);
  auto& t = sym_table();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == name) return static_cast<int>(i);
  if (static_cast<int>(t.size()) >= kMaxVars)
    throw ResourceLimit("too many coefficient symbols (max " + std::to_string(kMaxVars) + ")");
  t.emplace_back(name);
  return static_cast<int>(t.size()) - 1;
}

const std::string& sym_name(int idx) {
  std::lock_guard<std::mutex> lk(g_sym_mu);
  return sym_table().at(static_cast<std::size_t>(idx));
}

int sym_count() {
  std::lock_guard<std::mutex> lk(g_sym_mu);
  return static_cast<int>(sym_table().size());
}

Exp exp_add(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kMaxVars; ++i) {
    int v = a[i] + b[i];
    if (v > 32000 || v < -32000) throw ResourceLimit("exponent overflow");
    r[i] = static_cast<int16_t>(v);
  }
  return r;
}

Exp exp_sub(const Exp& a, const Exp& b) {
  Exp r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<int16_t>(a[i] - b[i]);
  return r;
}

bool exp_is_zero(const Exp& e) {
  for (auto x : e)
    if (x) return false;
  return true;
}

MPoly::MPoly(long c) {
  if (c != 0) t_.push_back({Exp{}, Rat(c)});
}

MPoly::MPoly(const Rat& c) {
  if (c != 0) t_.push_back({Exp{}, c});
}

MPoly MPoly::var(int v, int pow) {
  Exp e{};
  e[v] = static_cast<int16_t>(pow);
  return mono(e, Rat(1));
}

MPoly MPoly::mono(const Exp& e, const Rat& c) {
  MPoly p;
  if (c != 0) p.t_.push_back({e, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<MTerm> t) {
  MPoly p;
  p.t_ = std::move(t);
  p.canonicalize();
  return p;
}

void MPoly::canonicalize() {
  std::sort(t_.begin(), t_.end(), [](const MTerm& a, const MTerm& b) { return a.e < b.e; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < t_.size();) {
    std::size_t j = i + 1;
    Rat c = t_[i].c;
    while (j < t_.size() && t_[j].e == t_[i].e) c += t_[j++].c;
    if (c != 0) {
      t_[w].e = t_[i].e;
      t_[w].c = std::move(c);
      ++w;
    }
    i = j;
  }
  t_.resize(w);
}

bool MPoly::is_const() const { return t_.empty() || (t_.size() == 1 && exp_is_zero(t_[0].e)); }

Rat MPoly::const_value() const { return t_.empty() ? Rat(0) : t_[0].c; }

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

namespace {
// Merge two sorted term lists; sign = +1 or -1 applied to b.
std::vector<MTerm> merge(const std::vector<MTerm>& a, const std::vector<MTerm>& b, int sign) {
  std::vector<MTerm> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].e < a[i].e) {
      r.push_back(b[j++]);
      if (sign < 0) r.back().c = -r.back().c;
    } else {
      Rat c = sign > 0 ? Rat(a[i].c + b[j].c) : Rat(a[i].c - b[j].c);
      if (c != 0) r.push_back({a[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}
}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  t_ = merge(t_, o.t_, 1);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  t_ = merge(t_, o.t_, -1);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& t : t_) t.c *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    r.t_.push_back({exp_add(a.t_[0].e, b.t_[0].e), a.t_[0].c * b.t_[0].c});
    return r;
  }
  const MPoly& big = a.t_.size() >= b.t_.size() ? a : b;
  const MPoly& small = a.t_.size() >= b.t_.size() ? b : a;
  if (small.t_.size() > 4) {
    std::vector<MTerm> all;
    all.reserve(a.t_.size() * b.t_.size());
    for (const auto& s : small.t_)
      for (const auto& t : big.t_) all.push_back({exp_add(s.e, t.e), s.c * t.c});
    r = MPoly::from_terms(std::move(all));
    TermBudget::check(r.t_.size(), "polynomial product");
    return r;
  }
  // Few rows: merging the already sorted rows is cheaper than a full sort.
  for (const auto& s : small.t_) {
    std::vector<MTerm> row;
    row.reserve(big.t_.size());
    for (const auto& t : big.t_) row.push_back({exp_add(s.e, t.e), s.c * t.c});
    r.t_ = r.t_.empty() ? std::move(row) : merge(r.t_, row, 1);
  }
  TermBudget::check(r.t_.size(), "polynomial product");
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].e != b.t_[i].e || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly r(1L), b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

int MPoly::min_exp(int v) const {
  int m = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.e[v] < m) m = t.e[v];
    first = false;
  }
  return m;
}

int MPoly::max_exp(int v) const {
  int m = 0;
  bool first = true;
  for (const auto& t : t_) {
    if (first || t.e[v] > m) m = t.e[v];
    first = false;
  }
  return m;
}

Exp MPoly::min_exps() const {
  Exp m{};
  for (int v = 0; v < kMaxVars; ++v) m[v] = static_cast<int16_t>(min_exp(v));
  return m;
}

MPoly MPoly::shifted(const Exp& by) const {
  MPoly r = *this;
  for (auto& t : r.t_) t.e = exp_add(t.e, by);
  return r;  // a common shift preserves lex order
}

MPoly MPoly::map_exps(const std::function<Exp(const Exp&)>& f) const {
  std::vector<MTerm> t;
  t.reserve(t_.size());
  for (const auto& x : t_) t.push_back({f(x.e), x.c});
  return from_terms(std::move(t));
}

MPoly MPoly::eval(int v, const Rat& x) const {
  std::vector<MTerm> t;
  t.reserve(t_.size());
  for (const auto& term : t_) {
    Exp e = term.e;
    int k = e[v];
    e[v] = 0;
    if (k != 0 && x == 0) {
      if (k < 0) throw NonInvertible("evaluation of a negative power at 0");
      continue;
    }
    t.push_back({e, term.c * rat_pow(x, k)});
  }
  return from_terms(std::move(t));
}

MPoly MPoly::reduce_square(int s, const MPoly& sq) const {
  bool need = false;
  for (const auto& t : t_)
    if (t.e[s] >= 2 || t.e[s] < 0) need = true;
  if (!need) return *this;
  MPoly r;
  for (const auto& t : t_) {
    int k = t.e[s];
    if (k < 0) throw PreconditionViolation("negative power of a square-root symbol");
    Exp e = t.e;
    e[s] = static_cast<int16_t>(k % 2);
    r += MPoly::mono(e, t.c) * sq.pow(static_cast<unsigned>(k / 2));
  }
  return r;
}

std::size_t MPoly::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& t : t_) {
    for (auto x : t.e) h = (h ^ static_cast<std::size_t>(static_cast<uint16_t>(x))) * 1099511628211ull;
    h = (h ^ std::hash<std::string>()(t.c.get_str())) * 1099511628211ull;
  }
  return h;
}

std::string MPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first reads more naturally.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Rat& c = it->c;
    bool unit = exp_is_zero(it->e);
    Rat ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (unit || ac != 1) {
      os << ac.get_str();
      wrote = true;
    }
    for (int v = 0; v < kMaxVars; ++v) {
      int k = it->e[v];
      if (!k) continue;
      if (wrote) os << "*";
      os << sym_name(v);
      if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
      wrote = true;
    }
  }
  return os.str();
}

int compare(const MPoly& a, const MPoly& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].e != y[i].e) return x[i].e < y[i].e ? -1 : 1;
    int c = cmp(x[i].c, y[i].c);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

bool divexact(const MPoly& a, const MPoly& b, MPoly& quot) {
  if (b.is_zero()) throw NonInvertible("division by zero polynomial");
  quot = MPoly();
  if (a.is_zero()) return true;
  Exp shift{};
  for (int v = 0; v < kMaxVars; ++v) {
    int m = a.min_exp(v);
    shift[v] = static_cast<int16_t>(m < 0 ? -m : 0);
  }
  MPoly r = a.shifted(shift);
  const MTerm& lb = b.lead();
  std::vector<MTerm> q;
  while (!r.is_zero()) {
    const MTerm& lr = r.lead();
    Exp d = exp_sub(lr.e, lb.e);
    for (auto x : d)
      if (x < 0) return false;
    Rat c = lr.c / lb.c;
    MPoly m = MPoly::mono(d, c);
    r -= b * m;
    q.push_back({d, c});
    if (q.size() > 100000) throw ResourceLimit("exact division did not terminate");
  }
  Exp neg{};
  for (int v = 0; v < kMaxVars; ++v) neg[v] = static_cast<int16_t>(-shift[v]);
  quot = MPoly::from_terms(std::move(q)).shifted(neg);
  return true;
}

void split_poly(const MPoly& p, Rat& content, Exp& mono, MPoly& prim) {
  if (p.is_zero()) throw NonInvertible("split of zero polynomial");
  mono = p.min_exps();
  mpz_class g = 0, l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  }
  content = Rat(g, l);
  content.canonicalize();
  if (p.lead().c < 0) content = -content;
  Exp neg{};
  for (int v = 0; v < kMaxVars; ++v) neg[v] = static_cast<int16_t>(-mono[v]);
  prim = p.shifted(neg) * (Rat(1) / content);
}

}  // namespace eqs
