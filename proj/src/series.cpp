#include "eqs/series.hpp"

#include <sstream>

#include "eqs/errors.hpp"

namespace eqs {

ShapePtr SeriesShape::make(std::vector<std::string> vars, std::vector<int> bound) {
  if (vars.size() != bound.size()) throw ConfigError("series variables and bounds differ in length");
  auto s = std::make_shared<SeriesShape>();
  s->vars = std::move(vars);
  s->bound = std::move(bound);
  s->stride.assign(s->vars.size(), 1);
  for (int i = static_cast<int>(s->vars.size()) - 1; i >= 0; --i) {
    if (s->bound[i] < 0) throw ConfigError("negative truncation order for " + s->vars[i]);
    s->stride[i] = s->size;
    s->size *= s->bound[i] + 1;
  }
  return s;
}

int SeriesShape::index_of(const std::string& v) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == v) return static_cast<int>(i);
  throw ConfigError("unknown series variable '" + v + "'");
}

std::vector<int> SeriesShape::unflatten(int flat) const {
  std::vector<int> e(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    e[i] = flat / stride[i];
    flat %= stride[i];
  }
  return e;
}

int SeriesShape::flatten(const std::vector<int>& e) const {
  int f = 0;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] < 0 || e[i] > bound[i]) return -1;
    f += e[i] * stride[i];
  }
  return f;
}

Series::Series(ShapePtr sh) : sh_(std::move(sh)), c_(static_cast<std::size_t>(sh_->size)) {}

Series Series::constant(ShapePtr sh, const RatFunc& c) {
  Series s(std::move(sh));
  s.c_[0] = c;
  return s;
}

Series Series::monomial(ShapePtr sh, const std::vector<int>& e, const RatFunc& c) {
  Series s(std::move(sh));
  int f = s.sh_->flatten(e);
  if (f >= 0) s.c_[static_cast<std::size_t>(f)] = c;
  return s;
}

Series Series::var(ShapePtr sh, const std::string& v, const RatFunc& c) {
  std::vector<int> e(sh->vars.size(), 0);
  e[static_cast<std::size_t>(sh->index_of(v))] = 1;
  return monomial(std::move(sh), e, c);
}

RatFunc Series::coeff(const std::vector<int>& e) const {
  int f = sh_->flatten(e);
  return f < 0 ? RatFunc() : c_[static_cast<std::size_t>(f)];
}

void Series::set(const std::vector<int>& e, const RatFunc& c) {
  int f = sh_->flatten(e);
  if (f < 0) throw PreconditionViolation("series exponent outside truncation bounds");
  c_[static_cast<std::size_t>(f)] = c;
}

bool Series::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<std::pair<std::vector<int>, RatFunc>> Series::first_nonzero() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return std::make_pair(sh_->unflatten(static_cast<int>(i)), c_[i]);
  return std::nullopt;
}

std::size_t Series::nnz() const {
  std::size_t n = 0;
  for (const auto& c : c_)
    if (!c.is_zero()) ++n;
  return n;
}

void Series::check_shape(const Series& o) const {
  if (!sh_ || !o.sh_) throw ConfigError("operation on an uninitialised series");
  if (sh_ != o.sh_ && !sh_->same(*o.sh_))
    throw ConfigError("series with mismatched variables or truncation bounds");
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.c_)
    if (!c.is_zero()) c = -c;
  return r;
}

Series& Series::operator+=(const Series& o) {
  check_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_shape(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  return *this;
}

Series& Series::operator*=(const RatFunc& c) {
  if (c.is_one()) return *this;
  for (auto& x : c_)
    if (!x.is_zero()) x = x * c;
  return *this;
}

Series series_mul(const Series& a, const Series& b) {
  a.check_shape(b);
  const SeriesShape& sh = *a.sh_;
  Series r(a.sh_);
  std::vector<int> ia, ib;
  for (int i = 0; i < sh.size; ++i) {
    if (!a.c_[static_cast<std::size_t>(i)].is_zero()) ia.push_back(i);
    if (!b.c_[static_cast<std::size_t>(i)].is_zero()) ib.push_back(i);
  }
  if (ia.empty() || ib.empty()) return r;
  const std::size_t nv = sh.vars.size();
  std::vector<std::vector<int>> ea(ia.size()), eb(ib.size());
  for (std::size_t k = 0; k < ia.size(); ++k) ea[k] = sh.unflatten(ia[k]);
  for (std::size_t k = 0; k < ib.size(); ++k) eb[k] = sh.unflatten(ib[k]);
  for (std::size_t x = 0; x < ia.size(); ++x) {
    for (std::size_t y = 0; y < ib.size(); ++y) {
      bool ok = true;
      for (std::size_t v = 0; v < nv && ok; ++v) ok = ea[x][v] + eb[y][v] <= sh.bound[v];
      if (!ok) continue;
      // Flat indices add when the sum stays inside the box.
      r.c_[static_cast<std::size_t>(ia[x] + ib[y])] +=
          a.c_[static_cast<std::size_t>(ia[x])] * b.c_[static_cast<std::size_t>(ib[y])];
    }
  }
  return r;
}

Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

Series Series::pow(unsigned n) const {
  Series r = constant(sh_, RatFunc(1L));
  Series b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Series series_invert(const Series& a) {
  const RatFunc& c0 = a.constant_term();
  if (c0.is_zero()) throw NonInvertible("series with zero constant term is not invertible");
  const SeriesShape& sh = *a.shape();
  RatFunc ic = c0.inv();
  Series b(a.shape());
  // Flat order is compatible with the componentwise partial order, so every
  // b[m - k] with k != 0 is already known when b[m] is computed.
  std::vector<int> nz;
  for (int i = 1; i < sh.size; ++i)
    if (!a.coeff(i).is_zero()) nz.push_back(i);
  std::vector<std::vector<int>> enz;
  for (int i : nz) enz.push_back(sh.unflatten(i));
  b.set(std::vector<int>(sh.vars.size(), 0), ic);
  for (int m = 1; m < sh.size; ++m) {
    std::vector<int> em = sh.unflatten(m);
    RatFunc acc;
    for (std::size_t k = 0; k < nz.size(); ++k) {
      bool ok = true;
      for (std::size_t v = 0; v < em.size() && ok; ++v) ok = enz[k][v] <= em[v];
      if (!ok) continue;
      const RatFunc& bm = b.coeff(m - nz[k]);
      if (!bm.is_zero()) acc += a.coeff(nz[k]) * bm;
    }
    if (!acc.is_zero()) b.add_to(m, -(acc * ic));
  }
  return b;
}

Series series_exp(const Series& a) {
  if (!a.has_zero_constant()) throw PreconditionViolation("series_exp needs a zero constant term");
  int maxdeg = 0;
  for (int b : a.shape()->bound) maxdeg += b;
  Series r = Series::constant(a.shape(), RatFunc(1L));
  Series term = r;
  for (int k = 1; k <= maxdeg; ++k) {
    term = term * a;
    term *= RatFunc(Rat(1, k));
    if (term.is_zero()) break;
    r += term;
  }
  return r;
}

Series Series::subst_scale(const std::string& v, const std::vector<int>& extra) const {
  const SeriesShape& sh = *sh_;
  int iv = sh.index_of(v);
  if (extra.size() != sh.vars.size() || extra[static_cast<std::size_t>(iv)] != 0)
    throw ConfigError("bad substitution monomial");
  Series r(sh_);
  for (int i = 0; i < sh.size; ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    std::vector<int> e = sh.unflatten(i);
    int k = e[static_cast<std::size_t>(iv)];
    for (std::size_t u = 0; u < e.size(); ++u) e[u] += extra[u] * k;
    int f = sh.flatten(e);
    if (f >= 0) r.c_[static_cast<std::size_t>(f)] += c_[static_cast<std::size_t>(i)];
  }
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < sh_->size; ++i) {
    const RatFunc& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    auto e = sh_->unflatten(i);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) os << "*" << sh_->vars[v] << (e[v] != 1 ? "^" + std::to_string(e[v]) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace eqs
