#include "eqs/ratfunc.hpp"

#include <algorithm>

#include "eqs/errors.hpp"

namespace eqs {

namespace {

bool atom_less(const RatFunc::Atom& a, const RatFunc::Atom& b) {
  if (a == b) return false;
  return compare(*a, *b) < 0;
}

bool atom_eq(const RatFunc::Atom& a, const RatFunc::Atom& b) { return a == b || compare(*a, *b) == 0; }

using DenList = std::vector<std::pair<RatFunc::Atom, int>>;

// Strip every atom of `den` that divides `num`, lowering its multiplicity.
void strip(MPoly& num, DenList& den) {
  if (num.is_zero()) return;
  for (auto& [a, k] : den) {
    MPoly q;
    while (k > 0 && divexact(num, *a, q)) {
      num = std::move(q);
      --k;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const auto& x) { return x.second == 0; }), den.end());
}

MPoly expand(const RatFunc::Atom& a, int k) { return a->pow(static_cast<unsigned>(k)); }

}  // namespace

RatFunc RatFunc::frac(const MPoly& n, const MPoly& d) {
  if (d.is_zero()) throw NonInvertible("rational function with zero denominator");
  Rat c;
  Exp m;
  MPoly p;
  split_poly(d, c, m, p);
  Exp neg{};
  for (int v = 0; v < kMaxVars; ++v) neg[v] = static_cast<int16_t>(-m[v]);
  RatFunc r;
  r.num_ = n.shifted(neg) * (Rat(1) / c);
  if (!p.is_const()) {
    r.den_.push_back({std::make_shared<const MPoly>(std::move(p)), 1});
    r.cancel();
  }
  return r;
}

Rat RatFunc::const_value() const {
  if (!is_const()) throw PreconditionViolation("rational function is not a constant: " + str());
  return num_.const_value();
}

void RatFunc::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  strip(num_, den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.empty() && o.den_.empty()) {
    num_ += o.num_;
    return *this;
  }
  bool same = den_.size() == o.den_.size();
  for (std::size_t i = 0; same && i < den_.size(); ++i)
    same = den_[i].second == o.den_[i].second && atom_eq(den_[i].first, o.den_[i].first);
  if (same) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  DenList L;
  MPoly fa(1L), fb(1L);
  std::size_t i = 0, j = 0;
  while (i < den_.size() || j < o.den_.size()) {
    if (j == o.den_.size() || (i < den_.size() && atom_less(den_[i].first, o.den_[j].first))) {
      L.push_back(den_[i]);
      fb = fb * expand(den_[i].first, den_[i].second);
      ++i;
    } else if (i == den_.size() || atom_less(o.den_[j].first, den_[i].first)) {
      L.push_back(o.den_[j]);
      fa = fa * expand(o.den_[j].first, o.den_[j].second);
      ++j;
    } else {
      int ka = den_[i].second, kb = o.den_[j].second;
      L.push_back({den_[i].first, std::max(ka, kb)});
      if (ka < kb) fa = fa * expand(den_[i].first, kb - ka);
      if (kb < ka) fb = fb * expand(den_[i].first, ka - kb);
      ++i;
      ++j;
    }
  }
  num_ = num_ * fa + o.num_ * fb;
  den_ = std::move(L);
  cancel();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  RatFunc r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.den_.empty() && b.den_.empty()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  MPoly an = a.num_, bn = b.num_;
  DenList ad = a.den_, bd = b.den_;
  strip(an, bd);
  strip(bn, ad);
  r.num_ = an * bn;
  std::size_t i = 0, j = 0;
  while (i < ad.size() || j < bd.size()) {
    if (j == bd.size() || (i < ad.size() && atom_less(ad[i].first, bd[j].first))) {
      r.den_.push_back(ad[i++]);
    } else if (i == ad.size() || atom_less(bd[j].first, ad[i].first)) {
      r.den_.push_back(bd[j++]);
    } else {
      r.den_.push_back({ad[i].first, ad[i].second + bd[j].second});
      ++i;
      ++j;
    }
  }
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) { return *this = *this * o; }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw NonInvertible("inverse of zero rational function");
  MPoly top(1L);
  for (const auto& [a, k] : den_) top = top * expand(a, k);
  return frac(top, num_);
}

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc r(1L), b = *this;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

RatFunc RatFunc::map_exps(const std::function<Exp(const Exp&)>& f) const {
  RatFunc r(num_.map_exps(f));
  for (const auto& [a, k] : den_) r /= RatFunc(a->map_exps(f)).pow(k);
  return r;
}

RatFunc RatFunc::eval(int v, const Rat& x) const {
  RatFunc r(num_.eval(v, x));
  for (const auto& [a, k] : den_) {
    MPoly e = a->eval(v, x);
    if (e.is_zero())
      throw SingularParameter("denominator " + a->str() + " vanishes at " + sym_name(v) + "=" + x.get_str());
    r /= RatFunc(e).pow(k);
  }
  return r;
}

RatFunc RatFunc::reduce_square(int s, const MPoly& sq) const {
  for (const auto& [a, k] : den_)
    if (a->max_exp(s) != 0 || a->min_exp(s) != 0)
      throw PreconditionViolation("square-root symbol inside a denominator");
  RatFunc r = *this;
  r.num_ = num_.reduce_square(s, sq);
  r.cancel();
  return r;
}

bool RatFunc::depends_on(int v) const {
  if (num_.max_exp(v) != 0 || num_.min_exp(v) != 0) return true;
  for (const auto& [a, k] : den_)
    if (a->max_exp(v) != 0) return true;
  return false;
}

MPoly RatFunc::den() const {
  MPoly d(1L);
  for (const auto& [a, k] : den_) d = d * expand(a, k);
  return d;
}

std::size_t RatFunc::size() const {
  std::size_t n = num_.size();
  for (const auto& [a, k] : den_) n += a->size();
  return n;
}

std::string RatFunc::str() const {
  if (den_.empty()) return num_.str();
  std::string s = "(" + num_.str() + ")/(";
  bool first = true;
  for (const auto& [a, k] : den_) {
    if (!first) s += "*";
    first = false;
    s += "(" + a->str() + ")";
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s + ")";
}

}  // namespace eqs
