#include "eqs/pbw.hpp"

#include <sstream>

#include "eqs/errors.hpp"

namespace eqs {

const PbwSyms& PbwSyms::get() {
  static const PbwSyms s = [] {
    PbwSyms r{};
    r.q = sym("q");
    r.w = sym("w");
    r.x = sym("x");
    r.U = sym("U");
    for (int k = 0; k < kMaxLegs; ++k) r.u[static_cast<std::size_t>(k)] = sym("u" + std::to_string(k + 1));
    return r;
  }();
  return s;
}

int pair_index(int i, int j) {
  if (i == j) throw PreconditionViolation("pair_index on equal legs");
  if (i > j) std::swap(i, j);
  // (0,1)(0,2)(0,3)(1,2)(1,3)(2,3)
  return i * (2 * kMaxLegs - i - 1) / 2 + (j - i - 1);
}

namespace {

int par(uint8_t ef) { return ef == 1 || ef == 2; }
int dcount(uint8_t ef) { return ef == 1 ? 1 : ef == 2 ? -1 : 0; }

struct LegOut {
  uint8_t ef;
  int kind;  // 0: +1, 1: Z, 2: -1
};

// e^a f^b * e^a' f^b' in one leg, with {e,f} = Z, e^2 = f^2 = 0.
const std::vector<LegOut>& leg_table(uint8_t x, uint8_t y) {
  static const std::vector<LegOut> T[4][4] = {
      {{{0, 0}}, {{1, 0}}, {{2, 0}}, {{3, 0}}},
      {{{1, 0}}, {}, {{3, 0}}, {}},
      {{{2, 0}}, {{0, 1}, {3, 2}}, {}, {{2, 1}}},
      {{{3, 0}}, {{1, 1}}, {}, {{3, 1}}},
  };
  return T[x][y];
}

const RatFunc& Zk(int k) {
  static const std::array<RatFunc, kMaxLegs> Z = [] {
    const auto& s = PbwSyms::get();
    std::array<RatFunc, kMaxLegs> r;
    RatFunc q = RatFunc::sym(s.q);
    RatFunc qd = q - q.inv();
    for (int i = 0; i < kMaxLegs; ++i) {
      RatFunc u = RatFunc::sym(s.u[static_cast<std::size_t>(i)]);
      r[static_cast<std::size_t>(i)] = (u - u.inv()) / qd;
    }
    return r;
  }();
  return Z[static_cast<std::size_t>(k)];
}

void add_into(std::map<PKey, RatFunc>& out, const PKey& k, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

void mul_terms(std::map<PKey, RatFunc>& out, int n, const PKey& A, const RatFunc& ca, const PKey& B,
               const RatFunc& cb) {
  const auto& s = PbwSyms::get();
  std::array<const std::vector<LegOut>*, kMaxLegs> outs{};
  for (int k = 0; k < n; ++k) {
    outs[static_cast<std::size_t>(k)] = &leg_table(A.ef[static_cast<std::size_t>(k)], B.ef[static_cast<std::size_t>(k)]);
    if (outs[static_cast<std::size_t>(k)]->empty()) return;
  }
  Exp mono{};
  int sign = 0;
  for (int k = 0; k < n; ++k) {
    std::size_t kk = static_cast<std::size_t>(k);
    mono[static_cast<std::size_t>(s.q)] = static_cast<int16_t>(mono[static_cast<std::size_t>(s.q)] - 2 * B.m[kk] * dcount(A.ef[kk]));
    for (int j = 0; j < k; ++j) sign ^= par(A.ef[kk]) & par(B.ef[static_cast<std::size_t>(j)]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int g = A.g[static_cast<std::size_t>(pair_index(i, j))];
      if (!g) continue;
      auto& ui = mono[static_cast<std::size_t>(s.u[static_cast<std::size_t>(i)])];
      auto& uj = mono[static_cast<std::size_t>(s.u[static_cast<std::size_t>(j)])];
      uj = static_cast<int16_t>(uj - g * dcount(B.ef[static_cast<std::size_t>(i)]));
      ui = static_cast<int16_t>(ui - g * dcount(B.ef[static_cast<std::size_t>(j)]));
    }
  RatFunc base = ca * cb;
  if (!exp_is_zero(mono)) base = base * RatFunc(MPoly::mono(mono, Rat(1)));
  if (sign) base = -base;
  PKey R;
  for (int k = 0; k < n; ++k) R.m[static_cast<std::size_t>(k)] = static_cast<int16_t>(A.m[static_cast<std::size_t>(k)] + B.m[static_cast<std::size_t>(k)]);
  for (int p = 0; p < kPairs; ++p) R.g[static_cast<std::size_t>(p)] = static_cast<int16_t>(A.g[static_cast<std::size_t>(p)] + B.g[static_cast<std::size_t>(p)]);
  // Expand the per-leg alternatives.
  std::function<void(int, const RatFunc&)> rec = [&](int k, const RatFunc& c) {
    if (k == n) {
      add_into(out, R, c);
      return;
    }
    for (const auto& o : *outs[static_cast<std::size_t>(k)]) {
      R.ef[static_cast<std::size_t>(k)] = o.ef;
      if (o.kind == 0) rec(k + 1, c);
      else if (o.kind == 1) rec(k + 1, c * Zk(k));
      else rec(k + 1, -c);
    }
  };
  rec(0, base);
}

bool umap_is_identity(const UMap& M) {
  for (int i = 0; i < kMaxLegs; ++i)
    for (int j = 0; j < kMaxLegs; ++j)
      if (M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != (i == j)) return false;
  return true;
}

UMap umap_identity() {
  UMap M{};
  for (int i = 0; i < kMaxLegs; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return M;
}

UMap umap_zero() { return UMap{}; }

void set_g(PKey& k, int i, int j, int g) {
  int p = pair_index(i, j);
  k.g[static_cast<std::size_t>(p)] = static_cast<int16_t>(k.g[static_cast<std::size_t>(p)] + g);
}

TElem one_leg(uint8_t ef, int m, const RatFunc& c) {
  TElem r(1);
  PKey k;
  k.ef[0] = ef;
  k.m[0] = static_cast<int16_t>(m);
  r.add_term(k, c);
  return r;
}

// Delta(t_ex^m e^a f^b) as a 2-leg element.
TElem delta_mono(int m, uint8_t ef) {
  const auto& s = PbwSyms::get();
  TElem d(2);
  PKey k;
  k.m[0] = k.m[1] = static_cast<int16_t>(m);
  d.add_term(k, RatFunc(1L));
  if (ef & 1) {
    TElem de = TElem::gen(2, 0, "e") + TElem::gen(2, 1, "e") * RatFunc::sym(s.u[0]);
    d = d * de;
  }
  if (ef & 2) {
    TElem df = TElem::gen(2, 0, "f") * RatFunc::sym(s.u[1], -1) + TElem::gen(2, 1, "f");
    d = d * df;
  }
  return d;
}

// S(t_ex^m e^a f^b) = S(e^a f^b) t_ex^{-m} as a 1-leg element.
TElem antipode_mono(int m, uint8_t ef) {
  const auto& s = PbwSyms::get();
  RatFunc u = RatFunc::sym(s.u[0]);
  TElem r(1);
  switch (ef) {
    case 0: r = one_leg(0, 0, RatFunc(1L)); break;
    case 1: r = one_leg(1, 0, -u.inv()); break;
    case 2: r = one_leg(2, 0, -u); break;
    default: r = one_leg(3, 0, RatFunc(1L)) - one_leg(0, 0, Zk(0)); break;
  }
  return r * one_leg(0, -m, RatFunc(1L));
}

}  // namespace

RatFunc subst_u(const RatFunc& c, const UMap& M) {
  if (umap_is_identity(M)) return c;
  const auto& s = PbwSyms::get();
  return c.map_exps([&](const Exp& e) {
    Exp r = e;
    for (int i = 0; i < kMaxLegs; ++i) r[static_cast<std::size_t>(s.u[static_cast<std::size_t>(i)])] = 0;
    for (int i = 0; i < kMaxLegs; ++i) {
      int ei = e[static_cast<std::size_t>(s.u[static_cast<std::size_t>(i)])];
      if (!ei) continue;
      for (int j = 0; j < kMaxLegs; ++j) {
        int mij = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (mij) {
          auto& t = r[static_cast<std::size_t>(s.u[static_cast<std::size_t>(j)])];
          t = static_cast<int16_t>(t + ei * mij);
        }
      }
    }
    return r;
  });
}

TElem TElem::scalar(int legs, const RatFunc& c) {
  TElem r(legs);
  r.add_term(PKey{}, c);
  return r;
}

TElem TElem::gen(int legs, int leg, const std::string& g, int power) {
  if (leg < 0 || leg >= legs) throw ConfigError("generator leg out of range");
  PKey k;
  RatFunc c(1L);
  if (g == "e") k.ef[static_cast<std::size_t>(leg)] = 1;
  else if (g == "f") k.ef[static_cast<std::size_t>(leg)] = 2;
  else if (g == "tex") k.m[static_cast<std::size_t>(leg)] = static_cast<int16_t>(power);
  else if (g == "t") c = RatFunc::sym(PbwSyms::get().u[static_cast<std::size_t>(leg)], power);
  else throw ConfigError("unknown generator '" + g + "'");
  TElem r(legs);
  r.add_term(k, c);
  return r;
}

TElem TElem::G(int legs, int i, int j, int power) {
  if (i < 0 || j < 0 || i >= legs || j >= legs || i == j) throw ConfigError("bad G legs");
  PKey k;
  set_g(k, i, j, power);
  TElem r(legs);
  r.add_term(k, RatFunc(1L));
  return r;
}

int TElem::parity() const {
  int p = -2;
  for (const auto& [k, c] : t_) {
    int s = 0;
    for (int i = 0; i < n_; ++i) s ^= par(k.ef[static_cast<std::size_t>(i)]);
    if (p == -2) p = s;
    else if (p != s) return -1;
  }
  return p == -2 ? 0 : p;
}

RatFunc TElem::scalar_part() const {
  auto it = t_.find(PKey{});
  return it == t_.end() ? RatFunc() : it->second;
}

void TElem::add_term(const PKey& k, const RatFunc& c) { add_into(t_, k, c); }

TElem& TElem::operator+=(const TElem& o) {
  if (n_ != o.n_) throw ConfigError("adding elements with different numbers of legs");
  for (const auto& [k, c] : o.t_) add_into(t_, k, c);
  return *this;
}

TElem& TElem::operator-=(const TElem& o) {
  if (n_ != o.n_) throw ConfigError("subtracting elements with different numbers of legs");
  for (const auto& [k, c] : o.t_) add_into(t_, k, -c);
  return *this;
}

TElem TElem::operator-() const {
  TElem r(n_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

TElem operator*(const TElem& a, const TElem& b) {
  if (a.n_ != b.n_) throw ConfigError("multiplying elements with different numbers of legs");
  TElem r(a.n_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) mul_terms(r.t_, a.n_, ka, ca, kb, cb);
  TermBudget::check(r.t_.size(), "tensor element");
  return r;
}

TElem operator*(const TElem& a, const RatFunc& c) {
  TElem r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a.t_) r.t_.emplace(k, x * c);
  return r;
}

TElem TElem::map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const {
  TElem r(n_);
  for (const auto& [k, c] : t_) r.add_term(k, f(c));
  return r;
}

std::string TElem::term_str(const PKey& k) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    if (i) os << " | ";
    std::size_t ii = static_cast<std::size_t>(i);
    bool any = false;
    if (k.m[ii]) { os << "tex^" << k.m[ii]; any = true; }
    if (k.ef[ii] & 1) { os << (any ? " " : "") << "e"; any = true; }
    if (k.ef[ii] & 2) { os << (any ? " " : "") << "f"; any = true; }
    if (!any) os << "1";
  }
  os << "]";
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      int g = k.g[static_cast<std::size_t>(pair_index(i, j))];
      if (g) os << " G" << i + 1 << j + 1 << "^" << g;
    }
  return os.str();
}

std::string TElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") " << term_str(k);
  }
  return os.str();
}

TElem coproduct(const TElem& x, int leg) {
  const int n = x.legs();
  if (leg < 0 || leg >= n) throw ConfigError("coproduct leg out of range");
  if (n + 1 > kMaxLegs) throw ResourceLimit("coproduct would exceed the supported number of legs");
  UMap M = umap_zero();
  for (int j = 0; j < n; ++j) {
    if (j < leg) M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    else if (j == leg) M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j + 1)] = 1;
    else M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j + 1)] = 1;
  }
  UMap Md = umap_zero();
  Md[0][static_cast<std::size_t>(leg)] = 1;
  Md[1][static_cast<std::size_t>(leg + 1)] = 1;
  std::map<std::pair<int, int>, TElem> cache;
  TElem r(n + 1);
  auto shift = [&](int j) { return j < leg ? j : j + 1; };
  for (const auto& [k, c] : x.terms()) {
    std::size_t L = static_cast<std::size_t>(leg);
    auto key = std::make_pair(int(k.m[L]), int(k.ef[L]));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, delta_mono(k.m[L], k.ef[L])).first;
    RatFunc c2 = subst_u(c, M);
    PKey base;
    for (int j = 0; j < n; ++j) {
      if (j == leg) continue;
      base.m[static_cast<std::size_t>(shift(j))] = k.m[static_cast<std::size_t>(j)];
      base.ef[static_cast<std::size_t>(shift(j))] = k.ef[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int g = k.g[static_cast<std::size_t>(pair_index(i, j))];
        if (!g) continue;
        if (i == leg) {
          set_g(base, leg, shift(j), g);
          set_g(base, leg + 1, shift(j), g);
        } else if (j == leg) {
          set_g(base, shift(i), leg, g);
          set_g(base, shift(i), leg + 1, g);
        } else {
          set_g(base, shift(i), shift(j), g);
        }
      }
    for (const auto& [dk, dc] : it->second.terms()) {
      PKey nk = base;
      nk.m[L] = dk.m[0];
      nk.ef[L] = dk.ef[0];
      nk.m[L + 1] = dk.m[1];
      nk.ef[L + 1] = dk.ef[1];
      r.add_term(nk, c2 * subst_u(dc, Md));
    }
  }
  return r;
}

TElem counit(const TElem& x, int leg) {
  const int n = x.legs();
  if (leg < 0 || leg >= n) throw ConfigError("counit leg out of range");
  UMap M = umap_zero();
  for (int j = 0; j < n; ++j) {
    if (j < leg) M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    else if (j > leg) M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j - 1)] = 1;
  }
  auto shift = [&](int j) { return j < leg ? j : j - 1; };
  TElem r(n - 1);
  for (const auto& [k, c] : x.terms()) {
    if (k.ef[static_cast<std::size_t>(leg)]) continue;
    PKey nk;
    for (int j = 0; j < n; ++j) {
      if (j == leg) continue;
      nk.m[static_cast<std::size_t>(shift(j))] = k.m[static_cast<std::size_t>(j)];
      nk.ef[static_cast<std::size_t>(shift(j))] = k.ef[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int g = k.g[static_cast<std::size_t>(pair_index(i, j))];
        if (g && i != leg && j != leg) set_g(nk, shift(i), shift(j), g);
      }
    r.add_term(nk, subst_u(c, M));
  }
  return r;
}

TElem antipode(const TElem& x, int leg) {
  const int n = x.legs();
  if (leg < 0 || leg >= n) throw ConfigError("antipode leg out of range");
  UMap M = umap_identity();
  M[static_cast<std::size_t>(leg)][static_cast<std::size_t>(leg)] = -1;
  UMap Ms = umap_zero();
  Ms[0][static_cast<std::size_t>(leg)] = 1;
  TElem r(n);
  std::size_t L = static_cast<std::size_t>(leg);
  for (const auto& [k, c] : x.terms()) {
    for (int j = 0; j < n; ++j)
      if (j != leg && k.g[static_cast<std::size_t>(pair_index(leg, j))])
        throw PreconditionViolation("antipode on a leg carrying q^{-T}");
    TElem sx = antipode_mono(k.m[L], k.ef[L]);
    RatFunc c2 = subst_u(c, M);
    for (const auto& [sk, sc] : sx.terms()) {
      PKey nk = k;
      nk.m[L] = sk.m[0];
      nk.ef[L] = sk.ef[0];
      r.add_term(nk, c2 * subst_u(sc, Ms));
    }
  }
  return r;
}

TElem merge_legs(const TElem& x, int leg) {
  const int n = x.legs();
  if (leg < 0 || leg + 1 >= n) throw ConfigError("merge_legs out of range");
  UMap M = umap_zero();
  for (int j = 0; j < n; ++j) {
    if (j <= leg) M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    else M[static_cast<std::size_t>(j)][static_cast<std::size_t>(j - 1)] = 1;
  }
  UMap Ms = umap_zero();
  Ms[0][static_cast<std::size_t>(leg)] = 1;
  auto shift = [&](int j) { return j <= leg ? j : j - 1; };
  TElem r(n - 1);
  std::size_t L = static_cast<std::size_t>(leg);
  for (const auto& [k, c] : x.terms()) {
    for (int p = 0; p < kPairs; ++p)
      if (k.g[static_cast<std::size_t>(p)]) throw PreconditionViolation("merge_legs on an element with q^{-T}");
    TElem prod = one_leg(k.ef[L], k.m[L], RatFunc(1L)) * one_leg(k.ef[L + 1], k.m[L + 1], RatFunc(1L));
    RatFunc c2 = subst_u(c, M);
    PKey base;
    for (int j = 0; j < n; ++j) {
      if (j == leg || j == leg + 1) continue;
      base.m[static_cast<std::size_t>(shift(j))] = k.m[static_cast<std::size_t>(j)];
      base.ef[static_cast<std::size_t>(shift(j))] = k.ef[static_cast<std::size_t>(j)];
    }
    for (const auto& [pk, pc] : prod.terms()) {
      PKey nk = base;
      nk.m[L] = pk.m[0];
      nk.ef[L] = pk.ef[0];
      r.add_term(nk, c2 * subst_u(pc, Ms));
    }
  }
  return r;
}

TElem place(const TElem& x, const std::vector<int>& targets, int n) {
  const int m = x.legs();
  if (static_cast<int>(targets.size()) != m || m > n || n > kMaxLegs) throw ConfigError("place: bad target list");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int t : targets) {
    if (t < 0 || t >= n || used[static_cast<std::size_t>(t)]) throw ConfigError("place: bad target leg");
    used[static_cast<std::size_t>(t)] = true;
  }
  UMap M = umap_zero();
  for (int i = 0; i < m; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(targets[static_cast<std::size_t>(i)])] = 1;
  TElem r(n);
  for (const auto& [k, c] : x.terms()) {
    PKey nk;
    int sign = 0;
    for (int i = 0; i < m; ++i) {
      std::size_t ti = static_cast<std::size_t>(targets[static_cast<std::size_t>(i)]);
      nk.m[ti] = k.m[static_cast<std::size_t>(i)];
      nk.ef[ti] = k.ef[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        if (targets[static_cast<std::size_t>(i)] > targets[static_cast<std::size_t>(j)])
          sign ^= par(k.ef[static_cast<std::size_t>(i)]) & par(k.ef[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        int g = k.g[static_cast<std::size_t>(pair_index(i, j))];
        if (g) set_g(nk, targets[static_cast<std::size_t>(i)], targets[static_cast<std::size_t>(j)], g);
      }
    RatFunc c2 = subst_u(c, M);
    r.add_term(nk, sign ? -c2 : c2);
  }
  return r;
}

TElem permute(const TElem& x, const std::vector<int>& sigma) {
  const int n = x.legs();
  if (static_cast<int>(sigma.size()) != n) throw ConfigError("permute: length mismatch");
  std::vector<int> targets(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    int f = sigma[static_cast<std::size_t>(k)] - 1;
    if (f < 0 || f >= n || targets[static_cast<std::size_t>(f)] >= 0) throw ConfigError("permute: not a permutation");
    targets[static_cast<std::size_t>(f)] = k;
  }
  return place(x, targets, n);
}

TElem inverse(const TElem& x) {
  if (x.is_zero()) throw NonInvertible("inverse of zero");
  const int n = x.legs();
  const auto& g0 = x.terms().begin()->first.g;
  for (const auto& [k, c] : x.terms())
    if (k.g != g0) throw NonInvertible("inverse: mixed q^{-T} monomials");
  TElem Ginv = TElem::one(n);
  {
    PKey k;
    for (int p = 0; p < kPairs; ++p) k.g[static_cast<std::size_t>(p)] = static_cast<int16_t>(-g0[static_cast<std::size_t>(p)]);
    Ginv = TElem(n);
    Ginv.add_term(k, RatFunc(1L));
  }
  TElem Y = x * Ginv;
  RatFunc c0 = Y.scalar_part();
  if (c0.is_zero()) throw NonInvertible("inverse: vanishing scalar part");
  RatFunc ic = c0.inv();
  TElem N = Y * ic - TElem::one(n);
  TElem mN = -N;
  TElem sum = TElem::one(n);
  TElem pw = TElem::one(n);
  for (int it = 0;; ++it) {
    if (it > 16) throw NonInvertible("inverse: correction term is not nilpotent");
    pw = pw * mN;
    if (pw.is_zero()) break;
    sum += pw;
  }
  return Ginv * (sum * ic);
}

}  // namespace eqs
