#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqs/errors.hpp"
#include "eqs/series.hpp"

namespace eqs {

template <class T>
struct RingOps;

template <>
struct RingOps<RatFunc> {
  static RatFunc one_like(const RatFunc&) { return RatFunc(1L); }
  static RatFunc from(const RatFunc&, const RatFunc& c) { return c; }
  static bool zero_const(const RatFunc& x) { return x.is_zero(); }
  static RatFunc const_part(const RatFunc& x) { return x; }
};

template <>
struct RingOps<Series> {
  static Series one_like(const Series& z) { return Series::constant(z.shape(), RatFunc(1L)); }
  static Series from(const Series& z, const RatFunc& c) { return Series::constant(z.shape(), c); }
  static bool zero_const(const Series& x) { return x.has_zero_constant(); }
  static RatFunc const_part(const Series& x) { return x.constant_term(); }
};

// Parity of basis state i of V^{(x)n}, V = C^{1|1} with v1 even, v2 odd.
inline int state_parity(int i) { return __builtin_popcount(static_cast<unsigned>(i)) & 1; }
inline int state_bit(int i, int leg, int n) { return (i >> (n - 1 - leg)) & 1; }

// Dense operator on V^{(x)n}. Basis index bits: leg 0 is the most significant bit.
template <class T>
class SuperOp {
 public:
  SuperOp() = default;
  SuperOp(int legs, const T& zero) : n_(legs), d_(1 << legs), zero_(zero), m_(static_cast<std::size_t>(d_ * d_), zero) {}

  static SuperOp identity(int legs, const T& zero) {
    SuperOp r(legs, zero);
    T one = RingOps<T>::one_like(zero);
    for (int i = 0; i < r.d_; ++i) r(i, i) = one;
    return r;
  }
  // One-leg matrix unit e_{ij}, i, j in {1, 2}.
  static SuperOp unit(int i, int j, const T& zero, const T& coeff) {
    SuperOp r(1, zero);
    r(i - 1, j - 1) = coeff;
    return r;
  }
  static SuperOp unit(int i, int j, const T& zero) { return unit(i, j, zero, RingOps<T>::one_like(zero)); }

  int legs() const { return n_; }
  int dim() const { return d_; }
  const T& zero() const { return zero_; }
  T& operator()(int i, int j) { return m_[static_cast<std::size_t>(i * d_ + j)]; }
  const T& operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * d_ + j)]; }

  bool is_zero() const {
    for (const auto& x : m_)
      if (!x.is_zero()) return false;
    return true;
  }
  // 0 or 1 for homogeneous operators, -1 if mixed, 0 for the zero operator.
  int parity() const {
    int p = -2;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (!(*this)(i, j).is_zero()) {
          int pij = state_parity(i) ^ state_parity(j);
          if (p == -2) p = pij;
          else if (p != pij) return -1;
        }
    return p == -2 ? 0 : p;
  }
  std::optional<std::pair<int, int>> first_nonzero() const {
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (!(*this)(i, j).is_zero()) return std::make_pair(i, j);
    return std::nullopt;
  }

  SuperOp& operator+=(const SuperOp& o) {
    check(o);
    for (std::size_t k = 0; k < m_.size(); ++k)
      if (!o.m_[k].is_zero()) m_[k] += o.m_[k];
    return *this;
  }
  SuperOp& operator-=(const SuperOp& o) {
    check(o);
    for (std::size_t k = 0; k < m_.size(); ++k)
      if (!o.m_[k].is_zero()) m_[k] -= o.m_[k];
    return *this;
  }
  friend SuperOp operator+(SuperOp a, const SuperOp& b) { return a += b; }
  friend SuperOp operator-(SuperOp a, const SuperOp& b) { return a -= b; }
  SuperOp operator-() const {
    SuperOp r = *this;
    for (auto& x : r.m_)
      if (!x.is_zero()) x = -x;
    return r;
  }
  template <class S>
  SuperOp scaled(const S& c) const {
    SuperOp r = *this;
    for (auto& x : r.m_)
      if (!x.is_zero()) x = x * c;
    return r;
  }
  friend SuperOp operator*(const SuperOp& a, const SuperOp& b) {
    a.check(b);
    SuperOp r(a.n_, a.zero_);
    const int d = a.d_;
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < d; ++j) {
          const T& y = b(k, j);
          if (y.is_zero()) continue;
          r(i, j) += x * y;
        }
      }
    return r;
  }
  friend bool operator==(const SuperOp& a, const SuperOp& b) { return (a - b).is_zero(); }

  template <class U, class F>
  SuperOp<U> map(const U& uzero, F f) const {
    SuperOp<U> r(n_, uzero);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (!(*this)(i, j).is_zero()) r(i, j) = f((*this)(i, j));
    return r;
  }

 private:
  int n_ = 0, d_ = 1;
  T zero_{};
  std::vector<T> m_;

  void check(const SuperOp& o) const {
    if (n_ != o.n_) throw ConfigError("operators on different numbers of legs");
  }
};

// Graded tensor product: entry [(i,j),(k,l)] = (-1)^{p(k)(p(j)+p(l))} A[i,k] B[j,l],
// so that (A(x)B)(C(x)D) = (-1)^{[B][C]} AC(x)BD.
template <class T>
SuperOp<T> super_kron(const SuperOp<T>& A, const SuperOp<T>& B, bool graded = true) {
  SuperOp<T> r(A.legs() + B.legs(), A.zero());
  const int dA = A.dim(), dB = B.dim();
  for (int i = 0; i < dA; ++i)
    for (int k = 0; k < dA; ++k) {
      const T& a = A(i, k);
      if (a.is_zero()) continue;
      int pk = state_parity(k);
      for (int j = 0; j < dB; ++j)
        for (int l = 0; l < dB; ++l) {
          const T& b = B(j, l);
          if (b.is_zero()) continue;
          bool neg = graded && pk && ((state_parity(j) ^ state_parity(l)) & 1);
          T v = a * b;
          r(i * dB + j, k * dB + l) = neg ? -v : v;
        }
    }
  return r;
}

// Operator moving the factor at position k to position perm[k], with the Koszul sign
// of the induced permutation of odd factors.
template <class T>
SuperOp<T> perm_op(int n, const std::vector<int>& perm, const T& zero, bool graded = true) {
  if (static_cast<int>(perm.size()) != n) throw ConfigError("permutation length mismatch");
  SuperOp<T> r(n, zero);
  T one = RingOps<T>::one_like(zero);
  for (int i = 0; i < (1 << n); ++i) {
    std::vector<int> nb(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) nb[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = state_bit(i, k, n);
    bool neg = false;
    if (graded)
      for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
          if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(c)] && state_bit(i, a, n) && state_bit(i, c, n))
            neg = !neg;
    int j = 0;
    for (int k = 0; k < n; ++k) j = 2 * j + nb[static_cast<std::size_t>(k)];
    r(j, i) = neg ? -one : one;
  }
  return r;
}

template <class T>
SuperOp<T> graded_flip(const T& zero, bool graded = true) {
  return perm_op<T>(2, {1, 0}, zero, graded);
}

// X^T = P X P
template <class T>
SuperOp<T> flip_element(const SuperOp<T>& X, bool graded = true) {
  if (X.legs() != 2) throw ConfigError("flip_element needs a two-leg operator");
  SuperOp<T> P = graded_flip(X.zero(), graded);
  return P * X * P;
}

// Place an m-leg operator X on the given legs (0-based, increasing or not) of n legs.
template <class T>
SuperOp<T> embed_on_legs(const SuperOp<T>& X, const std::vector<int>& legs, int n, bool graded = true) {
  const int m = X.legs();
  if (static_cast<int>(legs.size()) != m || m > n) throw ConfigError("embed_on_legs: leg list mismatch");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int l : legs) {
    if (l < 0 || l >= n || used[static_cast<std::size_t>(l)]) throw ConfigError("embed_on_legs: bad leg index");
    used[static_cast<std::size_t>(l)] = true;
  }
  SuperOp<T> Y = X;
  SuperOp<T> I = SuperOp<T>::identity(1, X.zero());
  for (int k = m; k < n; ++k) Y = super_kron(Y, I, graded);
  std::vector<int> perm(legs);
  for (int k = 0; k < n; ++k)
    if (!used[static_cast<std::size_t>(k)]) perm.push_back(k);
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
  return perm_op<T>(n, perm, X.zero(), graded) * Y * perm_op<T>(n, inv, X.zero(), graded);
}

// [a,b] = ab - (-1)^{[a][b]} ba for homogeneous a, b.
template <class T>
SuperOp<T> graded_commutator(const SuperOp<T>& a, const SuperOp<T>& b) {
  int pa = a.parity(), pb = b.parity();
  if (pa < 0 || pb < 0) throw PreconditionViolation("graded_commutator needs homogeneous operators");
  return (pa & pb) ? a * b + b * a : a * b - b * a;
}

inline SuperOp<RatFunc> invert(const SuperOp<RatFunc>& M) {
  const int d = M.dim();
  SuperOp<RatFunc> A = M, B = SuperOp<RatFunc>::identity(M.legs(), RatFunc());
  for (int c = 0; c < d; ++c) {
    int piv = -1;
    for (int r = c; r < d; ++r)
      if (!A(r, c).is_zero()) { piv = r; break; }
    if (piv < 0) throw NonInvertible("singular operator");
    if (piv != c)
      for (int j = 0; j < d; ++j) {
        std::swap(A(c, j), A(piv, j));
        std::swap(B(c, j), B(piv, j));
      }
    RatFunc ip = A(c, c).inv();
    for (int j = 0; j < d; ++j) {
      if (!A(c, j).is_zero()) A(c, j) = A(c, j) * ip;
      if (!B(c, j).is_zero()) B(c, j) = B(c, j) * ip;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c || A(r, c).is_zero()) continue;
      RatFunc f = A(r, c);
      for (int j = 0; j < d; ++j) {
        if (!A(c, j).is_zero()) A(r, j) -= f * A(c, j);
        if (!B(c, j).is_zero()) B(r, j) -= f * B(c, j);
      }
    }
  }
  return B;
}

// M = M0 + N with M0 the constant-term matrix: M^-1 = sum_k (-M0^-1 N)^k M0^-1.
inline SuperOp<Series> invert(const SuperOp<Series>& M) {
  const Series& z = M.zero();
  SuperOp<RatFunc> M0 = M.map(RatFunc(), [](const Series& s) { return s.constant_term(); });
  SuperOp<RatFunc> M0i = invert(M0);
  auto lift = [&](const RatFunc& c) { return Series::constant(z.shape(), c); };
  SuperOp<Series> A = M0i.map(z, lift);
  SuperOp<Series> N = M - M0.map(z, lift);
  SuperOp<Series> X = -(A * N);
  SuperOp<Series> sum = SuperOp<Series>::identity(M.legs(), z);
  SuperOp<Series> pw = sum;
  for (;;) {
    pw = pw * X;
    if (pw.is_zero()) break;
    sum += pw;
  }
  return sum * A;
}

}  // namespace eqs
