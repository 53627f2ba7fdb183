#pragma once
#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "eqs/ratfunc.hpp"

namespace eqs {

constexpr int kMaxLegs = 4;
constexpr int kPairs = kMaxLegs * (kMaxLegs - 1) / 2;

// Coefficient symbols of the PBW engine. u_k stands for t = q^h on leg k (central),
// w for the face parameter, x for a pending dynamical shift (see face_twistor).
struct PbwSyms {
  int q, w, x, U;
  std::array<int, kMaxLegs> u;
  static const PbwSyms& get();
};

int pair_index(int i, int j);  // 0-based legs, i != j, symmetric

// Per-leg monomial t_ex^m e^a f^b; ef code 0:1, 1:e, 2:f, 3:ef.
// G exponents g[pair] stand for (q^{-T_{ij}})^g.
struct PKey {
  std::array<int16_t, kMaxLegs> m{};
  std::array<uint8_t, kMaxLegs> ef{};
  std::array<int16_t, kPairs> g{};
  auto operator<=>(const PKey&) const = default;
};

// Element of U_q[sl(1|1)]^{(x)n} in PBW normal form:
// sum c * (x_1 (x) ... (x) x_n) * prod G^g, with the t-powers of leg k folded into c as u_k.
class TElem {
 public:
  TElem() = default;
  explicit TElem(int legs) : n_(legs) {}
  static TElem scalar(int legs, const RatFunc& c);
  static TElem one(int legs) { return scalar(legs, RatFunc(1L)); }
  // gen in {"e", "f", "tex", "t"} on the given leg, with power for tex.
  static TElem gen(int legs, int leg, const std::string& g, int power = 1);
  static TElem G(int legs, int i, int j, int power = 1);

  int legs() const { return n_; }
  const std::map<PKey, RatFunc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int parity() const;  // -1 if mixed
  // Coefficient of the identity monomial (0 if absent).
  RatFunc scalar_part() const;

  void add_term(const PKey& k, const RatFunc& c);
  TElem& operator+=(const TElem& o);
  TElem& operator-=(const TElem& o);
  friend TElem operator+(TElem a, const TElem& b) { return a += b; }
  friend TElem operator-(TElem a, const TElem& b) { return a -= b; }
  TElem operator-() const;
  friend TElem operator*(const TElem& a, const TElem& b);
  friend TElem operator*(const TElem& a, const RatFunc& c);
  friend TElem operator*(const RatFunc& c, const TElem& a) { return a * c; }
  friend bool operator==(const TElem& a, const TElem& b) { return (a - b).is_zero(); }

  TElem map_coeffs(const std::function<RatFunc(const RatFunc&)>& f) const;
  std::string term_str(const PKey& k) const;
  std::string str() const;

 private:
  int n_ = 0;
  std::map<PKey, RatFunc> t_;
};

// Hopf structure maps acting on one leg (0-based).
TElem coproduct(const TElem& x, int leg);
TElem counit(const TElem& x, int leg);
TElem antipode(const TElem& x, int leg);
// m on legs (leg, leg+1); G-free input only.
TElem merge_legs(const TElem& x, int leg);
// Leg i of x goes to position targets[i] of n legs (identity elsewhere), with Koszul sign.
TElem place(const TElem& x, const std::vector<int>& targets, int n);
// Subscript convention: position k holds original factor sigma[k] (1-based labels).
TElem permute(const TElem& x, const std::vector<int>& sigma);
// Inverse of an element c0*(1 + N)*G-monomial with N nilpotent.
TElem inverse(const TElem& x);

// Substitute u_i -> prod_j u_j^{M[i][j]} in every coefficient.
using UMap = std::array<std::array<int, kMaxLegs>, kMaxLegs>;
RatFunc subst_u(const RatFunc& c, const UMap& M);

}  // namespace eqs
