#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eqs/rat.hpp"

namespace eqs {

constexpr int kMaxVars = 16;
using Exp = std::array<int16_t, kMaxVars>;

// Global append-only symbol table. Every symbol is a Laurent (invertible) variable.
int sym(std::string_view name);
const std::string& sym_name(int idx);
int sym_count();

Exp exp_add(const Exp& a, const Exp& b);
Exp exp_sub(const Exp& a, const Exp& b);
bool exp_is_zero(const Exp& e);

struct MTerm {
  Exp e;
  Rat c;
};

// Sparse Laurent polynomial over Q. Terms sorted by exponent vector (lex, var 0 most
// significant), no zero coefficients stored.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long c);
  MPoly(const Rat& c);
  static MPoly var(int v, int pow = 1);
  static MPoly mono(const Exp& e, const Rat& c);
  static MPoly from_terms(std::vector<MTerm> t);

  const std::vector<MTerm>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_const() const;
  Rat const_value() const;
  const MTerm& lead() const { return t_.back(); }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  MPoly pow(unsigned n) const;

  int min_exp(int v) const;
  int max_exp(int v) const;
  Exp min_exps() const;
  MPoly shifted(const Exp& by) const;
  MPoly map_exps(const std::function<Exp(const Exp&)>& f) const;
  MPoly eval(int v, const Rat& x) const;
  // Rewrites s^2 -> sq for the variable s (sq must not contain s).
  MPoly reduce_square(int s, const MPoly& sq) const;

  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<MTerm> t_;
  void canonicalize();
};

int compare(const MPoly& a, const MPoly& b);

// Exact division in the Laurent ring by b, where b has no monomial factor.
bool divexact(const MPoly& a, const MPoly& b, MPoly& quot);

// p = content * x^mono * prim with prim primitive over Z, positive leading
// coefficient and every variable's minimal exponent equal to 0.
void split_poly(const MPoly& p, Rat& content, Exp& mono, MPoly& prim);

}  // namespace eqs
