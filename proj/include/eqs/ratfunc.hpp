#pragma once
#include <memory>
#include <utility>
#include <vector>

#include "eqs/mpoly.hpp"

namespace eqs {

// Rational function num / den over Q. The denominator is kept factored as a product of
// primitive polynomials ("atoms") with positive multiplicities; Laurent monomials and
// rational content live in num. Zero testing needs no gcd: value == 0 iff num == 0.
class RatFunc {
 public:
  using Atom = std::shared_ptr<const MPoly>;

  RatFunc() = default;
  RatFunc(long c) : num_(c) {}
  RatFunc(const Rat& c) : num_(c) {}
  RatFunc(const MPoly& p) : num_(p) {}
  static RatFunc sym(int v, int pow = 1) { return RatFunc(MPoly::var(v, pow)); }
  static RatFunc frac(const MPoly& n, const MPoly& d);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && num_.is_const() && num_.const_value() == 1; }
  bool is_const() const { return den_.empty() && num_.is_const(); }
  Rat const_value() const;
  bool has_den() const { return !den_.empty(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inv(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  RatFunc inv() const;
  RatFunc pow(long n) const;

  RatFunc map_exps(const std::function<Exp(const Exp&)>& f) const;
  RatFunc eval(int v, const Rat& x) const;
  RatFunc reduce_square(int s, const MPoly& sq) const;
  bool depends_on(int v) const;

  const MPoly& num_part() const { return num_; }
  const std::vector<std::pair<Atom, int>>& den_atoms() const { return den_; }
  MPoly num() const { return num_; }
  MPoly den() const;
  std::size_t size() const;
  std::string str() const;

 private:
  MPoly num_;
  std::vector<std::pair<Atom, int>> den_;  // sorted by atom_less

  void cancel();
};

}  // namespace eqs
