#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqs/ratfunc.hpp"

namespace eqs {

// Series variables and their per-variable maximal degrees.
struct SeriesShape {
  std::vector<std::string> vars;
  std::vector<int> bound;
  std::vector<int> stride;
  int size = 1;

  static std::shared_ptr<const SeriesShape> make(std::vector<std::string> vars, std::vector<int> bound);
  int index_of(const std::string& v) const;
  std::vector<int> unflatten(int flat) const;
  int flatten(const std::vector<int>& e) const;  // -1 if out of bounds
  bool same(const SeriesShape& o) const { return vars == o.vars && bound == o.bound; }
};
using ShapePtr = std::shared_ptr<const SeriesShape>;

// Dense truncated power series in a few variables with RatFunc coefficients.
// Terms beyond any variable's bound are discarded.
class Series {
 public:
  Series() = default;
  explicit Series(ShapePtr sh);
  static Series constant(ShapePtr sh, const RatFunc& c);
  static Series monomial(ShapePtr sh, const std::vector<int>& e, const RatFunc& c);
  static Series var(ShapePtr sh, const std::string& v, const RatFunc& c = RatFunc(1L));

  const ShapePtr& shape() const { return sh_; }
  const RatFunc& coeff(int flat) const { return c_[static_cast<std::size_t>(flat)]; }
  RatFunc coeff(const std::vector<int>& e) const;
  void set(const std::vector<int>& e, const RatFunc& c);
  void add_to(int flat, const RatFunc& c) { c_[static_cast<std::size_t>(flat)] += c; }
  const RatFunc& constant_term() const { return c_[0]; }

  bool is_zero() const;
  bool has_zero_constant() const { return c_[0].is_zero(); }
  std::optional<std::pair<std::vector<int>, RatFunc>> first_nonzero() const;
  std::size_t nnz() const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const RatFunc& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series series_mul(const Series& a, const Series& b);
  friend Series operator*(Series a, const RatFunc& c) { return a *= c; }
  friend Series operator*(const RatFunc& c, Series a) { return a *= c; }
  friend bool operator==(const Series& a, const Series& b) { return (a - b).is_zero(); }
  Series pow(unsigned n) const;

  // x_v -> x_v * prod_u x_u^{extra[u]} (e.g. z -> p z). extra[v] must be 0.
  Series subst_scale(const std::string& v, const std::vector<int>& extra) const;
  // Apply f to every coefficient.
  template <class F>
  Series map_coeffs(F f) const {
    Series r(sh_);
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) r.c_[i] = f(c_[i]);
    return r;
  }
  std::string str() const;

 private:
  ShapePtr sh_;
  std::vector<RatFunc> c_;
  void check_shape(const Series& o) const;
};

Series series_mul(const Series& a, const Series& b);
Series series_invert(const Series& a);
// exp(a) for a with zero constant term.
Series series_exp(const Series& a);

}  // namespace eqs
