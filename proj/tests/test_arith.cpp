#include <random>

#include "doctest.h"
#include "eqs/errors.hpp"
#include "eqs/qseries.hpp"

using namespace eqs;

namespace {

Rat rand_rat(std::mt19937& g) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  int n = num(g);
  if (n == 0) n = 3;
  return Rat(n, den(g));
}

RatFunc Q() { return RatFunc::sym(sym("q")); }

ShapePtr z_shape(int n) { return SeriesShape::make({"z"}, {n}); }
ShapePtr pz_shape(int np, int nz) { return SeriesShape::make({"p", "z"}, {np, nz}); }

Series zs(int n) { return Series::var(z_shape(n), "z"); }

}  // namespace

TEST_CASE("mpoly arithmetic and exact division") {
  int q = sym("q");
  MPoly x = MPoly::var(q);
  MPoly a = (x + MPoly(1)) * (x - MPoly(2));
  MPoly quot;
  CHECK(divexact(a, x - MPoly(2), quot));
  CHECK(quot == x + MPoly(1));
  CHECK_FALSE(divexact(a, x + MPoly(3), quot));
  CHECK(a.eval(q, Rat(2)).is_zero());
  MPoly lau = MPoly::var(q, -2) * MPoly::var(q, 2);
  CHECK(lau == MPoly(1));
}

TEST_CASE("ratfunc cancellation and evaluation") {
  int qi = sym("q");
  RatFunc q = Q();
  RatFunc a = RatFunc::frac(MPoly(1), MPoly(1) - MPoly::var(qi));
  RatFunc b = q * a;
  CHECK((a - b) == RatFunc(1L));
  CHECK((a * (RatFunc(1L) - q)).is_one());
  RatFunc qi_ = q_int(3, q);
  CHECK(qi_ == q * q + RatFunc(1L) + q.inv() * q.inv());
  CHECK(q_int(3, q).eval(qi, Rat(2)).const_value() == Rat(21, 4));
  CHECK_THROWS_AS(a.eval(qi, Rat(1)), SingularParameter);
}

TEST_CASE("ratfunc equality is an equivalence on sampled triples") {
  std::mt19937 g(11);
  int qi = sym("q");
  MPoly x = MPoly::var(qi);
  for (int it = 0; it < 20; ++it) {
    Rat r1 = rand_rat(g), r2 = rand_rat(g);
    // Three representations of the same value.
    RatFunc a = RatFunc::frac(MPoly(r1) * x + MPoly(r2), x - MPoly(5));
    RatFunc b = RatFunc::frac((MPoly(r1) * x + MPoly(r2)) * (x + MPoly(1)),
                              (x - MPoly(5)) * (x + MPoly(1)));
    RatFunc c = RatFunc(MPoly(r1)) + RatFunc::frac(MPoly(r2 + 5 * r1), x - MPoly(5));
    CHECK(a == a);
    CHECK(a == b);
    CHECK(b == a);
    CHECK(b == c);
    CHECK(a == c);
  }
}

TEST_CASE("series_mul examples") {
  Series z = zs(2);
  Series one = Series::constant(z.shape(), 1L);
  CHECK((one + z) * (one - z) == one - z * z);
  Series z1 = zs(1);
  Series one1 = Series::constant(z1.shape(), 1L);
  Series sq = (one1 + z1) * (one1 + z1);
  CHECK(sq.coeff({1}) == RatFunc(2L));
  CHECK(sq == one1 + z1 + z1);
  CHECK_THROWS_AS(zs(2) * zs(3), ConfigError);
}

TEST_CASE("series_invert examples") {
  Series z = zs(3);
  Series one = Series::constant(z.shape(), 1L);
  CHECK(series_invert(one - z) == one + z + z * z + z * z * z);
  CHECK(series_invert(one) == one);
  Series zz = zs(6);
  Series one6 = Series::constant(zz.shape(), 1L);
  Series a = one6 - zz * Q();
  CHECK(a * series_invert(a) == one6);
  CHECK(series_invert(a) * a == one6);
  CHECK_THROWS_AS(series_invert(zz), NonInvertible);

  auto sh = pz_shape(4, 4);
  Series p = Series::var(sh, "p"), zp = Series::var(sh, "z");
  Series one2 = Series::constant(sh, 1L);
  Series x = Q() * Q() * p * zp;
  Series geo = one2;
  Series xk = one2;
  for (int k = 1; k <= 4; ++k) {
    xk = xk * x;
    geo += xk;
  }
  CHECK(series_invert(one2 - x) == geo);
}

TEST_CASE("series ring axioms on random samples") {
  std::mt19937 g(5);
  auto sh = pz_shape(3, 3);
  auto rnd = [&]() {
    Series s(sh);
    for (int i = 0; i < sh->size; ++i)
      if (g() % 2) s.add_to(i, RatFunc(rand_rat(g)) * Q().pow(static_cast<long>(g() % 3) - 1));
    return s;
  };
  for (int it = 0; it < 5; ++it) {
    Series a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("q-Pochhammer symbols") {
  auto sh = pz_shape(8, 1);
  Series p = Series::var(sh, "p");
  Series one = Series::constant(sh, 1L);
  Series a = Series::constant(sh, Q());
  CHECK(poch_finite(a, p, 0) == one);
  CHECK(poch_finite(a, p, 2) == (one - a) * (one - a * p));
  std::mt19937 g(7);
  for (int n = 0; n <= 8; ++n) {
    Series ar = Series::constant(sh, rand_rat(g));
    // Direct product of the factors as oracle.
    Series direct = one;
    Series pk = one;
    for (int k = 0; k <= n; ++k) {
      direct = direct * (one - ar * pk);
      pk = pk * p;
    }
    Series pn = one;
    for (int k = 0; k < n; ++k) pn = pn * p;
    CHECK(poch_finite(ar, p, n + 1) == poch_finite(ar, p, n) * (one - ar * pn));
    CHECK(poch_finite(ar, p, n + 1) == direct);
  }

  CHECK(poch_infinite(Series(sh), p) == one);
  auto sh1 = pz_shape(1, 1);
  Series p1 = Series::var(sh1, "p");
  Series one1 = Series::constant(sh1, 1L);
  Series a1 = Series::constant(sh1, Q());
  CHECK(poch_infinite(a1 * p1, p1) == one1 - a1 * p1);
  Series inf = poch_infinite(a1, p1);
  CHECK(inf.coeff({1, 0}) == -(Q() * (RatFunc(1L) - Q())));
  CHECK_THROWS_AS(poch_infinite(a1, one1), PreconditionViolation);
}

TEST_CASE("basic hypergeometric series") {
  auto sh = pz_shape(3, 3);
  Series p = Series::var(sh, "p"), z = Series::var(sh, "z");
  Series one = Series::constant(sh, 1L);
  RatFunc q = Q();
  Series qa = Series::constant(sh, q), qb = Series::constant(sh, q * q), qc = Series::constant(sh, q.pow(5));
  CHECK(hyper_2phi1(qa, qb, qc, p, Series(sh)) == one);
  Series s = hyper_2phi1(qa, qb, qc, p, z);
  // z^1 coefficient, p^0 part: (1-qa)(1-qb)/(1-qc)
  RatFunc c1 = (RatFunc(1L) - q) * (RatFunc(1L) - q * q) / (RatFunc(1L) - q.pow(5));
  CHECK(s.coeff({0, 1}) == c1);
  CHECK(s.coeff({1, 1}) == c1);  // 1/(1-p) = 1 + p + ...
  CHECK_THROWS_AS(hyper_2phi1(qa, qb, one, p, z), SingularParameter);
}
