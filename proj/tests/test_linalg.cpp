#include <random>

#include "doctest.h"
#include "eqs/superop.hpp"

using namespace eqs;
using Op = SuperOp<RatFunc>;

namespace {

Op e(int i, int j) { return Op::unit(i, j, RatFunc()); }
int upar(int i, int j) { return (i + j) % 2; }  // parity of e_ij (1-based)

// Element-level action: (x_1 (x) ... (x) x_n)(v_1 (x) ... (x) v_n)
//   = (-1)^{sum_{k>l} [x_k][v_l]} x_1 v_1 (x) ... (x) x_n v_n
// with x_k = e_{a_k b_k}. Built one basis column at a time.
Op action(const std::vector<std::pair<int, int>>& xs) {
  const int n = static_cast<int>(xs.size());
  Op r(n, RatFunc());
  for (int col = 0; col < (1 << n); ++col) {
    int row = 0;
    bool ok = true;
    int sign = 0;
    for (int k = 0; k < n; ++k) {
      int v = ((col >> (n - 1 - k)) & 1) + 1;
      if (xs[static_cast<std::size_t>(k)].second != v) ok = false;
      row = 2 * row + xs[static_cast<std::size_t>(k)].first - 1;
      for (int l = 0; l < k; ++l) {
        int vl = (col >> (n - 1 - l)) & 1;
        sign ^= upar(xs[static_cast<std::size_t>(k)].first, xs[static_cast<std::size_t>(k)].second) & vl;
      }
    }
    if (ok) r(row, col) = RatFunc(sign ? -1L : 1L);
  }
  return r;
}

const std::vector<std::pair<int, int>> kUnits = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

}  // namespace

TEST_CASE("super_kron matches the element action and the Koszul rule") {
  for (auto a : kUnits)
    for (auto b : kUnits) {
      CHECK(super_kron(e(a.first, a.second), e(b.first, b.second)) == action({a, b}));
      for (auto c : kUnits)
        for (auto d : kUnits) {
          Op lhs = super_kron(e(a.first, a.second), e(b.first, b.second)) *
                   super_kron(e(c.first, c.second), e(d.first, d.second));
          Op rhs = super_kron(e(a.first, a.second) * e(c.first, c.second),
                              e(b.first, b.second) * e(d.first, d.second));
          if (upar(b.first, b.second) & upar(c.first, c.second)) rhs = -rhs;
          CHECK(lhs == rhs);
        }
    }
  CHECK(super_kron(e(1, 2), e(2, 1)) * super_kron(e(2, 1), e(1, 2)) == -super_kron(e(1, 1), e(2, 2)));
  CHECK(super_kron(Op::identity(1, RatFunc()), Op::identity(1, RatFunc())) == Op::identity(2, RatFunc()));
  CHECK(super_kron(e(1, 1), e(2, 2)) * super_kron(e(1, 1), e(2, 2)) == super_kron(e(1, 1), e(2, 2)));
}

TEST_CASE("graded flip") {
  Op P = graded_flip(RatFunc());
  // P(v1 (x) v2) = v2 (x) v1: column 1 -> row 2
  CHECK(P(2, 1) == RatFunc(1L));
  CHECK(P(3, 3) == RatFunc(-1L));
  CHECK(P * P == Op::identity(2, RatFunc()));
  for (auto a : kUnits)
    for (auto b : kUnits) {
      Op ab = super_kron(e(a.first, a.second), e(b.first, b.second));
      Op ba = super_kron(e(b.first, b.second), e(a.first, a.second));
      if (upar(a.first, a.second) & upar(b.first, b.second)) ba = -ba;
      CHECK(P * ab * P == ba);
      CHECK(flip_element(ab) == ba);
      CHECK(flip_element(flip_element(ab)) == ab);
    }
  CHECK(flip_element(super_kron(e(1, 2), e(2, 1))) == -super_kron(e(2, 1), e(1, 2)));
  CHECK(flip_element(Op::identity(2, RatFunc())) == Op::identity(2, RatFunc()));
  // P(XY)P = (PXP)(PYP)
  Op X = super_kron(e(1, 2), e(2, 1)) + super_kron(e(1, 1), e(2, 2));
  Op Y = super_kron(e(2, 1), e(1, 1)) + super_kron(e(2, 2), e(1, 2));
  CHECK(flip_element(X * Y) == flip_element(X) * flip_element(Y));
}

TEST_CASE("embed_on_legs agrees with the direct signed action") {
  Op I = Op::identity(1, RatFunc());
  for (int n = 2; n <= 4; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (auto a : kUnits)
          for (auto b : kUnits) {
            std::vector<std::pair<int, int>> xs(static_cast<std::size_t>(n), {0, 0});
            Op direct = Op(n, RatFunc());
            // identity on a spectator leg = e11 + e22
            int spect = n - 2;
            for (int mask = 0; mask < (1 << spect); ++mask) {
              int s = 0;
              for (int k = 0; k < n; ++k) {
                if (k == i) xs[static_cast<std::size_t>(k)] = a;
                else if (k == j) xs[static_cast<std::size_t>(k)] = b;
                else {
                  int d = ((mask >> s) & 1) + 1;
                  ++s;
                  xs[static_cast<std::size_t>(k)] = {d, d};
                }
              }
              direct += action(xs);
            }
            Op X = super_kron(e(a.first, a.second), e(b.first, b.second));
            CHECK(embed_on_legs(X, {i, j}, n) == direct);
          }
  Op X = super_kron(e(1, 2), e(2, 1));
  Op P = graded_flip(RatFunc());
  Op oneP = super_kron(I, P);
  CHECK(embed_on_legs(X, {0, 2}, 3) == oneP * super_kron(X, I) * oneP);
  CHECK(embed_on_legs(X, {0, 1}, 3) == super_kron(X, I));
  CHECK(embed_on_legs(Op::identity(2, RatFunc()), {1, 2}, 3) == Op::identity(3, RatFunc()));
  CHECK_THROWS_AS(embed_on_legs(X, {0, 3}, 3), ConfigError);
}

TEST_CASE("graded commutator") {
  CHECK(graded_commutator(e(1, 2), e(2, 1)) == Op::identity(1, RatFunc()));
  CHECK(graded_commutator(e(1, 2), e(1, 2)).is_zero());
  CHECK(graded_commutator(e(1, 1), e(2, 2)).is_zero());
  CHECK_THROWS_AS(graded_commutator(e(1, 2) + e(1, 1), e(1, 1)), PreconditionViolation);
}

TEST_CASE("operator inversion") {
  RatFunc q = RatFunc::sym(sym("q"));
  Op M = Op::identity(2, RatFunc()).scaled(q) + super_kron(e(1, 2), e(2, 1)).scaled(q * q) +
         super_kron(e(2, 1), e(1, 2));
  CHECK(M * invert(M) == Op::identity(2, RatFunc()));
  CHECK(invert(M) * M == Op::identity(2, RatFunc()));
  CHECK_THROWS_AS(invert(super_kron(e(1, 1), e(1, 1))), NonInvertible);

  auto sh = SeriesShape::make({"z"}, {5});
  Series z0(sh);
  Series zv = Series::var(sh, "z");
  auto lift = [&](const RatFunc& c) { return Series::constant(sh, c); };
  SuperOp<Series> S = M.map(z0, lift) + super_kron(e(1, 1), e(2, 2)).map(z0, lift).scaled(zv);
  SuperOp<Series> I = SuperOp<Series>::identity(2, z0);
  CHECK(S * invert(S) == I);
  CHECK(invert(S) * S == I);
}
