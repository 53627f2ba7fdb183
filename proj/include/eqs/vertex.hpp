#pragma once
#include <array>
#include <vector>

#include "eqs/affine.hpp"

namespace eqs {

// Series variables of the vertex module: "h" = p^{1/2} and "zeta".
ShapePtr vertex_shape(int Nh, int Nzeta);

// Which reading of the factor and tau displays to use. The default is the one the identities need;
// the printed variants are kept as negative controls.
struct VertexVariant {
  bool printed_ebar_odd = false;  // odd terms of Ebar_{2k-1} on e12(x)e21 / e21(x)e12
  bool printed_tau_x = false;     // tau(X^+) ~ e12, tau(X^-) ~ e21
  bool printed_tau_hex = false;   // (q - 1/q)/2 [n] instead of (q - 1/q)[n] in tau(H^ex_n)
  bool drop_rho = false;          // leave out the scalar rho_{2k-1}
};

// tau acting on the Drinfeld generators, represented on V in the principal gradation.
DrinfeldImages tau_drinfeld_image(int n, const RatFunc& q, const RatFunc& z, const VertexVariant& v = {});
LegImages tau_leg(const RatFunc& q, const Series& x, const VertexVariant& v = {});

Series rho_odd(int k, const RatFunc& q, const Series& h, const Series& zeta);
SMat ebar_even(int k, const RatFunc& q, const Series& h, const Series& zeta);
SMat ebar_odd(int k, const RatFunc& q, const Series& h, const Series& zeta, const VertexVariant& v = {});

// Left-ordered product of rho_{2k-1} K Ebar_{2k} K^-1 Ebar_{2k-1}.
SMat vertex_twistor_product(const RatFunc& q, const Series& h, const Series& zeta, const VertexVariant& v = {});

struct VertexClosedForms {
  Series rho, bE, cE;
  SMat E1, E2;
};
VertexClosedForms vertex_closed_forms(const RatFunc& q, const Series& h, const Series& zeta);
// E^2 as its left-ordered product display.
SMat e2_product(const RatFunc& q, const Series& h, const Series& zeta);

// X11, X12, X21, X22 from the four difference equations, order by order in h = p^{1/2}.
std::array<Series, 4> solve_xij(const RatFunc& q, const ShapePtr& sh);
// Same quantities read off E^1: X11 = [11,11], X12 = coefficient of e12(x)e12, X21, X22.
std::array<Series, 4> xij_from_e1(const SMat& E1);
extern const std::array<const char*, 4> kXijNames;

// Principal-gradation trigonometric R~_VV(zeta).
SMat r_tilde_vv(const RatFunc& q, const Series& zeta);
// (pi x pi)((tau x 1) R~(x)) = R'_tau(x) K
SMat vertex_middle(const RatFunc& q, const Series& x, const VertexVariant& v = {});
// E(p zeta) - E(zeta) M(p^{1/2} zeta) R~_VV(p zeta)
SMat vertex_difference_residual(const RatFunc& q, int Nh, int Nzeta, const VertexVariant& v = {});

// flip(E(1/zeta)) R~_VV(zeta) E(zeta)^-1 at a rational zeta, series in h.
SMat elliptic_vertex_r(const RatFunc& q, const Rat& zeta, int Nh, bool graded = true);
SMat vertex_ybe_residual(const RatFunc& q, const std::vector<Rat>& zeta, int Nh, bool graded = true);

std::vector<CheckResult> verify_vertex_product(const RatFunc& q, int Nh, int Nzeta, int Nh_bc, int Nh_x);
std::vector<CheckResult> verify_vertex_difference(const RatFunc& q, int Nh, int Nzeta);
std::vector<CheckResult> verify_vertex_ybe(const RatFunc& q, const std::vector<Rat>& zeta, int Nh);

}  // namespace eqs
