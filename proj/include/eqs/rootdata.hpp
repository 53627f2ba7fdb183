#pragma once
#include <vector>

#include "eqs/rat.hpp"
#include "eqs/report.hpp"

namespace eqs {

// Coordinates over {delta, eps_1..eps_n, delta_1..delta_n, d}.
using Weight = std::vector<Rat>;
using RMatrix = std::vector<std::vector<Rat>>;  // square, row-major

struct RootDatum {
  int n = 0;
  Rat xi;
  std::vector<Weight> alpha;  // alpha_0 .. alpha_{2n-1} (= h_i)
  Weight h_ex, d, c;
  Weight hup_ex;              // h^ex
  std::vector<Weight> hup;    // h^0 .. h^{2n-1}
  Weight rho_tilde;

  int dim() const { return 2 * n + 2; }
  Weight delta() const;
  Weight eps(int i) const;    // 1-based
  Weight dlt(int i) const;    // 1-based
};

RootDatum build_root_data(int n, const Rat& xi);
Rat form(const RootDatum& R, const Weight& a, const Weight& b);
RMatrix cartan_matrix(const RootDatum& R);

// tau as the matrix acting on coordinates, fixed by its values on the dual basis {h^ex, h^i, c}.
RMatrix tau_matrix(const RootDatum& R);
Weight act(const RMatrix& A, const Weight& v);
RMatrix mat_mul(const RMatrix& A, const RMatrix& B);
RMatrix mat_inverse(const RMatrix& A);
// Tensors in V (x) V as coefficient matrices: a (x) b -> a b^T.
RMatrix outer(const Weight& a, const Weight& b);
RMatrix canonical_T(const RootDatum& R);
// c (x) c coefficient of the tau-sum; printed = true uses (2(n^2-1) - 3xi)/6.
Rat sum_constant(const RootDatum& R, bool printed = true);
RMatrix t_tilde(const RootDatum& R, bool printed = true);

std::vector<CheckResult> verify_root_data(int n, const Rat& xi);

}  // namespace eqs
