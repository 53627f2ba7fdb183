#pragma once
#include <functional>
#include <optional>
#include <vector>

#include "eqs/qseries.hpp"
#include "eqs/report.hpp"
#include "eqs/superop.hpp"

namespace eqs {

using Mat = SuperOp<RatFunc>;
using SMat = SuperOp<Series>;

// One-leg matrix unit e_ij with coefficient c.
Mat eunit(int i, int j, const RatFunc& c = RatFunc(1L));
SMat eunit(int i, int j, const Series& zero, const RatFunc& c = RatFunc(1L));
// Lift a constant-entry operator into the series ring of `zero`.
SMat lift(const Mat& m, const Series& zero);

// sqrt([theta]_q): 1 for theta = 1, otherwise the symbol s<slot> with s^2 = [theta]_q.
RatFunc sqrt_theta(int theta, int slot);
// Applies s_k^2 -> [theta_k]_q for every slot k with theta_k != 1.
RatFunc reduce_sqrt(const RatFunc& c, const RatFunc& q, const std::vector<int>& thetas);
Mat reduce_sqrt(const Mat& m, const RatFunc& q, const std::vector<int>& thetas);

struct ChevalleyImages {
  Mat e0, f0, h0, e1, f1, h1, hex;
};
// Homogeneous gradation. z is a coefficient symbol or value, s = sqrt([theta]_q).
ChevalleyImages eval_rep_chevalley(const RatFunc& q, int theta, const Rat& c0, const RatFunc& z, const RatFunc& s);

struct DrinfeldImages {
  Mat Xp, Xm, H, Hex;
};
// Level zero, c_n = cn for n != 0; n = 0 gives H_0 = theta I and H^ex_0 = 2 e11 + c0 I.
DrinfeldImages eval_rep_drinfeld(int n, const RatFunc& q, int theta, const RatFunc& z, const RatFunc& s,
                                 const Rat& cn = 0, const Rat& c0 = 0);

// Checks every listed relation for |n|, |m| <= modes.
std::vector<CheckResult> verify_drinfeld_relations(int modes, const RatFunc& q, int theta);

// Closed form R_VV(z; theta, theta'); s12 = sqrt([theta]_q [theta']_q).
Mat r_matrix_vv(const RatFunc& z, const RatFunc& q, int th, int th2, const RatFunc& s12);
SMat r_matrix_vv(const Series& z, const RatFunc& q, int th, int th2, const RatFunc& s12);

// One-leg images of the Drinfeld generators used by the universal R product.
struct LegImages {
  std::function<SMat(int)> Xp, Xm, H, Hex;
  SMat qH0, qmH0;  // images of q^{H_0}, q^{-H_0}
};
// Homogeneous gradation at spectral value z (z^n with n < 0 needs an invertible z).
LegImages homogeneous_leg(const RatFunc& q, int theta, const RatFunc& s, const Series& z);
// exp(X) for X with zero constant terms.
SMat matrix_exp(const SMat& X);
// R' = R^< R^0 R^> at level zero with factors n = 0..nmax (R^0: n = 1..nmax).
SMat universal_r_prime(const LegImages& a, const LegImages& b, const RatFunc& q, int nmax);

// Image of R^< R^0 R^> q^{-T} in the ratio variable z (truncated at the shape of zvar).
SMat r_from_universal(const Series& zvar, const RatFunc& q, int th, int th2, const RatFunc& s1, const RatFunc& s2);

// (pi (x) pi) q^{T} at theta = theta' = 1, c0 = 0: diag(q^2, q, q, 1).
Mat k_matrix(const RatFunc& q);

// R_12 R_13 R_23 - R_23 R_13 R_12 with spectral ratios z_i/z_j.
Mat ybe_residual(const RatFunc& q, const std::vector<Rat>& z, const std::vector<int>& thetas, bool graded = true);

// Universal product image vs closed form to z-order Nz for each (theta, theta').
std::vector<CheckResult> verify_r_universal(const RatFunc& q, int Nz, const std::vector<std::pair<int, int>>& thetas);

struct YbeSample {
  std::optional<Rat> q;  // unset: use the symbolic q
  std::vector<Rat> z;
  std::vector<int> theta;
};
// Graded YBE at each sample, plus the ungraded negative control on the first one.
std::vector<CheckResult> verify_graded_ybe(const RatFunc& q, const std::vector<YbeSample>& samples);

}  // namespace eqs

namespace eqs {
class TElem;
// (pi (x) ... (x) pi) of a universal element at theta = 1, c0 = 0: u_k -> q, t_ex -> diag(q^2, 1),
// e -> e12, f -> e21, q^{-T_ij} -> K^{-1} on legs (i, j). Coefficients keep the engine's q and w;
// q_value, if given, is substituted for q afterwards.
Mat pi_image(const TElem& x, const std::optional<Rat>& q_value = std::nullopt);
}  // namespace eqs
