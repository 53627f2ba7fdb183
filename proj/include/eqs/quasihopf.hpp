#pragma once
#include <set>
#include <string>
#include <vector>

#include "eqs/pbw.hpp"
#include "eqs/report.hpp"

namespace eqs {

// Universal R = (1 + (q - q^-1) e (x) f) q^{-T}.
TElem universal_r();
// F(W) = 1 - (q - q^-1) W/(1 - W) q^{-h} e (x) f q^{h} on two legs.
TElem face_twistor_universal(const RatFunc& W);
// F(lambda) placed with its first factor on leg i and second on leg j of n legs.
// W = w u_i^2 prod_{s in shifts} u_s^2 (w = q^{2(s+h)} with h on the first factor).
TElem face_twistor_dyn(int n, int i, int j, const std::set<int>& shifts = {});
// R(lambda) = F_ji(lambda) R_ij F_ij(lambda)^-1 on legs (i, j) of n with the given shifts.
TElem r_dyn(int n, int i, int j, const std::set<int>& shifts = {});

// Quasi-Hopf data obtained by twisting the Hopf structure of U_q[sl(1|1)].
struct QuasiHopf {
  TElem F, Finv;
  TElem Phi, PhiInv;
  TElem alpha, beta;
  TElem R;
  // (1 .. Delta_F .. 1)(X) on the given leg
  TElem delta(const TElem& X, int leg) const;
};

QuasiHopf base_structure();
QuasiHopf twist_structure(const TElem& F);

// Generators used for "for all a" checks: e, f, t_ex, t_ex^-1, t, ef.
std::vector<std::pair<std::string, TElem>> test_generators();

// Axiom ids: coassoc, pentagon, counit-phi, counit-delta, antipode-1..4,
// quasi-tri-dr, quasi-tri-d1r, quasi-tri-1dr, quasi-ybe.
json verify_axiom(const std::string& axiom_id, const QuasiHopf& s);
std::vector<std::string> axiom_ids();

// Axioms for the structure twisted by F(w), twistor sanity checks, the trivial twist,
// and coassociativity with Phi = 1 as a negative control.
std::vector<CheckResult> verify_twisted_quasi_hopf(const RatFunc& w);
// Plain Hopf checks on the untwisted algebra.
std::vector<CheckResult> verify_base_hopf();
// Shifted cocycle with the dynamical face twistor, plus the free-shift negative control.
std::vector<CheckResult> verify_shifted_cocycle();
// Dynamical twist identities (Phi, Delta R) and the graded dynamical YBE, plus the static negative control.
std::vector<CheckResult> verify_dynamical_identities();

}  // namespace eqs
