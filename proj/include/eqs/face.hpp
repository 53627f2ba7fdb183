#pragma once
#include <vector>

#include "eqs/affine.hpp"

namespace eqs {

// Coefficient field of the face module: q and w are RatFunc (symbols or exact values).
struct FaceParams {
  RatFunc q, w;
};

// F_VV(z; p, w) built from the 2phi1 / 1phi0 closed form. p and z live in the same series
// shape; z may be a series variable or a constant series (sampled spectral point).
SMat face_twistor_vv(const FaceParams& fp, const Series& p, const Series& z);
// (pq^-2 z; p)_inf / (pq^2 z; p)_inf
Series phi10_product(const RatFunc& q, const Series& p, const Series& z);
// 2phi1(q^-4, 0; 0 | p, pq^2 z) as a plain sum
Series phi10_series(const RatFunc& q, const Series& p, const Series& z);

// D_w (x) 1 with D_w = e11 + w e22
SMat face_shift(const RatFunc& w, const Series& zero);

// F(pz) - Ad(D_w (x) 1)(F(z)) K R_VV(pz) to orders (Np, Nz).
SMat face_difference_residual(const FaceParams& fp, int Np, int Nz);
// F_VV(0; p, w) - pi(F(w)) (p-dependence must vanish). Symbolic q, w only.
SMat face_initial_residual(int Np);

// flip(F(1/z)) R_VV(z) F(z)^-1 at a rational z, as a series in p.
SMat elliptic_face_r(const FaceParams& fp, const Rat& z, int Np);
// R12(z1/z2, w s) R13(z1/z3, w) R23(z2/z3, w s) - R23(z2/z3, w) R13(z1/z3, w s) R12(z1/z2, w)
// with s = shift (q^2 for the dynamical equation, 1 for the static one).
SMat face_dybe_residual(const FaceParams& fp, const std::vector<Rat>& z, int Np, const RatFunc& shift);

std::vector<CheckResult> verify_face_difference(const FaceParams& fp, int Np, int Nz);
std::vector<CheckResult> verify_face_initial(int Np);
std::vector<CheckResult> verify_phi10(const RatFunc& q, int N);
std::vector<CheckResult> verify_face_dybe(const FaceParams& fp, const std::vector<Rat>& z, int Np);

}  // namespace eqs
