#include "eqs/face.hpp"

#include "eqs/errors.hpp"
#include "eqs/quasihopf.hpp"

namespace eqs {

namespace {

Series cst(const Series& like, const RatFunc& c) { return Series::constant(like.shape(), c); }

SMat kron_entry(int i1, int j1, int i2, int j2, const Series& v) {
  Series zero(v.shape());
  return super_kron(SMat::unit(i1, j1, zero, v), SMat::unit(i2, j2, zero));
}

void check_orders(int Np, int Nz) {
  if (Np < 1 || Nz < 1) throw ConfigError("truncation orders must be >= 1");
}

}  // namespace

Series phi10_product(const RatFunc& q, const Series& p, const Series& z) {
  return poch_infinite(p * z * q.pow(-2), p) * series_invert(poch_infinite(p * z * q.pow(2), p));
}

Series phi10_series(const RatFunc& q, const Series& p, const Series& z) {
  Series zero(p.shape());
  return hyper_2phi1(cst(p, q.pow(-4)), zero, zero, p, p * z * q.pow(2));
}

SMat face_twistor_vv(const FaceParams& fp, const Series& p, const Series& z) {
  const RatFunc& q = fp.q;
  const RatFunc& w = fp.w;
  if (w.is_zero() || (w - RatFunc(1L)).is_zero()) throw SingularParameter("face twistor needs w not in {0, 1}");
  RatFunc c = q_diff(q);
  Series one = cst(p, RatFunc(1L));
  Series x = p * z * q.pow(2);
  RatFunc wi = w.inv();
  Series f11 = hyper_2phi1(cst(p, w * q.pow(-2)), cst(p, q.pow(-2)), cst(p, w), p, x);
  Series f12 = hyper_2phi1(cst(p, w * q.pow(-2)), p * q.pow(-2), p * w, p, x) * (-(w * c / (RatFunc(1L) - w)));
  Series f21 = z * p * series_invert(one - p * wi) * (c * wi) * hyper_2phi1(p * (wi * q.pow(-2)), p * q.pow(-2), p * p * wi, p, x);
  Series f22 = hyper_2phi1(p * (wi * q.pow(-2)), cst(p, q.pow(-2)), p * wi, p, x);
  SMat F = kron_entry(1, 1, 1, 1, phi10_product(q, p, z));
  F += kron_entry(2, 2, 2, 2, one);
  F += kron_entry(1, 1, 2, 2, f11);
  F += kron_entry(2, 2, 1, 1, f22);
  F += kron_entry(1, 2, 2, 1, f12);
  F += kron_entry(2, 1, 1, 2, f21);
  return F;
}

SMat face_shift(const RatFunc& w, const Series& zero) {
  SMat D = eunit(1, 1, zero) + eunit(2, 2, zero, w);
  return super_kron(D, SMat::identity(1, zero));
}

SMat face_difference_residual(const FaceParams& fp, int Np, int Nz) {
  check_orders(Np, Nz);
  auto sh = SeriesShape::make({"p", "z"}, {Np, Nz});
  Series p = Series::var(sh, "p"), z = Series::var(sh, "z"), zero(sh);
  SMat F = face_twistor_vv(fp, p, z);
  SMat Fpz = F.map(zero, [&](const Series& s) { return s.subst_scale("z", {1, 0}); });
  SMat D = face_shift(fp.w, zero), Di = face_shift(fp.w.inv(), zero);
  SMat rhs = D * F * Di * lift(k_matrix(fp.q), zero) * r_matrix_vv(p * z, fp.q, 1, 1, RatFunc(1L));
  return Fpz - rhs;
}

SMat face_initial_residual(int Np) {
  if (Np < 1) throw ConfigError("truncation orders must be >= 1");
  const PbwSyms& S = PbwSyms::get();
  FaceParams fp{RatFunc::sym(S.q), RatFunc::sym(S.w)};
  auto sh = SeriesShape::make({"p"}, {Np});
  Series p = Series::var(sh, "p"), zero(sh);
  SMat F0 = face_twistor_vv(fp, p, zero);
  return F0 - lift(pi_image(face_twistor_universal(fp.w)), zero);
}

SMat elliptic_face_r(const FaceParams& fp, const Rat& z, int Np) {
  if (Np < 1) throw ConfigError("truncation orders must be >= 1");
  if (z == 0) throw SingularParameter("elliptic face R needs z != 0");
  auto sh = SeriesShape::make({"p"}, {Np});
  Series p = Series::var(sh, "p"), zero(sh);
  SMat Fz = face_twistor_vv(fp, p, cst(p, RatFunc(z)));
  SMat Fzi = face_twistor_vv(fp, p, cst(p, RatFunc(Rat(1) / z)));
  SMat R = lift(r_matrix_vv(RatFunc(z), fp.q, 1, 1, RatFunc(1L)), zero);
  return flip_element(Fzi) * R * invert(Fz);
}

SMat face_dybe_residual(const FaceParams& fp, const std::vector<Rat>& z, int Np, const RatFunc& shift) {
  if (z.size() != 3) throw ConfigError("dynamical YBE needs three spectral points");
  FaceParams sh{fp.q, fp.w * shift};
  auto R = [&](const FaceParams& f, int i, int j) {
    return embed_on_legs(elliptic_face_r(f, z[static_cast<std::size_t>(i)] / z[static_cast<std::size_t>(j)], Np), {i, j}, 3);
  };
  SMat lhs = R(sh, 0, 1) * R(fp, 0, 2) * R(sh, 1, 2);
  SMat rhs = R(fp, 1, 2) * R(sh, 0, 2) * R(fp, 0, 1);
  return lhs - rhs;
}

std::vector<CheckResult> verify_face_difference(const FaceParams& fp, int Np, int Nz) {
  check_orders(Np, Nz);
  std::vector<CheckResult> out;
  out.push_back(run_check("face-difference-equation", [&] { return zero_or_witness(face_difference_residual(fp, Np, Nz)); }));
  // Negative control: Ad(D_w^-1) in place of Ad(D_w).
  out.push_back(run_check("negative:face-difference-inverse-shift", [&] {
    FaceParams bad{fp.q, fp.w};
    auto sh = SeriesShape::make({"p", "z"}, {Np, Nz});
    Series p = Series::var(sh, "p"), z = Series::var(sh, "z"), zero(sh);
    SMat F = face_twistor_vv(bad, p, z);
    SMat Fpz = F.map(zero, [&](const Series& s) { return s.subst_scale("z", {1, 0}); });
    SMat D = face_shift(fp.w, zero), Di = face_shift(fp.w.inv(), zero);
    SMat rhs = Di * F * D * lift(k_matrix(fp.q), zero) * r_matrix_vv(p * z, fp.q, 1, 1, RatFunc(1L));
    return zero_or_witness(SMat(Fpz - rhs));
  }, false));
  return out;
}

std::vector<CheckResult> verify_face_initial(int Np) {
  std::vector<CheckResult> out;
  out.push_back(run_check("face-initial-condition", [&] { return zero_or_witness(face_initial_residual(Np)); }));
  // Negative control: compare against the untwisted identity.
  out.push_back(run_check("negative:face-initial-vs-identity", [&] {
    const PbwSyms& S = PbwSyms::get();
    auto sh = SeriesShape::make({"p"}, {Np});
    Series p = Series::var(sh, "p"), zero(sh);
    SMat F0 = face_twistor_vv({RatFunc::sym(S.q), RatFunc::sym(S.w)}, p, zero);
    return zero_or_witness(SMat(F0 - SMat::identity(2, zero)));
  }, false));
  return out;
}

std::vector<CheckResult> verify_phi10(const RatFunc& q, int N) {
  if (N < 1) throw ConfigError("truncation orders must be >= 1");
  std::vector<CheckResult> out;
  auto sh = SeriesShape::make({"p", "z"}, {N, N});
  Series p = Series::var(sh, "p"), z = Series::var(sh, "z");
  out.push_back(run_check("phi10-product", [&] {
    return zero_or_witness(Series(phi10_series(q, p, z) - phi10_product(q, p, z)));
  }));
  // Negative control: the q^-4 numerator parameter replaced by q^-2.
  out.push_back(run_check("negative:phi10-wrong-parameter", [&] {
    Series zero(sh);
    Series bad = hyper_2phi1(cst(p, q.pow(-2)), zero, zero, p, p * z * q.pow(2));
    return zero_or_witness(Series(bad - phi10_product(q, p, z)));
  }, false));
  return out;
}

std::vector<CheckResult> verify_face_dybe(const FaceParams& fp, const std::vector<Rat>& z, int Np) {
  std::vector<CheckResult> out;
  out.push_back(run_check("face-dynamical-ybe", [&] { return zero_or_witness(face_dybe_residual(fp, z, Np, fp.q * fp.q)); }));
  out.push_back(run_check("negative:face-static-ybe", [&] {
    return zero_or_witness(face_dybe_residual(fp, z, Np, RatFunc(1L)));
  }, false));
  return out;
}

}  // namespace eqs
