#include "eqs/vertex.hpp"

#include "eqs/errors.hpp"

namespace eqs {

const std::array<const char*, 4> kXijNames = {"X11", "X12", "X21", "X22"};

namespace {

Series cst(const Series& like, const RatFunc& c) { return Series::constant(like.shape(), c); }

SMat kron_entry(int i1, int j1, int i2, int j2, const Series& v) {
  Series zero(v.shape());
  return super_kron(SMat::unit(i1, j1, zero, v), SMat::unit(i2, j2, zero));
}

Series pw(const Series& x, int k) { return x.pow(static_cast<unsigned>(k)); }

int kmax(const Series& h) { return (h.shape()->bound[0] + 1) / 2; }

void check_orders(int a, int b) {
  if (a < 1 || b < 1) throw ConfigError("truncation orders must be >= 1");
}

}  // namespace

ShapePtr vertex_shape(int Nh, int Nzeta) { return SeriesShape::make({"h", "zeta"}, {Nh, Nzeta}); }

DrinfeldImages tau_drinfeld_image(int n, const RatFunc& q, const RatFunc& z, const VertexVariant& v) {
  DrinfeldImages r;
  RatFunc sg = (n % 2 == 0) ? RatFunc(1L) : RatFunc(-1L);
  RatFunc qn = q.pow(-n);
  r.Xp = eunit(v.printed_tau_x ? 1 : 2, v.printed_tau_x ? 2 : 1, sg * z.pow(2L * n + 1) * qn);
  r.Xm = eunit(v.printed_tau_x ? 2 : 1, v.printed_tau_x ? 1 : 2, -(sg * z.pow(2L * n - 1) * qn));
  if (n == 0) {
    // tau(H_0) = c - H_0, tau(H^ex_0) = -H^ex_0 + xi c; c -> 0 at level zero
    r.H = eunit(1, 1, RatFunc(-1L)) + eunit(2, 2, RatFunc(-1L));
    r.Hex = eunit(1, 1, RatFunc(-2L));
    return r;
  }
  RatFunc pre = -sg * z.pow(2L * n) * RatFunc(Rat(Rat(1) / n));
  RatFunc beta = v.printed_tau_hex ? q_diff(q) * RatFunc(Rat(1, 2)) : q_diff(q);
  r.H = (eunit(1, 1) + eunit(2, 2)).scaled(pre * q_int(n, q));
  r.Hex = (eunit(1, 1, q.pow(-n)) + (eunit(1, 1) + eunit(2, 2)).scaled(beta * q_int(n, q))).scaled(pre * q_int(2L * n, q));
  return r;
}

LegImages tau_leg(const RatFunc& q, const Series& x, const VertexVariant& v) {
  Series zero(x.shape());
  // x^{2n+1}, x^{2n-1}, x^{2n}: only n >= 0 (resp. n >= 1 for X^-) are used by the product
  auto img = [=](int n) {
    if (n < 0) throw PreconditionViolation("tau leg images are used for n >= 0 only");
    return n;
  };
  const int xp_i = v.printed_tau_x ? 1 : 2, xp_j = v.printed_tau_x ? 2 : 1;
  LegImages L;
  L.Xp = [=](int n) {
    img(n);
    RatFunc sg = (n % 2 == 0) ? RatFunc(1L) : RatFunc(-1L);
    return eunit(xp_i, xp_j, zero).scaled(pw(x, 2 * n + 1) * (sg * q.pow(-n)));
  };
  L.Xm = [=](int n) {
    if (img(n) == 0) throw PreconditionViolation("tau(X^-_0) carries z^{-1}");
    RatFunc sg = (n % 2 == 0) ? RatFunc(-1L) : RatFunc(1L);
    return eunit(xp_j, xp_i, zero).scaled(pw(x, 2 * n - 1) * (sg * q.pow(-n)));
  };
  L.H = [=](int n) {
    RatFunc sg = (img(n) % 2 == 0) ? RatFunc(-1L) : RatFunc(1L);
    return SMat::identity(1, zero).scaled(pw(x, 2 * n) * (sg * q_int(n, q) * RatFunc(Rat(Rat(1) / n))));
  };
  L.Hex = [=](int n) {
    RatFunc sg = (img(n) % 2 == 0) ? RatFunc(-1L) : RatFunc(1L);
    RatFunc beta = v.printed_tau_hex ? q_diff(q) * RatFunc(Rat(1, 2)) : q_diff(q);
    RatFunc pre = sg * q_int(2L * n, q) * RatFunc(Rat(Rat(1) / n));
    SMat m = eunit(1, 1, zero, q.pow(-n)) + SMat::identity(1, zero).scaled(beta * q_int(n, q));
    return m.scaled(pw(x, 2 * n) * pre);
  };
  // q^{-tau(H_0)} = q^{H_0}
  L.qmH0 = SMat::identity(1, zero).scaled(q);
  L.qH0 = SMat::identity(1, zero).scaled(q.inv());
  return L;
}

Series rho_odd(int k, const RatFunc& q, const Series& h, const Series& zeta) {
  Series one = cst(h, RatFunc(1L));
  Series a = pw(h, 4 * k - 2) * pw(zeta, 2);
  Series d = one + a;
  return (one + a * q.pow(2)) * (one + a * q.pow(-2)) * series_invert(d * d);
}

SMat ebar_even(int k, const RatFunc& q, const Series& h, const Series& zeta) {
  Series one = cst(h, RatFunc(1L));
  Series a = pw(h, 4 * k) * pw(zeta, 2);
  Series b = pw(h, 2 * k) * zeta * q_diff(q);
  SMat M = kron_entry(1, 1, 1, 1, one - a * q.pow(-2));
  M += kron_entry(2, 2, 2, 2, one - a * q.pow(2));
  M += kron_entry(1, 1, 2, 2, one - a);
  M += kron_entry(2, 2, 1, 1, one - a);
  M += kron_entry(1, 2, 2, 1, -b);
  M += kron_entry(2, 1, 1, 2, b);
  return M.scaled(series_invert(one - a * q.pow(2)));
}

SMat ebar_odd(int k, const RatFunc& q, const Series& h, const Series& zeta, const VertexVariant& v) {
  Series one = cst(h, RatFunc(1L));
  Series a = pw(h, 4 * k - 2) * pw(zeta, 2);
  Series b = pw(h, 2 * k - 1) * zeta * q_diff(q);
  SMat M = kron_entry(1, 1, 1, 1, one + a * q.pow(2));
  M += kron_entry(2, 2, 2, 2, one + a * q.pow(-2));
  M += kron_entry(1, 1, 2, 2, one + a);
  M += kron_entry(2, 2, 1, 1, one + a);
  if (v.printed_ebar_odd) {
    M += kron_entry(1, 2, 2, 1, b);
    M += kron_entry(2, 1, 1, 2, -b);
  } else {
    M += kron_entry(1, 2, 1, 2, b);
    M += kron_entry(2, 1, 2, 1, -b);
  }
  return M.scaled(series_invert(one + a * q.pow(-2)));
}

SMat vertex_twistor_product(const RatFunc& q, const Series& h, const Series& zeta, const VertexVariant& v) {
  Series zero(h.shape());
  SMat K = lift(k_matrix(q), zero), Ki = lift(invert(k_matrix(q)), zero);
  SMat E = SMat::identity(2, zero);
  for (int k = 1; k <= kmax(h); ++k) {
    SMat f = K * ebar_even(k, q, h, zeta) * Ki * ebar_odd(k, q, h, zeta, v);
    if (!v.drop_rho) f = f.scaled(rho_odd(k, q, h, zeta));
    E = f * E;
  }
  return E;
}

SMat e2_product(const RatFunc& q, const Series& h, const Series& zeta) {
  Series zero(h.shape()), one = cst(h, RatFunc(1L));
  SMat E = SMat::identity(2, zero);
  for (int k = 1; k <= kmax(h); ++k) {
    Series a = pw(h, 4 * k) * pw(zeta, 2);
    Series b = pw(h, 2 * k) * zeta * q_diff(q);
    SMat f = kron_entry(1, 1, 2, 2, one - a) + kron_entry(2, 2, 1, 1, one - a);
    f += kron_entry(1, 2, 2, 1, -b);
    f += kron_entry(2, 1, 1, 2, b);
    E = f.scaled(series_invert(one + pw(h, 4 * k - 2) * pw(zeta, 2))) * E;
  }
  return E;
}

VertexClosedForms vertex_closed_forms(const RatFunc& q, const Series& h, const Series& zeta) {
  VertexClosedForms r;
  Series zero(h.shape()), one = cst(h, RatFunc(1L));
  Series p = h * h, p2 = p * p, z2 = zeta * zeta;
  r.rho = poch_infinite(-(p * z2 * q.pow(2)), p2) *
          series_invert(poch_infinite(p * zeta * q, p) * poch_infinite(-(p * zeta * q), p));
  Series den = series_invert(poch_infinite(-(p * z2), p2));
  Series plus = poch_infinite(p * zeta * q, p) * poch_infinite(-(p * zeta * q.inv()), p) * den;
  Series minus = poch_infinite(p * zeta * q.inv(), p) * poch_infinite(-(p * zeta * q), p) * den;
  r.bE = (plus + minus) * RatFunc(Rat(1, 2));
  r.cE = (plus - minus) * RatFunc(Rat(1, 2));
  r.E2 = kron_entry(1, 1, 2, 2, r.bE) + kron_entry(2, 2, 1, 1, r.bE);
  r.E2 += kron_entry(1, 2, 2, 1, r.cE);
  r.E2 += kron_entry(2, 1, 1, 2, -r.cE);
  r.E1 = SMat::identity(2, zero);
  for (int k = 1; k <= kmax(h); ++k) {
    Series a = pw(h, 4 * k - 2) * z2, b = pw(h, 4 * k) * z2;
    Series odd = pw(h, 2 * k - 1) * zeta * q_diff(q);
    SMat f = kron_entry(1, 1, 1, 1, (one - b * q.pow(-2)) * (one + a * q.pow(2)));
    f += kron_entry(2, 2, 2, 2, (one - b * q.pow(2)) * (one + a * q.pow(-2)));
    f += kron_entry(1, 2, 1, 2, odd * (one - b * q.pow(-2)));
    f += kron_entry(2, 1, 2, 1, -(odd * (one - b * q.pow(2))));
    r.E1 = f.scaled(series_invert((one + a) * (one + a))) * r.E1;
  }
  return r;
}

std::array<Series, 4> xij_from_e1(const SMat& E1) {
  // super_kron(e12, e12) has entry -1 at (0, 3); e21 (x) e21 has +1 at (3, 0)
  return {E1(0, 0), -E1(0, 3), E1(3, 0), E1(3, 3)};
}

std::array<Series, 4> solve_xij(const RatFunc& q, const ShapePtr& sh) {
  if (sh->vars.size() != 2) throw ConfigError("solve_xij expects the (h, zeta) shape");
  const int Nh = sh->bound[0], Nz = sh->bound[1];
  const RatFunc c = q_diff(q);
  // (1 - s p^2 zeta^2) X_i(p zeta) = (1 + t p zeta^2) X_i(zeta) + u p^{1/2} zeta X_k(zeta)
  struct Eq {
    RatFunc s, t, u;
    int k;
  };
  const std::array<Eq, 4> eqs = {Eq{q.pow(-2), q.pow(-2), -c, 1}, Eq{q.pow(2), q.pow(2), -c, 0},
                                 Eq{q.pow(-2), q.pow(-2), c, 3}, Eq{q.pow(2), q.pow(2), c, 2}};
  std::array<Series, 4> X = {Series(sh), Series(sh), Series(sh), Series(sh)};
  auto get = [&](int i, int a, int j) {
    if (a < 0 || j < 0) return RatFunc();
    return X[static_cast<std::size_t>(i)].coeff({a, j});
  };
  X[0].set({0, 0}, RatFunc(1L));
  X[3].set({0, 0}, RatFunc(1L));
  for (int j = 1; j <= Nz; ++j)
    for (int a = 0; a <= Nh; ++a)
      for (int i = 0; i < 4; ++i) {
        const Eq& e = eqs[static_cast<std::size_t>(i)];
        RatFunc v = get(i, a - 2 * j, j) - e.s * get(i, a - 2 * j, j - 2) - e.t * get(i, a - 2, j - 2) - e.u * get(e.k, a - 1, j - 1);
        if (!v.is_zero()) X[static_cast<std::size_t>(i)].set({a, j}, v);
      }
  return X;
}

SMat r_tilde_vv(const RatFunc& q, const Series& zeta) {
  Series one = cst(zeta, RatFunc(1L));
  Series z2 = zeta * zeta;
  Series den = series_invert(one - z2 * q.pow(-2));
  RatFunc c = q_diff(q);
  SMat R = kron_entry(1, 1, 1, 1, (cst(zeta, q.pow(-2)) - z2) * den);
  R += kron_entry(2, 2, 2, 2, one);
  R += kron_entry(1, 1, 2, 2, (one - z2) * den * q.inv());
  R += kron_entry(2, 2, 1, 1, (one - z2) * den * q.inv());
  R += kron_entry(1, 2, 2, 1, zeta * den * (q.inv() * c));
  R += kron_entry(2, 1, 1, 2, -(zeta * den * (q.inv() * c)));
  return R;
}

SMat vertex_middle(const RatFunc& q, const Series& x, const VertexVariant& v) {
  Series one = cst(x, RatFunc(1L));
  int nmax = 0;
  for (int b : x.shape()->bound) nmax += b;
  SMat Rp = universal_r_prime(tau_leg(q, x, v), homogeneous_leg(q, 1, RatFunc(1L), one), q, nmax);
  // (tau x 1) q^{-T} = q^{T}
  return Rp * lift(k_matrix(q), Series(x.shape()));
}

SMat vertex_difference_residual(const RatFunc& q, int Nh, int Nzeta, const VertexVariant& v) {
  check_orders(Nh, Nzeta);
  auto sh = vertex_shape(Nh, Nzeta);
  Series h = Series::var(sh, "h"), zeta = Series::var(sh, "zeta"), zero(sh);
  SMat E = vertex_twistor_product(q, h, zeta, v);
  SMat Esh = E.map(zero, [](const Series& s) { return s.subst_scale("zeta", {2, 0}); });
  return Esh - E * vertex_middle(q, h * zeta, v) * r_tilde_vv(q, h * h * zeta);
}

SMat elliptic_vertex_r(const RatFunc& q, const Rat& zeta, int Nh, bool graded) {
  if (Nh < 1) throw ConfigError("truncation orders must be >= 1");
  if (zeta == 0) throw SingularParameter("elliptic vertex R needs zeta != 0");
  auto sh = SeriesShape::make({"h"}, {Nh});
  Series h = Series::var(sh, "h");
  Series z = Series::constant(sh, RatFunc(zeta)), zi = Series::constant(sh, RatFunc(Rat(1) / zeta));
  SMat Ei = vertex_twistor_product(q, h, zi);
  SMat E = vertex_twistor_product(q, h, z);
  return flip_element(Ei, graded) * r_tilde_vv(q, z) * invert(E);
}

SMat vertex_ybe_residual(const RatFunc& q, const std::vector<Rat>& zeta, int Nh, bool graded) {
  if (zeta.size() != 3) throw ConfigError("YBE needs three spectral points");
  auto R = [&](int i, int j) {
    return embed_on_legs(elliptic_vertex_r(q, zeta[static_cast<std::size_t>(i)] / zeta[static_cast<std::size_t>(j)], Nh, graded),
                         {i, j}, 3, graded);
  };
  return R(0, 1) * R(0, 2) * R(1, 2) - R(1, 2) * R(0, 2) * R(0, 1);
}

std::vector<CheckResult> verify_vertex_product(const RatFunc& q, int Nh, int Nzeta, int Nh_bc, int Nh_x) {
  check_orders(Nh, Nzeta);
  check_orders(Nh_bc, Nh_x);
  std::vector<CheckResult> out;
  auto sh = vertex_shape(Nh, Nzeta);
  Series h = Series::var(sh, "h"), zeta = Series::var(sh, "zeta"), zero(sh);
  SMat E = vertex_twistor_product(q, h, zeta);
  VertexClosedForms cf = vertex_closed_forms(q, h, zeta);
  out.push_back(run_check("vertex-initial", [&] {
    // zeta^0 layer of E must be the identity
    SMat d = -SMat::identity(2, zero);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int a = 0; a <= Nh; ++a) d(i, j) += Series::monomial(sh, {a, 0}, E(i, j).coeff({a, 0}));
    return zero_or_witness(d);
  }));
  out.push_back(run_check("vertex-product-vs-closed", [&] {
    return zero_or_witness(SMat(E - (cf.E1 + cf.E2).scaled(cf.rho)));
  }));
  {
    auto shb = vertex_shape(Nh_bc, Nzeta);
    Series hb = Series::var(shb, "h"), zb = Series::var(shb, "zeta");
    out.push_back(run_check("bE-cE-closed", [&] {
      SMat E2 = e2_product(q, hb, zb);
      VertexClosedForms c = vertex_closed_forms(q, hb, zb);
      SMat d = E2 - c.E2;
      return zero_or_witness(d);
    }));
  }
  {
    auto shx = vertex_shape(Nh_x, Nzeta);
    Series hx = Series::var(shx, "h"), zx = Series::var(shx, "zeta");
    out.push_back(run_check("xij-vs-e1", [&]() -> json {
      auto X = solve_xij(q, shx);
      auto Y = xij_from_e1(vertex_closed_forms(q, hx, zx).E1);
      for (std::size_t i = 0; i < 4; ++i) {
        Series d = X[i] - Y[i];
        if (!d.is_zero()) {
          json w = witness_of(d);
          w["entry"] = kXijNames[i];
          return w;
        }
      }
      return json();
    }));
  }
  out.push_back(run_check("negative:vertex-product-without-rho", [&] {
    VertexVariant v;
    v.drop_rho = true;
    return zero_or_witness(SMat(vertex_twistor_product(q, h, zeta, v) - (cf.E1 + cf.E2).scaled(cf.rho)));
  }, false));
  out.push_back(run_check("negative:vertex-product-printed-ebar-odd", [&] {
    VertexVariant v;
    v.printed_ebar_odd = true;
    return zero_or_witness(SMat(vertex_twistor_product(q, h, zeta, v) - (cf.E1 + cf.E2).scaled(cf.rho)));
  }, false));
  return out;
}

std::vector<CheckResult> verify_vertex_difference(const RatFunc& q, int Nh, int Nzeta) {
  std::vector<CheckResult> out;
  out.push_back(run_check("vertex-difference-equation", [&] { return zero_or_witness(vertex_difference_residual(q, Nh, Nzeta)); }));
  // K = (pi x pi) q^{T}; (pi x pi) q^{T~} = 1 since every term of T~ contains c and pi(c) = pi(h_0 + h_1) = 0.
  out.push_back(run_check("qT-image-is-K", [&] {
    ChevalleyImages ch = eval_rep_chevalley(q, 1, 0, RatFunc(1L), RatFunc(1L));
    Mat hh = super_kron(ch.h1, ch.hex) + super_kron(ch.hex, ch.h1);  // 2T
    Mat qT(2, RatFunc());
    for (int i = 0; i < 4; ++i) {
      Rat e = hh(i, i).const_value() / 2;
      if (e.get_den() != 1) throw PreconditionViolation("T image is not integral");
      qT(i, i) = q.pow(e.get_num().get_si());
    }
    return zero_or_witness(Mat(qT - k_matrix(q)));
  }));
  out.push_back(run_check("negative:qT-equals-qTtilde", [&] {
    ChevalleyImages ch = eval_rep_chevalley(q, 1, 0, RatFunc(1L), RatFunc(1L));
    Mat c_img = ch.h0 + ch.h1;
    if (!c_img.is_zero()) throw PreconditionViolation("central element has nonzero image");
    return zero_or_witness(Mat(k_matrix(q) - Mat::identity(2, RatFunc())));
  }, false));
  for (auto [id, var] : std::vector<std::pair<std::string, VertexVariant>>{
           {"negative:vertex-difference-printed-tau-x", VertexVariant{false, true, false, false}},
           {"negative:vertex-difference-printed-tau-hex", VertexVariant{false, false, true, false}}}) {
    out.push_back(run_check(id, [&] { return zero_or_witness(vertex_difference_residual(q, Nh, Nzeta, var)); }, false));
  }
  return out;
}

std::vector<CheckResult> verify_vertex_ybe(const RatFunc& q, const std::vector<Rat>& zeta, int Nh) {
  std::vector<CheckResult> out;
  out.push_back(run_check("vertex-ybe", [&] { return zero_or_witness(vertex_ybe_residual(q, zeta, Nh)); }));
  out.push_back(run_check("negative:vertex-ybe-ungraded", [&] { return zero_or_witness(vertex_ybe_residual(q, zeta, Nh, false)); }, false));
  return out;
}

}  // namespace eqs
