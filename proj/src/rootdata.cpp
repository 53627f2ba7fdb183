#include "eqs/rootdata.hpp"

#include "eqs/errors.hpp"

namespace eqs {

namespace {

Weight zero_w(int dim) { return Weight(static_cast<std::size_t>(dim), Rat(0)); }

Weight add(Weight a, const Weight& b, const Rat& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

RMatrix zero_m(int dim) { return RMatrix(static_cast<std::size_t>(dim), zero_w(dim)); }

RMatrix identity_m(int dim) {
  RMatrix I = zero_m(dim);
  for (int i = 0; i < dim; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return I;
}

RMatrix transpose(const RMatrix& A) {
  RMatrix T = A;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) T[i][j] = A[j][i];
  return T;
}

RMatrix sub(RMatrix a, const RMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

json w_json(const Weight& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

json m_witness(const RMatrix& M) {
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (M[i][j] != 0) return json{{"row", i}, {"col", j}, {"value", M[i][j].get_str()}};
  return json();
}

json w_witness(const Weight& v) {
  for (const auto& x : v)
    if (x != 0) return json{{"vector", w_json(v)}};
  return json();
}

// sum_i (eps_i - delta_i)
Weight sum_ed(const RootDatum& R) {
  Weight s = zero_w(R.dim());
  for (int i = 1; i <= R.n; ++i) s = add(add(s, R.eps(i)), R.dlt(i), -1);
  return s;
}

}  // namespace

Weight RootDatum::delta() const {
  Weight v = zero_w(dim());
  v[0] = 1;
  return v;
}
Weight RootDatum::eps(int i) const {
  Weight v = zero_w(dim());
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}
Weight RootDatum::dlt(int i) const {
  Weight v = zero_w(dim());
  v[static_cast<std::size_t>(n + i)] = 1;
  return v;
}

Rat form(const RootDatum& R, const Weight& a, const Weight& b) {
  const int n = R.n;
  const std::size_t dd = static_cast<std::size_t>(2 * n + 1);
  Rat s = a[0] * b[dd] + a[dd] * b[0];
  for (int i = 1; i <= n; ++i) {
    s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
    s -= a[static_cast<std::size_t>(n + i)] * b[static_cast<std::size_t>(n + i)];
  }
  return s;
}

RootDatum build_root_data(int n, const Rat& xi) {
  if (n < 1) throw ConfigError("root data needs n >= 1");
  RootDatum R;
  R.n = n;
  R.xi = xi;
  const int D = R.dim();
  R.alpha.assign(static_cast<std::size_t>(2 * n), zero_w(D));
  R.alpha[0] = add(add(R.delta(), R.eps(1), -1), R.dlt(n));
  for (int j = 1; j <= n - 1; ++j) R.alpha[static_cast<std::size_t>(2 * j)] = add(R.dlt(j), R.eps(j + 1), -1);
  for (int i = 1; i <= n; ++i) R.alpha[static_cast<std::size_t>(2 * i - 1)] = add(R.eps(i), R.dlt(i), -1);
  R.h_ex = zero_w(D);
  for (int i = 1; i <= n; ++i) R.h_ex = add(add(R.h_ex, R.eps(i)), R.dlt(i));
  R.d = zero_w(D);
  R.d[static_cast<std::size_t>(D - 1)] = 1;
  R.c = R.delta();
  Weight s = sum_ed(R);
  R.hup_ex = add(zero_w(D), s, Rat(1) / (2 * n));
  R.hup.assign(static_cast<std::size_t>(2 * n), zero_w(D));
  for (int k = 0; k <= n - 1; ++k) {
    Weight e = R.d;
    for (int i = 1; i <= k; ++i) e = add(add(e, R.eps(i)), R.dlt(i), -1);
    R.hup[static_cast<std::size_t>(2 * k)] = add(e, s, -Rat(k) / n);
    Weight o = R.d;
    for (int i = 1; i <= k + 1; ++i) o = add(o, R.eps(i));
    for (int i = 1; i <= k; ++i) o = add(o, R.dlt(i), -1);
    R.hup[static_cast<std::size_t>(2 * k + 1)] = add(o, s, -Rat(2 * k + 1) / (2 * n));
  }
  R.rho_tilde = add(zero_w(D), R.hup_ex, xi * n);
  for (const auto& h : R.hup) R.rho_tilde = add(R.rho_tilde, h);
  return R;
}

RMatrix cartan_matrix(const RootDatum& R) {
  const std::size_t m = R.alpha.size();
  RMatrix A(m, Weight(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) A[i][j] = form(R, R.alpha[i], R.alpha[j]);
  return A;
}

Weight act(const RMatrix& A, const Weight& v) {
  Weight r(A.size(), Rat(0));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += A[i][j] * v[j];
  return r;
}

RMatrix mat_mul(const RMatrix& A, const RMatrix& B) {
  const std::size_t m = A.size();
  RMatrix C(m, Weight(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      if (A[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

RMatrix mat_inverse(const RMatrix& M) {
  const std::size_t m = M.size();
  RMatrix A = M, B = identity_m(static_cast<int>(m));
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && A[piv][c] == 0) ++piv;
    if (piv == m) throw NonInvertible("singular matrix");
    std::swap(A[c], A[piv]);
    std::swap(B[c], B[piv]);
    Rat ip = Rat(1) / A[c][c];
    for (std::size_t j = 0; j < m; ++j) {
      A[c][j] *= ip;
      B[c][j] *= ip;
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Rat f = A[r][c];
      for (std::size_t j = 0; j < m; ++j) {
        A[r][j] -= f * A[c][j];
        B[r][j] -= f * B[c][j];
      }
    }
  }
  return B;
}

RMatrix outer(const Weight& a, const Weight& b) {
  RMatrix M(a.size(), Weight(b.size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) M[i][j] = a[i] * b[j];
  return M;
}

RMatrix tau_matrix(const RootDatum& R) {
  const int n = R.n, D = R.dim();
  Weight s = sum_ed(R);
  // columns: the dual basis and its images
  std::vector<Weight> from, to;
  from.push_back(R.hup_ex);
  to.push_back(add(add(zero_w(D), R.hup_ex, -1), R.c, Rat(1) / (2 * n)));
  for (int k = 0; k <= n - 1; ++k) {
    Weight e = add(R.hup[static_cast<std::size_t>((2 * k + 1) % (2 * n))], s, R.xi / (2 * n));
    from.push_back(R.hup[static_cast<std::size_t>(2 * k)]);
    to.push_back(add(e, R.c, -(R.xi + n - 2 * k - 1) / (2 * n)));
    Weight o = add(R.hup[static_cast<std::size_t>((2 * k + 2) % (2 * n))], s, R.xi / (2 * n));
    from.push_back(R.hup[static_cast<std::size_t>(2 * k + 1)]);
    to.push_back(add(o, R.c, -Rat(n - 2 * k - 1) / (2 * n)));
  }
  from.push_back(R.c);
  to.push_back(R.c);
  RMatrix F = zero_m(D), T = zero_m(D);
  for (std::size_t j = 0; j < from.size(); ++j)
    for (std::size_t i = 0; i < static_cast<std::size_t>(D); ++i) {
      F[i][j] = from[j][i];
      T[i][j] = to[j][i];
    }
  return mat_mul(T, mat_inverse(F));
}

RMatrix canonical_T(const RootDatum& R) {
  RMatrix T = outer(R.h_ex, R.hup_ex);
  for (std::size_t i = 0; i < R.alpha.size(); ++i) T = sub(T, sub(zero_m(R.dim()), outer(R.alpha[i], R.hup[i])));
  return sub(T, sub(zero_m(R.dim()), outer(R.d, R.c)));
}

Rat sum_constant(const RootDatum& R, bool printed) {
  Rat base(2 * (R.n * R.n - 1));
  Rat x = 3 * R.xi;
  return (printed ? Rat(base - x) : Rat(base + x)) / 6;
}

RMatrix t_tilde(const RootDatum& R, bool printed) {
  const int n = R.n;
  Rat kappa = sum_constant(R, printed);
  RMatrix M = outer(R.rho_tilde, R.c);
  M = sub(M, sub(zero_m(R.dim()), outer(R.c, R.rho_tilde)));
  M = sub(M, outer(R.c, add(zero_w(R.dim()), R.c, kappa)));
  for (auto& row : M)
    for (auto& x : row) x /= 2 * n;
  return M;
}

std::vector<CheckResult> verify_root_data(int n, const Rat& xi) {
  RootDatum R = build_root_data(n, xi);
  const int D = R.dim();
  std::vector<CheckResult> out;
  const std::string tag = "n=" + std::to_string(n) + ",xi=" + xi.get_str() + ":";
  out.push_back(run_check(tag + "isotropic-roots", [&]() -> json {
    for (std::size_t i = 0; i < R.alpha.size(); ++i)
      if (form(R, R.alpha[i], R.alpha[i]) != 0) return json{{"root", i}};
    return json();
  }));
  out.push_back(run_check(tag + "roots-sum-to-delta", [&] {
    Weight s = zero_w(D);
    for (const auto& a : R.alpha) s = add(s, a);
    return w_witness(add(s, R.c, -1));
  }));
  out.push_back(run_check(tag + "cartan-symmetric", [&] {
    RMatrix A = cartan_matrix(R);
    return m_witness(sub(A, transpose(A)));
  }));
  std::vector<Weight> basis = {R.h_ex}, dual = {R.hup_ex};
  for (std::size_t i = 0; i < R.alpha.size(); ++i) {
    basis.push_back(R.alpha[i]);
    dual.push_back(R.hup[i]);
  }
  basis.push_back(R.d);
  dual.push_back(R.c);
  out.push_back(run_check(tag + "dual-basis", [&] {
    RMatrix P = zero_m(D);
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j)
        P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = form(R, basis[static_cast<std::size_t>(i)], dual[static_cast<std::size_t>(j)]);
    return m_witness(sub(P, identity_m(D)));
  }));
  // canonical element: sum over a basis and its dual equals the inverse Gram matrix
  out.push_back(run_check(tag + "T-canonical", [&] {
    RMatrix G = zero_m(D);
    for (int i = 0; i < D; ++i)
      for (int j = 0; j < D; ++j) {
        Weight a = zero_w(D), b = zero_w(D);
        a[static_cast<std::size_t>(i)] = 1;
        b[static_cast<std::size_t>(j)] = 1;
        G[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = form(R, a, b);
      }
    return m_witness(sub(canonical_T(R), mat_inverse(G)));
  }));
  RMatrix tau = tau_matrix(R);
  out.push_back(run_check(tag + "tau-on-h", [&]() -> json {
    for (int i = 0; i < 2 * n; ++i) {
      Weight d = add(act(tau, R.alpha[static_cast<std::size_t>(i)]), R.alpha[static_cast<std::size_t>((i + 1) % (2 * n))], -1);
      if (json w = w_witness(d); !w.is_null()) {
        w["i"] = i;
        return w;
      }
    }
    return json();
  }));
  out.push_back(run_check(tag + "tau-on-hex", [&] {
    return w_witness(add(add(act(tau, R.h_ex), R.h_ex), R.c, -xi));
  }));
  out.push_back(run_check(tag + "tau-period", [&] {
    RMatrix P = identity_m(D);
    for (int k = 0; k < 2 * n; ++k) P = mat_mul(tau, P);
    Weight d = zero_w(D);
    for (const auto& a : R.alpha) {
      Weight x = add(act(P, a), a, -1);
      for (int i = 0; i < D; ++i) d[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    }
    return w_witness(d);
  }));
  out.push_back(run_check(tag + "tau-rho-tilde", [&] { return w_witness(add(act(tau, R.rho_tilde), R.rho_tilde, -1)); }));
  out.push_back(run_check(tag + "rho-tilde-principal", [&]() -> json {
    for (std::size_t i = 0; i < R.alpha.size(); ++i)
      if (form(R, R.rho_tilde, R.alpha[i]) != 1) return json{{"root", i}, {"value", form(R, R.rho_tilde, R.alpha[i]).get_str()}};
    return json();
  }));
  RMatrix T = canonical_T(R);
  out.push_back(run_check(tag + "tau-tau-T", [&] { return m_witness(sub(mat_mul(mat_mul(tau, T), transpose(tau)), T)); }));
  RMatrix tau_sum = zero_m(D);
  {
    RMatrix P = identity_m(D);
    for (int k = 1; k <= 2 * n; ++k) {
      P = mat_mul(tau, P);
      tau_sum = sub(tau_sum, sub(zero_m(D), mat_mul(P, T)));
    }
  }
  auto sum_rhs = [&](bool printed) {
    RMatrix Tt = t_tilde(R, printed);
    for (auto& row : Tt)
      for (auto& x : row) x *= 2 * n;
    return Tt;
  };
  out.push_back(run_check(tag + "tau-sum-T", [&] { return m_witness(sub(tau_sum, sum_rhs(true))); }));
  // same identity with the xi term of the c (x) c coefficient entering as +3xi
  out.push_back(run_check(tag + "tau-sum-T-plus-3xi", [&] { return m_witness(sub(tau_sum, sum_rhs(false))); }));
  out.push_back(run_check(tag + "tau-sum-T-minus-Ttilde", [&] {
    RMatrix S = zero_m(D), P = identity_m(D), d = sub(T, t_tilde(R));
    for (int k = 1; k <= 2 * n; ++k) {
      P = mat_mul(tau, P);
      S = sub(S, sub(zero_m(D), mat_mul(P, d)));
    }
    return m_witness(S);
  }));
  // Negative control: the c (x) c coefficient with the opposite sign of xi.
  out.push_back(run_check(tag + "negative:tau-sum-wrong-constant", [&] {
    const RMatrix& S = tau_sum;
    RMatrix rhs = sub(outer(R.rho_tilde, R.c), sub(zero_m(D), outer(R.c, R.rho_tilde)));
    Rat kappa = (Rat(2 * (n * n - 1)) + 3 * xi + 1) / 6;
    rhs = sub(rhs, outer(R.c, add(zero_w(D), R.c, kappa)));
    return m_witness(sub(S, rhs));
  }, false));
  return out;
}

}  // namespace eqs
