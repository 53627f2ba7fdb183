#include "eqs/quasihopf.hpp"

#include "eqs/errors.hpp"

namespace eqs {

namespace {

RatFunc qsym() { return RatFunc::sym(PbwSyms::get().q); }
RatFunc qdiff() { return qsym() - qsym().inv(); }

// x -> prod_{s in shifts} u_s^2 in every coefficient
RatFunc subst_shift(const RatFunc& c, const std::set<int>& shifts) {
  const auto& s = PbwSyms::get();
  return c.map_exps([&](const Exp& e) {
    Exp r = e;
    int ex = e[static_cast<std::size_t>(s.x)];
    r[static_cast<std::size_t>(s.x)] = 0;
    for (int k : shifts) {
      auto& t = r[static_cast<std::size_t>(s.u[static_cast<std::size_t>(k)])];
      t = static_cast<int16_t>(t + 2 * ex);
    }
    return r;
  });
}

TElem place3(const TElem& x, std::vector<int> t) { return place(x, t, 3); }

}  // namespace

TElem universal_r() {
  TElem ef = TElem::gen(2, 0, "e") * TElem::gen(2, 1, "f");
  return (TElem::one(2) + ef * qdiff()) * TElem::G(2, 0, 1);
}

TElem face_twistor_universal(const RatFunc& W) {
  if (W.is_one()) throw ConfigError("face twistor: w = 1 is singular");
  const auto& s = PbwSyms::get();
  RatFunc coef = qdiff() * W / (RatFunc(1L) - W);
  TElem ef = TElem::gen(2, 0, "e") * TElem::gen(2, 1, "f");
  // q^{-h} on leg 1 and q^{h} on leg 2 are central: u_1^{-1} u_2
  return TElem::one(2) - ef * (coef * RatFunc::sym(s.u[0], -1) * RatFunc::sym(s.u[1]));
}

TElem face_twistor_dyn(int n, int i, int j, const std::set<int>& shifts) {
  const auto& s = PbwSyms::get();
  RatFunc W = RatFunc::sym(s.w) * RatFunc::sym(s.u[0], 2) * RatFunc::sym(s.x);
  TElem F = place(face_twistor_universal(W), {i, j}, n);
  return F.map_coeffs([&](const RatFunc& c) { return subst_shift(c, shifts); });
}

TElem r_dyn(int n, int i, int j, const std::set<int>& shifts) {
  TElem R = place(universal_r(), {i, j}, n);
  return face_twistor_dyn(n, j, i, shifts) * R * inverse(face_twistor_dyn(n, i, j, shifts));
}

TElem QuasiHopf::delta(const TElem& X, int leg) const {
  const int n = X.legs() + 1;
  return place(F, {leg, leg + 1}, n) * coproduct(X, leg) * place(Finv, {leg, leg + 1}, n);
}

QuasiHopf base_structure() {
  QuasiHopf s;
  s.F = s.Finv = TElem::one(2);
  s.Phi = s.PhiInv = TElem::one(3);
  s.alpha = s.beta = TElem::one(1);
  s.R = universal_r();
  return s;
}

QuasiHopf twist_structure(const TElem& F) {
  if (F.legs() != 2) throw ConfigError("twistor must be a two-leg element");
  if (F.parity() != 0) throw PreconditionViolation("twistor must be even");
  QuasiHopf s;
  s.F = F;
  s.Finv = inverse(F);
  TElem F12 = place3(F, {0, 1}), F23 = place3(F, {1, 2});
  TElem F12i = place3(s.Finv, {0, 1}), F23i = place3(s.Finv, {1, 2});
  // Phi_F = F12 (Delta (x) 1)F (1 (x) Delta)F^-1 F23^-1
  s.Phi = F12 * coproduct(F, 0) * coproduct(s.Finv, 1) * F23i;
  s.PhiInv = F23 * coproduct(F, 1) * coproduct(s.Finv, 0) * F12i;
  // alpha_F = S(fbar_i) fbar^i, beta_F = f_i S(f^i)
  s.alpha = merge_legs(antipode(s.Finv, 0), 0);
  s.beta = merge_legs(antipode(F, 1), 0);
  s.R = place(F, {1, 0}, 2) * universal_r() * s.Finv;
  return s;
}

std::vector<std::pair<std::string, TElem>> test_generators() {
  return {{"e", TElem::gen(1, 0, "e")},
          {"f", TElem::gen(1, 0, "f")},
          {"tex", TElem::gen(1, 0, "tex")},
          {"tex^-1", TElem::gen(1, 0, "tex", -1)},
          {"t", TElem::gen(1, 0, "t")},
          {"ef", TElem::gen(1, 0, "e") * TElem::gen(1, 0, "f")}};
}

std::vector<std::string> axiom_ids() {
  return {"coassoc",    "pentagon",   "counit-phi",   "counit-delta",  "antipode-1", "antipode-2",
          "antipode-3", "antipode-4", "quasi-tri-dr", "quasi-tri-d1r", "quasi-tri-1dr", "quasi-ybe"};
}

json verify_axiom(const std::string& id, const QuasiHopf& s) {
  auto gens = test_generators();
  auto first_bad = [&](const std::function<TElem(const TElem&)>& residual) -> json {
    for (const auto& [name, a] : gens) {
      TElem r = residual(a);
      if (!r.is_zero()) {
        json w = witness_of(r);
        w["generator"] = name;
        return w;
      }
    }
    return json();
  };
  auto ed = [&](const TElem& a) { return counit(a, 0).scalar_part(); };

  if (id == "coassoc") {
    return first_bad([&](const TElem& a) {
      TElem d = s.delta(a, 0);
      return s.delta(d, 1) - s.PhiInv * s.delta(d, 0) * s.Phi;
    });
  }
  if (id == "pentagon") {
    TElem lhs = s.delta(s.Phi, 0) * s.delta(s.Phi, 2);
    TElem rhs = place(s.Phi, {0, 1, 2}, 4) * s.delta(s.Phi, 1) * place(s.Phi, {1, 2, 3}, 4);
    return zero_or_witness(lhs - rhs);
  }
  if (id == "counit-phi") {
    for (int leg = 0; leg < 3; ++leg) {
      TElem r = counit(s.Phi, leg) - TElem::one(2);
      if (!r.is_zero()) {
        json w = witness_of(r);
        w["leg"] = leg + 1;
        return w;
      }
    }
    return json();
  }
  if (id == "counit-delta") {
    return first_bad([&](const TElem& a) {
      TElem d = s.delta(a, 0);
      TElem r1 = counit(d, 0) - a;
      return r1.is_zero() ? counit(d, 1) - a : r1;
    });
  }
  if (id == "antipode-1") {
    return first_bad([&](const TElem& a) {
      TElem y = place(s.alpha, {1}, 2) * antipode(s.delta(a, 0), 0);
      return merge_legs(y, 0) - s.alpha * ed(a);
    });
  }
  if (id == "antipode-2") {
    return first_bad([&](const TElem& a) {
      TElem y = place(s.beta, {1}, 2) * antipode(s.delta(a, 0), 1);
      return merge_legs(y, 0) - s.beta * ed(a);
    });
  }
  if (id == "antipode-3") {
    TElem ba = place(s.beta, {1}, 3) * place(s.alpha, {2}, 3);
    TElem y = ba * antipode(s.PhiInv, 1);
    return zero_or_witness(merge_legs(merge_legs(y, 0), 0) - TElem::one(1));
  }
  if (id == "antipode-4") {
    TElem ab = place(s.alpha, {1}, 3) * place(s.beta, {2}, 3);
    TElem y = antipode(ab * antipode(s.Phi, 2), 0);
    return zero_or_witness(merge_legs(merge_legs(y, 0), 0) - TElem::one(1));
  }
  if (id == "quasi-tri-dr") {
    return first_bad([&](const TElem& a) {
      TElem d = s.delta(a, 0);
      return permute(d, {2, 1}) * s.R - s.R * d;
    });
  }
  TElem R12 = place3(s.R, {0, 1}), R13 = place3(s.R, {0, 2}), R23 = place3(s.R, {1, 2});
  auto P = [&](const std::vector<int>& sig) { return permute(s.Phi, sig); };
  auto Pi = [&](const std::vector<int>& sig) { return permute(s.PhiInv, sig); };
  if (id == "quasi-tri-d1r") {
    TElem lhs = s.delta(s.R, 0);
    TElem rhs = Pi({2, 3, 1}) * R13 * P({1, 3, 2}) * R23 * Pi({1, 2, 3});
    return zero_or_witness(lhs - rhs);
  }
  if (id == "quasi-tri-1dr") {
    TElem lhs = s.delta(s.R, 1);
    TElem rhs = P({3, 1, 2}) * R13 * Pi({2, 1, 3}) * R12 * P({1, 2, 3});
    return zero_or_witness(lhs - rhs);
  }
  if (id == "quasi-ybe") {
    TElem lhs = R12 * Pi({2, 3, 1}) * R13 * P({1, 3, 2}) * R23 * Pi({1, 2, 3});
    TElem rhs = Pi({3, 2, 1}) * R23 * P({3, 1, 2}) * R13 * Pi({2, 1, 3}) * R12;
    return zero_or_witness(lhs - rhs);
  }
  throw ConfigError("unknown axiom id '" + id + "'");
}

std::vector<CheckResult> verify_base_hopf() {
  std::vector<CheckResult> out;
  QuasiHopf b = base_structure();
  auto gens = test_generators();
  auto each = [&](const std::string& id, const std::function<TElem(const TElem&)>& res, bool expect = true) {
    out.push_back(run_check(id, [&]() -> json {
      for (const auto& [name, a] : gens) {
        TElem r = res(a);
        if (!r.is_zero()) {
          json w = witness_of(r);
          w["generator"] = name;
          return w;
        }
      }
      return json();
    }, expect));
  };
  TElem e = TElem::gen(1, 0, "e"), f = TElem::gen(1, 0, "f");
  out.push_back(run_check("delta-homomorphism", [&]() -> json {
    for (const auto& [na, a] : gens)
      for (const auto& [nb, c] : gens) {
        TElem r = coproduct(a * c, 0) - coproduct(a, 0) * coproduct(c, 0);
        if (!r.is_zero()) return witness_of(r);
      }
    return json();
  }));
  each("coassociativity", [](const TElem& a) {
    TElem d = coproduct(a, 0);
    return coproduct(d, 0) - coproduct(d, 1);
  });
  out.push_back(run_check("antipode-antihomomorphism", [&]() -> json {
    for (const auto& [na, a] : gens)
      for (const auto& [nb, c] : gens) {
        TElem sab = antipode(a * c, 0);
        TElem rhs = antipode(c, 0) * antipode(a, 0);
        if (a.parity() == 1 && c.parity() == 1) rhs = -rhs;
        TElem r = sab - rhs;
        if (!r.is_zero()) return witness_of(r);
      }
    return json();
  }));
  each("hopf-antipode", [](const TElem& a) {
    TElem eps = TElem::one(1) * counit(a, 0).scalar_part();
    TElem r1 = merge_legs(antipode(coproduct(a, 0), 0), 0) - eps;
    return r1.is_zero() ? merge_legs(antipode(coproduct(a, 0), 1), 0) - eps : r1;
  });
  each("counit-antipode", [](const TElem& a) { return counit(antipode(a, 0), 0) - counit(a, 0); });
  out.push_back(run_check("counit-odd", [&]() -> json {
    return zero_or_witness(counit(e, 0) + counit(f, 0) + counit(e * f * e, 0));
  }));
  out.push_back(run_check("counit-r", [&]() -> json {
    TElem r = counit(b.R, 0) - TElem::one(1);
    return r.is_zero() ? zero_or_witness(counit(b.R, 1) - TElem::one(1)) : witness_of(r);
  }));
  each("r-intertwines", [&](const TElem& a) {
    TElem d = coproduct(a, 0);
    return permute(d, {2, 1}) * b.R - b.R * d;
  });
  TElem R12 = place3(b.R, {0, 1}), R13 = place3(b.R, {0, 2}), R23 = place3(b.R, {1, 2});
  out.push_back(run_check("delta-r-13-23", [&]() { return zero_or_witness(coproduct(b.R, 0) - R13 * R23); }));
  out.push_back(run_check("delta-r-13-12", [&]() { return zero_or_witness(coproduct(b.R, 1) - R13 * R12); }));
  out.push_back(run_check("graded-ybe", [&]() { return zero_or_witness(R12 * R13 * R23 - R23 * R13 * R12); }));
  // Negative control: factors of the YBE in the wrong order.
  out.push_back(run_check("negative:ybe-wrong-order", [&]() {
    return zero_or_witness(R12 * R13 * R23 - R13 * R12 * R23);
  }, false));
  for (const auto& id : axiom_ids())
    out.push_back(run_check("base:" + id, [&]() { return verify_axiom(id, b); }));
  return out;
}

std::vector<CheckResult> verify_shifted_cocycle() {
  std::vector<CheckResult> out;
  TElem F = face_twistor_dyn(2, 0, 1);
  TElem lhs = face_twistor_dyn(3, 0, 1) * coproduct(F, 0);
  out.push_back(run_check("cocycle", [&]() {
    TElem rhs = face_twistor_dyn(3, 1, 2, {0}) * coproduct(F, 1);
    return zero_or_witness(lhs - rhs);
  }));
  out.push_back(run_check("cocycle-w0", [&]() {
    // w -> 0 on both sides gives 1 (x) 1 (x) 1
    const auto& s = PbwSyms::get();
    auto at0 = [&](const TElem& x) { return x.map_coeffs([&](const RatFunc& c) { return c.eval(s.w, Rat(0)); }); };
    TElem rhs = face_twistor_dyn(3, 1, 2, {0}) * coproduct(F, 1);
    TElem r = at0(lhs) - TElem::one(3);
    return r.is_zero() ? zero_or_witness(at0(rhs) - TElem::one(3)) : witness_of(r);
  }));
  // Free central shift symbol U with a scalar face parameter.
  out.push_back(run_check("negative:cocycle-free-shift", [&]() {
    const auto& s = PbwSyms::get();
    RatFunc w = RatFunc::sym(s.w);
    TElem Fw = face_twistor_universal(w);
    TElem l = place3(Fw, {0, 1}) * coproduct(Fw, 0);
    TElem r = place3(face_twistor_universal(w * RatFunc::sym(s.U)), {1, 2}) * coproduct(Fw, 1);
    return zero_or_witness(l - r);
  }, false));
  return out;
}

std::vector<CheckResult> verify_dynamical_identities() {
  std::vector<CheckResult> out;
  TElem F = face_twistor_dyn(2, 0, 1);
  TElem Finv = inverse(F);
  TElem F12 = face_twistor_dyn(3, 0, 1), F23 = face_twistor_dyn(3, 1, 2);
  TElem F23s = face_twistor_dyn(3, 1, 2, {0});
  TElem Phi = F12 * coproduct(F, 0) * coproduct(Finv, 1) * inverse(F23);
  TElem PhiInv = F23 * inverse(F23s);
  out.push_back(run_check("prop-phi", [&]() { return zero_or_witness(Phi - F23s * inverse(F23)); }));
  TElem R = r_dyn(2, 0, 1);
  out.push_back(run_check("prop-dr", [&]() -> json {
    for (const auto& [name, a] : test_generators()) {
      TElem d = F * coproduct(a, 0) * Finv;
      TElem r = permute(d, {2, 1}) * R - R * d;
      if (!r.is_zero()) {
        json w = witness_of(r);
        w["generator"] = name;
        return w;
      }
    }
    return json();
  }));
  out.push_back(run_check("prop-d1r", [&]() {
    TElem lhs = F12 * coproduct(R, 0) * inverse(F12);
    TElem rhs = permute(PhiInv, {2, 3, 1}) * r_dyn(3, 0, 2) * r_dyn(3, 1, 2, {0});
    return zero_or_witness(lhs - rhs);
  }));
  out.push_back(run_check("prop-1dr", [&]() {
    TElem lhs = F23 * coproduct(R, 1) * inverse(F23);
    TElem rhs = r_dyn(3, 0, 2, {1}) * r_dyn(3, 0, 1) * Phi;
    return zero_or_witness(lhs - rhs);
  }));
  TElem lhs = r_dyn(3, 0, 1, {2}) * r_dyn(3, 0, 2) * r_dyn(3, 1, 2, {0});
  TElem rhs = r_dyn(3, 1, 2) * r_dyn(3, 0, 2, {1}) * r_dyn(3, 0, 1);
  out.push_back(run_check("prop-dybe", [&]() { return zero_or_witness(lhs - rhs); }));
  out.push_back(run_check("negative:static-dybe", [&]() {
    TElem l = r_dyn(3, 0, 1) * r_dyn(3, 0, 2) * r_dyn(3, 1, 2);
    TElem r = r_dyn(3, 1, 2) * r_dyn(3, 0, 2) * r_dyn(3, 0, 1);
    return zero_or_witness(l - r);
  }, false));
  return out;
}

std::vector<CheckResult> verify_twisted_quasi_hopf(const RatFunc& w) {
  std::vector<CheckResult> out;
  const TElem F = face_twistor_universal(w);
  const QuasiHopf s = twist_structure(F);
  for (const auto& id : axiom_ids()) out.push_back(run_check(id, [&]() { return verify_axiom(id, s); }));
  out.push_back(run_check("counit-alpha-beta", [&]() -> json {
    RatFunc v = counit(s.alpha, 0).scalar_part() * counit(s.beta, 0).scalar_part();
    if (v.is_one()) return json();
    return json{{"value", v.str()}};
  }));
  out.push_back(run_check("twistor-counit", [&]() {
    TElem r = counit(F, 0) - TElem::one(1);
    return zero_or_witness(r.is_zero() ? counit(F, 1) - TElem::one(1) : r);
  }));
  // (e (x) f)^2 = 0, so F^-1 = 2 - F
  out.push_back(run_check("twistor-inverse-closed", [&]() {
    return zero_or_witness(s.Finv - (TElem::scalar(2, RatFunc(2L)) - F));
  }));
  out.push_back(run_check("twistor-at-w0", [&]() { return zero_or_witness(face_twistor_universal(RatFunc()) - TElem::one(2)); }));
  const QuasiHopf triv = twist_structure(TElem::one(2));
  for (const auto& id : axiom_ids()) out.push_back(run_check("trivial-twist:" + id, [&]() { return verify_axiom(id, triv); }));
  QuasiHopf broken = s;
  broken.Phi = broken.PhiInv = TElem::one(3);
  out.push_back(run_check("negative:coassoc-with-trivial-phi", [&]() { return verify_axiom("coassoc", broken); }, false));
  return out;
}

}  // namespace eqs
