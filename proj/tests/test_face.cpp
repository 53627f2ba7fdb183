#include "doctest.h"
#include "eqs/affine.hpp"
#include "eqs/errors.hpp"
#include "eqs/face.hpp"
#include "eqs/pbw.hpp"

using namespace eqs;

namespace {

RatFunc Q() { return RatFunc::sym(PbwSyms::get().q); }
RatFunc W() { return RatFunc::sym(PbwSyms::get().w); }
ShapePtr pz(int np, int nz) { return SeriesShape::make({"p", "z"}, {np, nz}); }

}  // namespace

TEST_CASE("face twistor entries") {
  auto sh = pz(3, 3);
  Series p = Series::var(sh, "p"), z = Series::var(sh, "z"), zero(sh);
  FaceParams fp{Q(), W()};
  SMat F = face_twistor_vv(fp, p, z);
  CHECK(F(3, 3) == Series::constant(sh, RatFunc(1L)));
  SMat F0 = face_twistor_vv(fp, p, zero);
  RatFunc a = (Q() - Q().inv()) * W() / (RatFunc(1L) - W());
  Mat expect = Mat::identity(2, RatFunc()) - super_kron(eunit(1, 2), eunit(2, 1)).scaled(a);
  CHECK(F0 == lift(expect, zero));
  CHECK_THROWS_AS(face_twistor_vv({Q(), RatFunc(1L)}, p, z), SingularParameter);
}

TEST_CASE("1phi0 series against its product") {
  for (const auto& r : verify_phi10(Q(), 6)) {
    CAPTURE(r.id);
    CHECK(r.ok());
  }
}

TEST_CASE("face difference equation, low orders") {
  CHECK(face_difference_residual({Q(), W()}, 3, 3).is_zero());
  CHECK(face_difference_residual({RatFunc(Rat(3, 2)), RatFunc(Rat(5, 7))}, 4, 4).is_zero());
}

TEST_CASE("face initial condition") { CHECK(face_initial_residual(3).is_zero()); }

TEST_CASE("elliptic face R depends on w") {
  FaceParams a{RatFunc(Rat(7, 5)), RatFunc(Rat(1, 3))}, b{RatFunc(Rat(7, 5)), RatFunc(Rat(2, 3))};
  CHECK_FALSE((elliptic_face_r(a, Rat(2), 2) - elliptic_face_r(b, Rat(2), 2)).is_zero());
}

TEST_CASE("dynamical YBE holds, static one fails") {
  FaceParams fp{RatFunc(Rat(7, 5)), W()};
  std::vector<Rat> z = {Rat(2), Rat(5, 3), Rat(7)};
  CHECK(face_dybe_residual(fp, z, 2, RatFunc(Rat(49, 25))).is_zero());
  CHECK_FALSE(face_dybe_residual(fp, z, 2, RatFunc(1L)).is_zero());
}
