#include <random>

#include "doctest.h"
#include "eqs/pbw.hpp"
#include "eqs/quasihopf.hpp"

using namespace eqs;

namespace {

const PbwSyms& S() { return PbwSyms::get(); }
RatFunc q() { return RatFunc::sym(S().q); }
RatFunc u(int k, int p = 1) { return RatFunc::sym(S().u[static_cast<std::size_t>(k)], p); }
TElem g(int legs, int leg, const std::string& x, int p = 1) { return TElem::gen(legs, leg, x, p); }

}  // namespace

TEST_CASE("one-leg normal form") {
  TElem e = g(1, 0, "e"), f = g(1, 0, "f");
  RatFunc qd = q() - q().inv();
  TElem rhs = TElem::scalar(1, (u(0) - u(0, -1)) / qd) - e * f;
  CHECK(f * e == rhs);
  CHECK((e * e).is_zero());
  CHECK((f * f).is_zero());
  CHECK(g(1, 0, "t") == TElem::scalar(1, u(0)));
}

TEST_CASE("Cartan exchange past G") {
  TElem G = TElem::G(2, 0, 1);
  TElem e1 = g(2, 0, "e");
  CHECK(G * e1 == e1 * G * u(1, -1));
}

TEST_CASE("coproduct examples") {
  TElem e = g(1, 0, "e");
  CHECK(coproduct(e, 0) == g(2, 0, "e") + g(2, 0, "t") * g(2, 1, "e"));
  CHECK(coproduct(TElem::one(1), 0) == TElem::one(2));
  CHECK(coproduct(TElem::G(2, 0, 1), 0) == TElem::G(3, 0, 2) * TElem::G(3, 1, 2));
}

TEST_CASE("counit and antipode examples") {
  for (int m : {-2, 1, 3}) CHECK(counit(TElem::scalar(1, u(0, m)), 0).scalar_part().is_one());
  TElem e = g(1, 0, "e"), f = g(1, 0, "f");
  CHECK(antipode(e * f, 0) == -(f * e));
  for (const auto& [name, a] : test_generators()) {
    CAPTURE(name);
    CHECK(counit(antipode(a, 0), 0) == counit(a, 0));
  }
}

TEST_CASE("universal R basics") {
  TElem R = universal_r();
  CHECK(counit(R, 0) == TElem::one(1));
  CHECK(counit(R, 1) == TElem::one(1));
}

TEST_CASE("face twistor: counit, w = 0 and closed inverse") {
  RatFunc w = RatFunc::sym(S().w);
  TElem F = face_twistor_universal(w);
  CHECK(counit(F, 0) == TElem::one(1));
  CHECK(counit(F, 1) == TElem::one(1));
  CHECK(face_twistor_universal(RatFunc()) == TElem::one(2));
  RatFunc a = (q() - q().inv()) * w / (RatFunc(1L) - w);
  TElem Finv = TElem::one(2) + g(2, 0, "e") * g(2, 1, "f") * (a * u(0, -1) * u(1));
  CHECK(inverse(F) == Finv);
  CHECK(F * Finv == TElem::one(2));
}

TEST_CASE("trivial twist reproduces the Hopf structure") {
  QuasiHopf s = twist_structure(TElem::one(2));
  CHECK(s.Phi == TElem::one(3));
  CHECK(s.R == universal_r());
  CHECK(s.alpha == TElem::one(1));
}

TEST_CASE("twisted structure: counit of alpha and beta") {
  QuasiHopf s = twist_structure(face_twistor_universal(RatFunc::sym(S().w)));
  RatFunc v = counit(s.alpha, 0).scalar_part() * counit(s.beta, 0).scalar_part();
  CHECK(v.is_one());
}

TEST_CASE("associativity on random two-leg products") {
  std::mt19937 rng(7);
  const std::vector<std::string> names = {"e", "f", "t", "tex"};
  auto random_elem = [&]() {
    std::uniform_int_distribution<int> pick(0, 3), leg(0, 1), coin(0, 2);
    TElem x = TElem::one(2);
    int len = 1 + coin(rng);
    for (int k = 0; k < len; ++k) x = x * g(2, leg(rng), names[static_cast<std::size_t>(pick(rng))]);
    if (coin(rng) == 0) x = x * TElem::G(2, 0, 1);
    return x + TElem::scalar(2, RatFunc(Rat(coin(rng) + 1)));
  };
  for (int trial = 0; trial < 20; ++trial) {
    TElem a = random_elem(), b = random_elem(), c = random_elem();
    CHECK((a * b) * c == a * (b * c));
  }
}
