#include "kodim/errors.hpp"
#include "kodim/threefold.hpp"
#include "random_manifold.hpp"

#include <doctest.h>

using namespace kodim;

namespace {

Piece3 P(Geometry3Name g) { return Piece3(g); }
Piece3 H(Rational v) { return Piece3::hyperbolic(v); }
Manifold3 M(std::vector<std::vector<Piece3>> blocks) {
  Manifold3 m;
  for (auto& b : blocks) m.blocks.push_back({std::move(b)});
  return m;
}

const auto S3 = Geometry3Name::S3;
const auto S2xE = Geometry3Name::S2xE;
const auto E3 = Geometry3Name::E3;
const auto Nil = Geometry3Name::Nil;
const auto Sol = Geometry3Name::Sol;
const auto H2xE = Geometry3Name::H2xE;
const auto SL2R = Geometry3Name::SL2R;

}  // namespace

TEST_CASE("pieces") {
  CHECK_THROWS_AS(Piece3(Geometry3Name::H3), PreconditionError);
  CHECK_THROWS_AS(Piece3::hyperbolic(0), PreconditionError);
  CHECK_THROWS_AS(Piece3::hyperbolic(Rational(-1, 2)), PreconditionError);
  CHECK(H(2).volume() == Rational(2));
  CHECK_FALSE(P(Sol).volume().has_value());
}

TEST_CASE("validate") {
  const auto bad = validate(M({{P(E3), P(Nil)}}));
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].block == 0);
  CHECK(validate(M({{H(2)}, {P(E3)}})).empty());
  CHECK(validate(M({{H(2), P(SL2R)}})).empty());
  CHECK_FALSE(validate(Manifold3{}).empty());
  CHECK_FALSE(validate(M({{}})).empty());
  const auto mixed = validate(M({{P(S3)}, {H(1), P(Sol)}}));
  REQUIRE(mixed.size() == 1);
  CHECK(mixed[0].block == 1);
  CHECK_THROWS_AS(require_valid(M({{P(E3), P(Nil)}})), ValidationError);
}

TEST_CASE("kappa_t examples") {
  CHECK(kappa_t(M({{P(S3)}})) == KodairaDim::neg_infinity());
  CHECK(kappa_t(M({{P(S3)}, {P(S3)}})) == KodairaDim::neg_infinity());
  CHECK(kappa_t(M({{P(Nil)}, {P(S2xE)}})) == KodairaDim(0));
  CHECK(kappa_t(M({{H(Rational(203, 100))}, {P(Sol)}})) == KodairaDim(1));
  CHECK(kappa_t(M({{P(H2xE), P(SL2R)}})) == KodairaDim(1));
  CHECK_THROWS_AS(kappa_t(M({{P(E3), P(Nil)}})), ValidationError);
}

TEST_CASE("gromov_norm_3 examples") {
  CHECK(gromov_norm_3(M({{P(E3)}})).is_zero());
  const Rational q(7, 3);
  CHECK(gromov_norm_3(M({{H(q)}})) == SymbolicNorm::term(q, NormConstant::InvV3));
  const Rational a(1, 2), b(5, 4);
  CHECK(gromov_norm_3(M({{H(a)}, {H(b), P(H2xE)}})) == SymbolicNorm::term(a + b, NormConstant::InvV3));
  CHECK_THROWS_AS(gromov_norm_3(M({{P(Sol), H(1)}})), ValidationError);
}

TEST_CASE("classify_shape") {
  const auto s2 = classify_shape(M({{P(S2xE)}}));
  REQUIRE(s2.summands.size() == 1);
  CHECK(s2.summands[0].shape == PrimeShape::SphereBundleOverCircle);
  CHECK(clause_label(s2.summands[0].shape) == "(2)/(3)");

  const auto sol = classify_shape(M({{P(Sol)}}));
  REQUIRE(sol.summands.size() == 1);
  CHECK(sol.summands[0].shape == PrimeShape::AnosovTorusMappingTorus);
  CHECK(clause_label(sol.summands[0].shape) == "(5)");

  const auto hyp = classify_shape(M({{H(1)}}));
  CHECK_FALSE(hyp.classified());
  CHECK(hyp.summands.empty());
  REQUIRE(hyp.category_one_pieces.size() == 1);
  CHECK(hyp.category_one_pieces[0].geometry == Geometry3Name::H3);

  const auto mix = classify_shape(M({{P(S3)}, {P(E3)}, {P(Nil)}}));
  CHECK(mix.kappa == KodairaDim(0));
  CHECK(mix.summands[0].shape == PrimeShape::Spherical);
  CHECK(mix.summands[1].shape == PrimeShape::SeifertZeroOrbifoldEuler);
  CHECK(mix.summands[2].shape == PrimeShape::SeifertZeroOrbifoldEuler);
}

TEST_CASE("pi1_class_of") {
  CHECK(pi1_class_of(M({{P(S3)}})) == std::vector<Pi1Class>{Pi1Class::Finite});
  CHECK(pi1_class_of(M({{P(Sol)}, {P(Nil)}})) ==
        std::vector<Pi1Class>{Pi1Class::VirtuallyNilpotent, Pi1Class::VirtuallySolvable});
  CHECK_THROWS_WITH_AS(pi1_class_of(M({{H(1), P(H2xE)}})), "pi1 ladder defined only for closed geometric summands",
                       PreconditionError);
}

TEST_CASE("connected-sum monotonicity on random manifolds") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 2000; ++i) {
    const Manifold3 m = testing::random_manifold(rng);
    const Manifold3 n = testing::random_manifold(rng);
    const Manifold3 s = connected_sum(m, n);
    REQUIRE(validate(s).empty());
    CHECK(kappa_t(s) == std::max(kappa_t(m), kappa_t(n)));
    CHECK(gromov_norm_3(s) == gromov_norm_3(m) + gromov_norm_3(n));
  }
}

TEST_CASE("zero norm exactly for graph manifolds") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Manifold3 m = testing::random_manifold(rng);
    bool hyperbolic = false;
    for (const auto& b : m.blocks)
      for (const auto& p : b.pieces) hyperbolic |= p.geometry() == Geometry3Name::H3;
    CHECK(gromov_norm_3(m).is_zero() == !hyperbolic);
  }
}
