#include "kodim/errors.hpp"
#include "kodim/maps.hpp"
#include "kodim/spectral.hpp"
#include "random_matrix.hpp"

#include <Eigen/Dense>
#include <doctest.h>

#include <cmath>
#include <random>

using namespace kodim;

namespace {

const KodairaDim NINF = KodairaDim::neg_infinity();

NormValue v3(Rational c) { return SymbolicNorm::term(c, NormConstant::InvV3); }

bool has(const std::vector<ObstructionViolation>& v, Obstruction o) {
  for (const auto& x : v)
    if (x.kind == o) return true;
  return false;
}

KodairaDim random_kappa(std::mt19937_64& rng, int top) {
  std::uniform_int_distribution<int> d(-1, top);
  const int k = d(rng);
  return k < 0 ? NINF : KodairaDim(k);
}

InvariantProfile random_profile(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> coin(0, 1), small(0, 6);
  InvariantProfile p;
  p.dimension = dim;
  if (coin(rng)) p.kappa_t = random_kappa(rng, 1);
  if (coin(rng)) p.kappa_h = random_kappa(rng, 2);
  if (coin(rng)) p.gromov_norm = coin(rng) ? NormValue{v3(small(rng))} : NormValue{NonzeroUnquantified{}};
  if (coin(rng)) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(dim) + 1);
    for (std::size_t i = 0; i <= b.size() / 2; ++i) b[i] = b[b.size() - 1 - i] = small(rng);
    p.betti = b;
  }
  if (coin(rng)) p.b2_plus = small(rng);
  if (coin(rng)) p.b2_minus = small(rng);
  if (coin(rng)) p.hj_plus = small(rng);
  if (coin(rng)) p.hj_minus = small(rng);
  return p;
}

double eigen_spectral_radius(const IntMatrix& m) {
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m(i, j));
  return a.eigenvalues().cwiseAbs().maxCoeff();
}

const double GOLDEN_LOG = std::log((3 + std::sqrt(5.0)) / 2);

}  // namespace

TEST_CASE("domination examples") {
  MapClaim c;
  c.source.kappa_t = KodairaDim(0);
  c.target.kappa_t = KodairaDim(1);
  const auto v = domination_obstructions(c);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == Obstruction::KappaT);
  CHECK(obstruction_letter(v[0].kind) == 'a');

  MapClaim n;
  n.degree = 2;
  n.source.gromov_norm = SymbolicNorm::zero();
  n.target.gromov_norm = v3(Rational(3, 2));
  const auto w = domination_obstructions(n);
  REQUIRE(w.size() == 1);
  CHECK(w[0].kind == Obstruction::GromovNorm);
  CHECK(obstruction_letter(w[0].kind) == 'b');
}

TEST_CASE("domination: category gates") {
  MapClaim c;
  c.source.dimension = c.target.dimension = 4;
  c.source.kappa_h = KodairaDim(0);
  c.target.kappa_h = KodairaDim(2);
  c.source.hj_plus = 0;
  c.target.hj_plus = 3;
  CHECK(domination_obstructions(c).empty());
  c.category = MapCategory::Holomorphic;
  CHECK(has(domination_obstructions(c), Obstruction::KappaH));
  CHECK_FALSE(has(domination_obstructions(c), Obstruction::HJPlus));
  c.category = MapCategory::JJprimeHolomorphic;
  CHECK(has(domination_obstructions(c), Obstruction::HJPlus));
  // kappa_t is a 3-dimensional obstruction.
  c.source.kappa_t = KodairaDim(0);
  c.target.kappa_t = KodairaDim(1);
  CHECK_FALSE(has(domination_obstructions(c), Obstruction::KappaT));
}

TEST_CASE("domination: Betti and b2 obstructions") {
  MapClaim c;
  c.source.dimension = c.target.dimension = 4;
  c.source.betti = std::vector<std::int64_t>{1, 0, 2, 0, 1};
  c.target.betti = std::vector<std::int64_t>{1, 1, 2, 1, 1};
  c.source.b2_plus = 1;
  c.target.b2_plus = 1;
  c.source.b2_minus = 1;
  c.target.b2_minus = 2;
  const auto v = domination_obstructions(c);
  CHECK(has(v, Obstruction::Betti));
  CHECK(has(v, Obstruction::B2Minus));
  CHECK_FALSE(has(v, Obstruction::B2Plus));
}

TEST_CASE("domination: preconditions") {
  MapClaim c;
  c.degree = 0;
  CHECK_THROWS_AS(domination_obstructions(c), PreconditionError);
  c.degree = 1;
  c.target.dimension = 4;
  CHECK_THROWS_AS(domination_obstructions(c), PreconditionError);
  c.target.dimension = 3;
  c.source.b2_plus = -1;
  CHECK_THROWS_AS(domination_obstructions(c), PreconditionError);
  c.source.b2_plus.reset();
  c.source.betti = std::vector<std::int64_t>{1, 2, 3, 1};
  CHECK_THROWS_AS(domination_obstructions(c), PreconditionError);
}

TEST_CASE("compare_norms") {
  CHECK(compare_norms(v3(1), SymbolicNorm::zero(), 5) == NormComparison::Holds);
  CHECK(compare_norms(NonzeroUnquantified{}, SymbolicNorm::zero(), 1) == NormComparison::Holds);
  CHECK(compare_norms(SymbolicNorm::zero(), NonzeroUnquantified{}, 1) == NormComparison::Violated);
  CHECK(compare_norms(v3(4), v3(2), 2) == NormComparison::Holds);
  CHECK(compare_norms(v3(4), v3(2), -3) == NormComparison::Violated);
  CHECK(compare_norms(NonzeroUnquantified{}, v3(2), 1) == NormComparison::Incomparable);
  CHECK(compare_norms(v3(2), NonzeroUnquantified{}, 1) == NormComparison::Incomparable);
  const NormValue h4 = SymbolicNorm::term(5, NormConstant::InvV4);
  CHECK(compare_norms(v3(1), h4, 1) == NormComparison::Incomparable);
  CHECK_THROWS_AS(compare_norms(v3(1), v3(1), 0), PreconditionError);
}

TEST_CASE("reflexivity on random profiles") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    MapClaim c;
    c.source = c.target = random_profile(rng, 3 + i % 2);
    c.degree = i % 3 == 0 ? -1 : 1;
    c.category = static_cast<MapCategory>(i % 3);
    CHECK(domination_obstructions(c).empty());
  }
}

TEST_CASE("adding fields never removes a violation") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 1000; ++i) {
    const int dim = 3 + i % 2;
    MapClaim full;
    full.source = random_profile(rng, dim);
    full.target = random_profile(rng, dim);
    full.degree = 1 + i % 3;
    full.category = static_cast<MapCategory>(i % 3);
    // Drop a random subset of fields from both sides.
    MapClaim part = full;
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto* p : {&part.source, &part.target}) {
      if (coin(rng)) p->kappa_t.reset();
      if (coin(rng)) p->kappa_h.reset();
      if (coin(rng)) p->gromov_norm.reset();
      if (coin(rng)) p->betti.reset();
      if (coin(rng)) p->b2_plus.reset();
      if (coin(rng)) p->b2_minus.reset();
      if (coin(rng)) p->hj_plus.reset();
      if (coin(rng)) p->hj_minus.reset();
    }
    const auto few = domination_obstructions(part);
    const auto many = domination_obstructions(full);
    for (const auto& v : few) {
      bool found = false;
      for (const auto& w : many) found |= w.kind == v.kind && w.detail == v.detail;
      CHECK(found);
    }
  }
}

TEST_CASE("kappa consistency is transitive") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 2000; ++i) {
    MapClaim ab, bc, ac;
    InvariantProfile a, b, c;
    a.kappa_t = random_kappa(rng, 1);
    b.kappa_t = random_kappa(rng, 1);
    c.kappa_t = random_kappa(rng, 1);
    ab.source = a, ab.target = b;
    bc.source = b, bc.target = c;
    ac.source = a, ac.target = c;
    if (domination_obstructions(ab).empty() && domination_obstructions(bc).empty())
      CHECK(domination_obstructions(ac).empty());
  }
}

TEST_CASE("pi1 ladder consistency") {
  auto m = [](std::initializer_list<Geometry3Name> gs) {
    Manifold3 r;
    for (auto g : gs) r.blocks.push_back({{Piece3(g)}});
    return r;
  };
  CHECK(pi1_ladder_consistent(m({Geometry3Name::Sol}), m({Geometry3Name::Nil})) == true);
  CHECK(pi1_ladder_consistent(m({Geometry3Name::S3}), m({Geometry3Name::E3})) == false);
  CHECK_FALSE(pi1_ladder_consistent(m({Geometry3Name::H2xE}), m({Geometry3Name::S3})).has_value());
}

TEST_CASE("entropy examples") {
  const HomologyEndo id{{IntMatrix::identity(1), IntMatrix::identity(3), IntMatrix::identity(1)}};
  CHECK(shub_entropy(id) == 0.0);
  const HomologyEndo cat{{IntMatrix{{2, 1}, {1, 1}}}};
  CHECK(std::abs(shub_entropy(cat) - GOLDEN_LOG) <= 1e-9);
  const HomologyEndo three{{IntMatrix::identity(1), IntMatrix{{3}}}};
  CHECK(std::abs(shub_entropy(three) - std::log(3.0)) <= 1e-12);
  CHECK_THROWS_AS(shub_entropy(HomologyEndo{}), PreconditionError);
  CHECK_THROWS_AS(shub_entropy(HomologyEndo{{IntMatrix(2, 3)}}), PreconditionError);
  CHECK_THROWS_AS(shub_entropy(cat, 0), PreconditionError);
}

TEST_CASE("entropy of defective and repeated spectra") {
  // Jordan block: eigenvalue 2 with multiplicity 2.
  CHECK(std::abs(shub_entropy(HomologyEndo{{IntMatrix{{2, 1}, {0, 2}}}}) - std::log(2.0)) <= 1e-12);
  CHECK(std::abs(shub_entropy(HomologyEndo{{IntMatrix{{-3, 0}, {0, 1}}}}) - std::log(3.0)) <= 1e-12);
  // Rotation: eigenvalues +-i.
  CHECK(shub_entropy(HomologyEndo{{IntMatrix{{0, -1}, {1, 0}}}}) == 0.0);
  CHECK(shub_entropy(HomologyEndo{{IntMatrix(3, 3)}}) == 0.0);
}

TEST_CASE("spectral radius agrees with an Eigen eigenvalue solve") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
    const IntMatrix m = testing::random_matrix(rng, n, 5);
    const double ours = static_cast<double>(spectral_radius(m, 1e-12L));
    const double oracle = eigen_spectral_radius(m);
    CHECK(ours == doctest::Approx(oracle).epsilon(1e-7));
  }
}

TEST_CASE("characteristic polynomial and determinant") {
  const IntMatrix a{{2, 1}, {1, 1}};
  CHECK(characteristic_polynomial(a) == std::vector<BigInt>{1, -3, 1});
  CHECK(determinant(a) == 1);
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  CHECK(unimodular_inverse(IntMatrix{{1, 1}, {0, 1}}) == IntMatrix{{1, -1}, {0, 1}});
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), PreconditionError);
  CHECK(square_free_part({4, -4, 1}) == std::vector<BigInt>{-2, 1});
  std::mt19937_64 rng(59);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix u = testing::random_unimodular(rng, 3);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(3));
  }
}

TEST_CASE("entropy is conjugation invariant") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
    const IntMatrix f = testing::random_matrix(rng, n, 3);
    const IntMatrix u = testing::random_unimodular(rng, n);
    const IntMatrix g = u * f * unimodular_inverse(u);
    CHECK(std::abs(shub_entropy(HomologyEndo{{f}}) - shub_entropy(HomologyEndo{{g}})) <= 1e-9);
  }
}

TEST_CASE("entropy power law") {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix f = testing::random_matrix(rng, 2 + static_cast<std::size_t>(t % 3), 3);
    const double s = shub_entropy(HomologyEndo{{f}});
    for (unsigned k : {2u, 3u}) CHECK(std::abs(shub_entropy(HomologyEndo{{power(f, k)}}) - k * s) <= k * 1e-9);
  }
}

TEST_CASE("degree-one equivalence examples") {
  const HomologyEndo cat{{IntMatrix{{2, 1}, {1, 1}}}};
  const auto id = std::vector<IntMatrix>{IntMatrix::identity(2)};
  CHECK(degree_one_equivalence_check(cat, id, id).pass);
  const IntMatrix g{{1, 1}, {0, 1}};
  const auto v = degree_one_equivalence_check(cat, {g}, {unimodular_inverse(g)});
  CHECK(v.pass);
  CHECK(std::abs(v.entropy_f2 - GOLDEN_LOG) <= 1e-9);
  const IntMatrix swap{{0, 1}, {1, 0}};
  const auto p = degree_one_equivalence_check(HomologyEndo{{IntMatrix{{2, 0}, {0, 1}}}}, {swap}, {swap});
  CHECK(p.pass);
  CHECK(std::abs(p.entropy_f1 - std::log(2.0)) <= 1e-12);
  CHECK_THROWS_WITH_AS(degree_one_equivalence_check(cat, {IntMatrix{{1, 1}, {1, 1}}}, id),
                       "degree-one maps induce homology isomorphisms", PreconditionError);
  CHECK_THROWS_AS(degree_one_equivalence_check(cat, {}, {}), PreconditionError);
  CHECK_THROWS_AS(degree_one_equivalence_check(cat, {IntMatrix::identity(3)}, {IntMatrix::identity(3)}),
                  PreconditionError);
}

TEST_CASE("product norm bounds") {
  const auto zero = product_norm_bounds(SymbolicNorm::zero(), SymbolicNorm::term(2, NormConstant::InvV3), 3, 3);
  CHECK(zero.lower.is_zero());
  CHECK(zero.upper.is_zero());
  const Rational a(3, 2), b(7, 5);
  const auto hh = product_norm_bounds(SymbolicNorm::term(a, NormConstant::InvV3), SymbolicNorm::term(b, NormConstant::InvV3), 3, 3);
  const SymbolicNorm::Monomial sq{NormConstant::InvV3, NormConstant::InvV3};
  CHECK(hh.lower.coefficient(sq) == a * b);
  CHECK(hh.upper.coefficient(sq) == 20 * a * b);
  CHECK(hh.lower.term_count() == 1);
  const auto circle = product_norm_bounds(SymbolicNorm::term(a, NormConstant::InvV3), SymbolicNorm::zero(), 3, 1);
  CHECK(circle.lower.is_zero());
  CHECK(circle.upper.is_zero());
  const auto two = SymbolicNorm::term(1, NormConstant::InvV3) + SymbolicNorm::term(1, NormConstant::InvV4);
  CHECK_THROWS_WITH_AS(product_norm_bounds(two, two, 4, 4), "symbolic product not supported", PreconditionError);
  CHECK_THROWS_AS(product_norm_bounds(two, two, 0, 4), PreconditionError);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(3, 5) == 0);
}
