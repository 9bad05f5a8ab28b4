#include "kodim/errors.hpp"
#include "kodim/parse.hpp"
#include "random_manifold.hpp"

#include <doctest.h>

#include <random>

using namespace kodim;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    (void)parse_manifold3(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for: " << text);
  throw;
}

bool expects(const ParseError& e, const std::string& token) {
  for (const auto& t : e.expected())
    if (t == token) return true;
  return false;
}

}  // namespace

TEST_CASE("manifold grammar examples") {
  const auto rp = parse_manifold3("S3 # S3");
  REQUIRE(rp.blocks.size() == 2);
  CHECK(rp.blocks[0].pieces == std::vector<Piece3>{Piece3(Geometry3Name::S3)});
  CHECK(rp.blocks[1].pieces == std::vector<Piece3>{Piece3(Geometry3Name::S3)});

  const auto jsj = parse_manifold3("JSJ[H3(vol=203/100), SL2R]");
  REQUIRE(jsj.blocks.size() == 1);
  REQUIRE(jsj.blocks[0].pieces.size() == 2);
  CHECK(jsj.blocks[0].pieces[0] == Piece3::hyperbolic(Rational(203, 100)));
  CHECK(jsj.blocks[0].pieces[1] == Piece3(Geometry3Name::SL2R));

  const auto en = parse_manifold3("JSJ[E3, Nil]");
  CHECK(validate(en).size() == 2);
}

TEST_CASE("whitespace and decimals") {
  const auto a = parse_manifold3("  H3 ( vol = 2.03 )#Sol ");
  const auto b = parse_manifold3("H3(vol=203/100) # Sol");
  CHECK(a == b);
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("2.09") == Rational(209, 100));
  CHECK(parse_rational("0329010/0100") == Rational(32901, 10));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(parse_manifold3("S2xR # H2xR") == parse_manifold3("S2xE # H2xE"));
}

TEST_CASE("manifold grammar errors") {
  const auto unknown = parse_failure("S3 # Foo");
  CHECK(unknown.offset() == 5);
  CHECK(expects(unknown, "Nil"));

  const auto empty = parse_failure("   ");
  CHECK(empty.detail() == "empty input");

  const auto vol = parse_failure("Sol(vol=1)");
  CHECK(vol.offset() == 3);
  CHECK(vol.detail() == "volume on non-H3 piece");

  const auto bad_rat = parse_failure("H3(vol=1/0)");
  CHECK(bad_rat.detail().find("malformed rational") != std::string::npos);
  CHECK(parse_failure("H3(vol=)").detail().find("malformed rational") != std::string::npos);
  CHECK(parse_failure("H3(vol=0)").detail() == "hyperbolic volume must be positive");
  CHECK(parse_failure("H3(vol=-1)").offset() == 7);
  CHECK(parse_failure("H3").offset() == 2);
  CHECK(expects(parse_failure("S3 S3"), "#"));
  CHECK(parse_failure("JSJ[S3").offset() == 6);
  CHECK(parse_failure("JSJ[]").offset() == 4);
  CHECK(parse_failure("S3 #").offset() == 4);
  CHECK(parse_failure("JSJ").offset() == 0);
  CHECK(parse_failure("S3 # \x01").offset() == 5);
}

TEST_CASE("render is canonical") {
  CHECK(render(parse_manifold3("JSJ[ H3(vol=2.50) ,SL2R]#S3")) == "JSJ[H3(vol=5/2), SL2R] # S3");
  CHECK(render(parse_manifold3("JSJ[Sol]")) == "Sol");
}

TEST_CASE("round trip on random manifolds") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    const Manifold3 m = testing::random_manifold(rng);
    const std::string text = render(m);
    CHECK(parse_manifold3(text) == m);
    CHECK(render(parse_manifold3(text)) == text);
  }
}

TEST_CASE("4-dimensional records") {
  const auto s = std::get<SymplecticRecord4>(parse_record4("sympl4(kw=-3, k2=9, minimal=true)"));
  CHECK(s.k_dot_omega == -3);
  CHECK(s.k_squared == 9);
  CHECK(s.minimal);
  const auto s2 = std::get<SymplecticRecord4>(parse_record4("sympl4(minimal=false, k2=1/2, kw=0.5)"));
  CHECK(s2.k_squared == Rational(1, 2));
  CHECK_FALSE(s2.minimal);

  const auto l = std::get<LefschetzRecord>(parse_record4("lef(g=2,h=1,n=0)"));
  CHECK(l.g == 2);
  CHECK(l.relatively_minimal);
  CHECK_FALSE(std::get<LefschetzRecord>(parse_record4("lef(g=2, h=1, n=0, min=false)")).relatively_minimal);

  const auto p = std::get<PlurigeneraSample>(parse_record4("plurigenera[(1,0) (2,1), (3,1) (4,2)]"));
  REQUIRE(p.samples.size() == 4);
  CHECK(p.samples[3] == std::pair<std::int64_t, std::int64_t>{4, 2});

  CHECK_THROWS_AS(parse_record4("sympl4(kw=1)"), ParseError);
  CHECK_THROWS_AS(parse_record4("sympl4(kw=1, k2=1, minimal=maybe)"), ParseError);
  CHECK_THROWS_AS(parse_record4("sympl4(kw=1, kw=1, k2=1, minimal=true)"), ParseError);
  CHECK_THROWS_AS(parse_record4("lef(g=1.5, h=1, n=0)"), ParseError);
  CHECK_THROWS_AS(parse_record4("lef(g=99999999999999999999, h=1, n=0)"), ParseError);
  CHECK_THROWS_AS(parse_record4("plurigenera[(1,0)"), ParseError);
  CHECK_THROWS_AS(parse_record4("surface(g=2)"), ParseError);
  CHECK_THROWS_AS(parse_record4(""), ParseError);
}

TEST_CASE("record rendering round trips") {
  for (const char* text : {"sympl4(kw=-3/2, k2=9, minimal=true)", "lef(g=2, h=1, n=3, min=false)",
                           "plurigenera[(1,0) (2,1) (3,1) (4,2)]"}) {
    const Record4 r = parse_record4(text);
    std::visit([&](const auto& v) { CHECK(render(v) == text); }, r);
  }
}

TEST_CASE("geom4 records") {
  const auto a = parse_geom4("geom4(Nil4)");
  CHECK(a.name == Geometry4Name::Nil4);
  CHECK_FALSE(a.volume.has_value());
  const auto b = parse_geom4("geom4(H2xH2, vol=3/2)");
  CHECK(b.volume == Rational(3, 2));
  const auto c = parse_geom4("geom4(Sol_mn, product=true)");
  CHECK(c.sol_product);
  const auto d = parse_geom4("geom4(Sol3xE)");
  CHECK(d.name == Geometry4Name::Sol_mn);
  CHECK(d.sol_product);
  CHECK_THROWS_AS(parse_geom4("geom4(H5)"), ParseError);
  CHECK_THROWS_AS(parse_geom4("geom4(H4, vol=0)"), ParseError);
  CHECK_THROWS_AS(parse_geom4("geom4(H4 vol=1)"), ParseError);
}

TEST_CASE("product6 and liruan records") {
  const auto p = parse_product6("product6(k2=9, kw=-3, w2=1, g=2, area=1)");
  CHECK(p.k2 == 9);
  CHECK(p.sigma.genus == 2);
  CHECK_FALSE(p.lattice.has_value());

  const auto q = parse_product6("product6(lattice(s2xs2), omega=(1,1), g=3, area=2)");
  REQUIRE(q.lattice.has_value());
  CHECK(q.k2 == 8);
  CHECK(q.kw == -4);
  CHECK(q.w2 == 2);
  CHECK(q.sigma.area == 2);

  const auto r = parse_product6("product6(lattice(cp2#2), omega=(3, 1, 1), g=2, area=1)");
  CHECK(r.k2 == 7);
  CHECK(r.kw == -7);
  CHECK(r.w2 == 7);

  CHECK_THROWS_AS(parse_product6("product6(lattice(k3), omega=(1), g=2, area=1)"), ParseError);
  CHECK_THROWS_AS(parse_product6("product6(k2=9, kw=-3, w2=1, g=2)"), ParseError);
  CHECK_THROWS_AS(parse_product6("product6(k2=9, kw=-3, w2=1, g=2, area=0)"), ParseError);
  CHECK_THROWS_AS(parse_product6("product6(lattice(cp2#1), omega=(1), g=2, area=1)"), PreconditionError);

  CHECK(parse_liruan("liruan(k3=1, k2w=0, kw2=0)") == Products6{1, 0, 0});
  CHECK_THROWS_AS(parse_liruan("liruan(k3=1)"), ParseError);
}

TEST_CASE("parser never fails with anything but ParseError on mutated input") {
  std::mt19937_64 rng(103);
  const std::string alphabet = "S3EH2xNilSoLR()[]#,=/.-+ 0123456789JSvolq\t\x7f\xff";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1), len(0, 40);
  for (int i = 0; i < 20000; ++i) {
    std::string s;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) s += alphabet[pick(rng)];
    try {
      const Manifold3 m = parse_manifold3(s);
      CHECK(parse_manifold3(render(m)) == m);
    } catch (const ParseError& e) {
      CHECK(e.offset() <= s.size());
    }
  }
}
