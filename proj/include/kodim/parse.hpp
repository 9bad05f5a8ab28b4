#pragma once

// Text grammars of the command-line front end.
//
//   manifold3 := block ('#' block)*
//   block     := piece | 'JSJ[' piece (',' piece)* ']'
//   piece     := 'S3' | 'S2xE' | 'E3' | 'Nil' | 'Sol' | 'H2xE' | 'SL2R' | 'H3(vol=' rational ')'
//   rational  := int ('/' int)? | decimal
//
//   sympl4(kw=<rat>, k2=<rat>, minimal=<bool>)
//   lef(g=<int>, h=<int>, n=<int>[, min=<bool>])
//   plurigenera[(l,P) (l,P) ...]
//   geom4(<name>[, vol=<rat>][, product=<bool>])
//   product6(k2=<rat>, kw=<rat>, w2=<rat>, g=<int>, area=<rat>)
//   product6(lattice(cp2#k) | lattice(s2xs2), omega=(<rat>, ...), g=<int>, area=<rat>)
//   liruan(k3=<rat>, k2w=<rat>, kw2=<rat>)
//
// Whitespace is insignificant between tokens. Errors are ParseError with the
// byte offset and the set of expected tokens.

#include "kodim/fourfold.hpp"
#include "kodim/lattice.hpp"
#include "kodim/rational.hpp"
#include "kodim/threefold.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kodim {

/// "p", "p/q" or a decimal literal, optionally signed; converted exactly.
Rational parse_rational(std::string_view text);

Manifold3 parse_manifold3(std::string_view text);

/// Canonical text form; parse_manifold3(render(m)) == m (labels aside).
std::string render(const Manifold3& m);
std::string render(const Piece3& p);

using Record4 = std::variant<SymplecticRecord4, LefschetzRecord, PlurigeneraSample>;

Record4 parse_record4(std::string_view text);

struct Geom4Input {
  Geometry4Name name;
  bool sol_product = false;
  std::optional<Rational> volume;
};

Geom4Input parse_geom4(std::string_view text);

struct Product6Input {
  Rational k2;
  Rational kw;
  Rational w2;
  SurfaceFactor sigma;
  /// Set when the data was given as a lattice and omega.
  std::optional<Lattice2> lattice;
  std::vector<Rational> omega;
};

Product6Input parse_product6(std::string_view text);

Products6 parse_liruan(std::string_view text);

std::string render(const SymplecticRecord4& r);
std::string render(const LefschetzRecord& r);
std::string render(const PlurigeneraSample& p);

}  // namespace kodim
