#pragma once

#include "kodim/kodaira.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace kodim {

// ---------------------------------------------------------------------------
// Dimension three
// ---------------------------------------------------------------------------

/// The eight maximal 3-dimensional model geometries, in their customary order.
enum class Geometry3Name { S3, S2xE, E3, Nil, Sol, H2xE, SL2R, H3 };

/// Fundamental-group classes of closed geometric 3-manifolds, ordered by the
/// containment ladder (each class is "the next one but not the previous").
enum class Pi1Class {
  Finite,
  VirtuallyCyclic,
  VirtuallyAbelian,
  VirtuallyNilpotent,
  VirtuallySolvable,
  InfIndexNormalCyclicNotSolvable,
  Hyperbolic,
};

struct Geometry3 {
  Geometry3Name name;
  KodairaDim category;
  Pi1Class pi1_class;
  /// Non-closed finite-volume quotients exist (category 1 only).
  bool admits_noncompact_finite_volume;
};

// ---------------------------------------------------------------------------
// Dimension four
// ---------------------------------------------------------------------------

/// The nineteen 4-dimensional geometries. Sol_mn covers Sol^4_{m,n} including
/// the m = n product case Sol^3 x E; Sol1_4 covers both complex structures
/// Sol^4_1 and Sol'^4_1.
enum class Geometry4Name {
  CP2, S4, S3xE, S2xS2, S2xE2, S2xH2, Sol0_4, Sol1_4,
  E4, Nil4, Nil3xE, Sol_mn,
  H2xE2, SL2RxE, H3xE, F4,
  H2C, H2xH2, H4,
};

enum class TriState { Yes, No, ConjecturallyNo };

struct Geometry4 {
  Geometry4Name name;
  KodairaDim category;
  bool admits_compact_model;
  bool admits_compatible_complex;
  bool admits_compatible_kahler;
  TriState admits_symplectic_model;
  bool gromov_nonzero;
  /// Free-form remark; empty for most rows.
  std::string_view note;
};

const Geometry3& geometry3_record(Geometry3Name name);
const Geometry4& geometry4_record(Geometry4Name name);

/// All records of one dimension in listing order.
std::span<const Geometry3> geometries3();
std::span<const Geometry4> geometries4();

using GeometryRecord = std::variant<Geometry3, Geometry4>;

/// dimension must be 3 or 4; anything else is a PreconditionError.
std::vector<GeometryRecord> list_geometries(int dimension);

std::string_view to_string(Geometry3Name g);
std::string_view to_string(Geometry4Name g);
std::string_view to_string(Pi1Class c);
std::string_view to_string(TriState t);

/// Canonical ASCII spellings plus a few common alternates (S2xR, H2xR, ...).
std::optional<Geometry3Name> geometry3_from_string(std::string_view token);
std::optional<Geometry4Name> geometry4_from_string(std::string_view token);

/// Canonical spellings, for diagnostics.
std::vector<std::string_view> geometry3_tokens();
std::vector<std::string_view> geometry4_tokens();

}  // namespace kodim
