#pragma once

#include "kodim/kodaira.hpp"
#include "kodim/norm.hpp"
#include "kodim/rational.hpp"
#include "kodim/taxonomy.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace kodim {

/// One finite-volume geometric piece. Hyperbolic pieces carry their volume;
/// no other piece may.
class Piece3 {
 public:
  /// Non-hyperbolic piece; throws PreconditionError for H3.
  explicit Piece3(Geometry3Name geometry);
  /// Hyperbolic piece of the given positive volume.
  static Piece3 hyperbolic(const Rational& volume);

  Geometry3Name geometry() const { return geometry_; }
  const std::optional<Rational>& volume() const { return volume_; }
  const Geometry3& record() const { return geometry3_record(geometry_); }

  friend bool operator==(const Piece3&, const Piece3&) = default;

 private:
  Piece3(Geometry3Name geometry, Rational volume);

  Geometry3Name geometry_;
  std::optional<Rational> volume_;
};

/// The geometric pieces of one prime summand, glued along tori.
struct IrreducibleBlock3 {
  std::vector<Piece3> pieces;

  friend bool operator==(const IrreducibleBlock3&, const IrreducibleBlock3&) = default;
};

/// A closed oriented 3-manifold given by its T-decomposition: the prime
/// summands of the connected sum, each cut into geometric pieces.
struct Manifold3 {
  std::vector<IrreducibleBlock3> blocks;
  std::optional<std::string> label;

  friend bool operator==(const Manifold3&, const Manifold3&) = default;
};

/// m # n: the blocks of both summands.
Manifold3 connected_sum(const Manifold3& m, const Manifold3& n);

struct Violation {
  std::size_t block;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every structural problem, tagged with its block index. Empty means valid.
std::vector<Violation> validate(const Manifold3& m);

/// Throws ValidationError describing the first violation, if any.
void require_valid(const Manifold3& m);

/// Largest category among all pieces.
KodairaDim kappa_t(const Manifold3& m);

/// (sum of hyperbolic volumes) * 1/v3. Zero exactly for graph manifolds.
SymbolicNorm gromov_norm_3(const Manifold3& m);

/// Which clause of the classification of kappa_t <= 0 manifolds a prime
/// summand instantiates.
enum class PrimeShape {
  Spherical,                  // clause (1)
  SphereBundleOverCircle,     // clauses (2)/(3): S2 x S1 or the twisted bundle
  SeifertZeroOrbifoldEuler,   // clause (4): E3 and Nil
  AnosovTorusMappingTorus,    // clause (5): Sol
};

std::string_view clause_label(PrimeShape s);
std::string_view to_string(PrimeShape s);

struct SummandShape {
  std::size_t block;
  Geometry3Name geometry;
  PrimeShape shape;
};

struct PieceRef {
  std::size_t block;
  std::size_t piece;
  Geometry3Name geometry;
};

struct ShapeReport {
  KodairaDim kappa;
  /// Filled when kappa <= 0, one entry per prime summand.
  std::vector<SummandShape> summands;
  /// Filled when kappa = 1: the category-1 pieces. No finite list exists.
  std::vector<PieceRef> category_one_pieces;

  bool classified() const { return kappa < KodairaDim(1); }
};

ShapeReport classify_shape(const Manifold3& m);

/// Fundamental-group classes of the free-product factors, sorted along the
/// ladder. Every block must be a single closed geometric piece.
std::vector<Pi1Class> pi1_class_of(const Manifold3& m);

}  // namespace kodim
