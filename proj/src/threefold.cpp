#include "kodim/threefold.hpp"

#include "kodim/errors.hpp"

#include <algorithm>

namespace kodim {

Piece3::Piece3(Geometry3Name geometry) : geometry_(geometry) {
  if (geometry == Geometry3Name::H3) throw PreconditionError("a hyperbolic piece needs its volume");
}

Piece3::Piece3(Geometry3Name geometry, Rational volume) : geometry_(geometry), volume_(std::move(volume)) {}

Piece3 Piece3::hyperbolic(const Rational& volume) {
  if (volume <= 0) throw PreconditionError("hyperbolic volume must be positive, got " + to_string(volume));
  return Piece3(Geometry3Name::H3, volume);
}

Manifold3 connected_sum(const Manifold3& m, const Manifold3& n) {
  Manifold3 r;
  r.blocks = m.blocks;
  r.blocks.insert(r.blocks.end(), n.blocks.begin(), n.blocks.end());
  return r;
}

std::vector<Violation> validate(const Manifold3& m) {
  std::vector<Violation> out;
  if (m.blocks.empty()) out.push_back({0, "manifold has no prime summands"});
  for (std::size_t b = 0; b < m.blocks.size(); ++b) {
    const auto& pieces = m.blocks[b].pieces;
    if (pieces.empty()) {
      out.push_back({b, "block has no geometric pieces"});
      continue;
    }
    if (pieces.size() < 2) continue;
    // Cutting along tori leaves non-closed finite-volume pieces, which exist
    // only for the category-1 geometries.
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      const Geometry3& g = pieces[p].record();
      if (!g.admits_noncompact_finite_volume) {
        out.push_back({b, "piece " + std::to_string(p) + " (" + std::string(to_string(g.name)) +
                              ") has no non-closed finite-volume model and cannot be glued along tori"});
      }
    }
  }
  return out;
}

void require_valid(const Manifold3& m) {
  auto v = validate(m);
  if (!v.empty()) throw ValidationError("invalid manifold: block " + std::to_string(v.front().block) + ": " + v.front().message);
}

KodairaDim kappa_t(const Manifold3& m) {
  require_valid(m);
  KodairaDim k = KodairaDim::neg_infinity();
  for (const auto& block : m.blocks)
    for (const auto& piece : block.pieces) k = std::max(k, piece.record().category);
  return k;
}

SymbolicNorm gromov_norm_3(const Manifold3& m) {
  require_valid(m);
  Rational total = 0;
  for (const auto& block : m.blocks)
    for (const auto& piece : block.pieces)
      if (piece.volume()) total += *piece.volume();
  return SymbolicNorm::term(total, NormConstant::InvV3);
}

std::string_view clause_label(PrimeShape s) {
  switch (s) {
    case PrimeShape::Spherical: return "(1)";
    case PrimeShape::SphereBundleOverCircle: return "(2)/(3)";
    case PrimeShape::SeifertZeroOrbifoldEuler: return "(4)";
    case PrimeShape::AnosovTorusMappingTorus: return "(5)";
  }
  return "?";
}

std::string_view to_string(PrimeShape s) {
  switch (s) {
    case PrimeShape::Spherical: return "spherical";
    case PrimeShape::SphereBundleOverCircle: return "S2 bundle over S1 (trivial or twisted)";
    case PrimeShape::SeifertZeroOrbifoldEuler: return "Seifert fibration with zero orbifold Euler characteristic";
    case PrimeShape::AnosovTorusMappingTorus: return "mapping torus of an Anosov map of T2, or a quotient of order <= 8";
  }
  return "?";
}

namespace {

PrimeShape shape_of(Geometry3Name g) {
  switch (g) {
    case Geometry3Name::S3: return PrimeShape::Spherical;
    case Geometry3Name::S2xE: return PrimeShape::SphereBundleOverCircle;
    case Geometry3Name::E3:
    case Geometry3Name::Nil: return PrimeShape::SeifertZeroOrbifoldEuler;
    case Geometry3Name::Sol: return PrimeShape::AnosovTorusMappingTorus;
    default: break;
  }
  throw std::logic_error("category-1 geometry has no finite shape");
}

}  // namespace

ShapeReport classify_shape(const Manifold3& m) {
  ShapeReport r{kappa_t(m), {}, {}};
  if (r.classified()) {
    // kappa <= 0 forces single-piece blocks (validated above).
    for (std::size_t b = 0; b < m.blocks.size(); ++b) {
      Geometry3Name g = m.blocks[b].pieces.front().geometry();
      r.summands.push_back({b, g, shape_of(g)});
    }
    return r;
  }
  for (std::size_t b = 0; b < m.blocks.size(); ++b) {
    const auto& pieces = m.blocks[b].pieces;
    for (std::size_t p = 0; p < pieces.size(); ++p)
      if (pieces[p].record().category == KodairaDim(1)) r.category_one_pieces.push_back({b, p, pieces[p].geometry()});
  }
  return r;
}

std::vector<Pi1Class> pi1_class_of(const Manifold3& m) {
  require_valid(m);
  std::vector<Pi1Class> out;
  for (const auto& block : m.blocks) {
    if (block.pieces.size() != 1)
      throw PreconditionError("pi1 ladder defined only for closed geometric summands");
    out.push_back(block.pieces.front().record().pi1_class);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kodim
