#pragma once

#include "kodim/kodaira.hpp"
#include "kodim/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace kodim {

/// Coefficients of a second-cohomology class over a lattice basis.
using Class2 = std::vector<Rational>;

/// Intersection lattice on H^2 of a 4-manifold.
///
/// Two families carry canonical classes: CP2 # k(-CP2) with basis
/// H, E1..Ek and form diag(1, -1, ..., -1), and S2 x S2 with basis S1, S2 and
/// form [[0,1],[1,0]]. A custom Gram matrix supports pairing only.
class Lattice2 {
 public:
  enum class Family { BlownUpPlane, SphereProduct, Custom };

  static Lattice2 blown_up_plane(int k);
  static Lattice2 sphere_product();
  /// Symmetric square Gram matrix; throws PreconditionError otherwise.
  static Lattice2 custom(std::vector<std::vector<Rational>> gram);

  Family family() const { return family_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  /// Number of blow-ups k for the BlownUpPlane family, else 0.
  int blowups() const { return family_ == Family::BlownUpPlane ? rank() - 1 : 0; }
  const Rational& form(int i, int j) const { return gram_[i][j]; }
  std::vector<std::string> basis_names() const;
  /// "cp2#k", "s2xs2" or "custom".
  std::string name() const;

 private:
  Lattice2(Family family, std::vector<std::vector<Rational>> gram);

  Family family_;
  std::vector<std::vector<Rational>> gram_;
};

Rational pair(const Lattice2& l, const Class2& a, const Class2& b);

/// K = -3H + sum E_i on CP2 # k(-CP2), K = -2S1 - 2S2 on S2 x S2.
Class2 canonical_class(const Lattice2& l);

/// The class a H - sum b_i E_i (blown-up plane) or a S1 + b S2 (sphere
/// product) from the positive coefficient list (a, b_1, ..., b_k) / (a, b).
Class2 omega_from_coefficients(const Lattice2& l, std::span<const Rational> coefficients);

enum class LightConeVerdict { TorusNullHomologous, NotLagrangianData, SpherePossible };

std::string_view to_string(LightConeVerdict v);

/// Classify a candidate Poincare-dual class x of an orientable Lagrangian in a
/// b+ = 1 lattice with symplectic class omega.
LightConeVerdict light_cone_check(const Lattice2& l, const Class2& omega, const Class2& x);

struct ThomSullivanViolation {
  enum class Kind { ThomInequality, SullivanParity };
  Kind kind;
  std::string detail;
};

/// Thom: sum of real Z2-Betti numbers <= complex sum. Sullivan: Euler
/// characteristics agree mod 2. Empty result means both hold.
std::vector<ThomSullivanViolation> thom_sullivan_check(std::span<const std::int64_t> real_betti_z2,
                                                       std::span<const std::int64_t> complex_betti_z2,
                                                       std::int64_t chi_real, std::int64_t chi_complex);

/// Genus-g surface with symplectic area; K_Sigma evaluates to 2g - 2.
struct SurfaceFactor {
  int genus = 0;
  Rational area{1};

  Rational k_sigma() const { return Rational(2 * genus - 2); }
};

/// K^3, K^2.[w], K.[w]^2 on M x Sigma_g with the product form.
struct Products6 {
  Rational k3;
  Rational k2w;
  Rational kw2;

  friend bool operator==(const Products6&, const Products6&) = default;
};

Products6 product6_intersections(const Rational& k2_m, const Rational& kw_m, const Rational& w2_m,
                                 const SurfaceFactor& sigma);

struct IllFormed {
  friend bool operator==(IllFormed, IllFormed) = default;
};

using Kappa6 = std::variant<KodairaDim, IllFormed>;

std::string to_string(const Kappa6& k);

/// Li-Ruan dimension of a minimal symplectic 6-manifold from the three
/// products ([w]^3 is taken positive).
Kappa6 li_ruan_kappa6(const Products6& p);

/// Kodaira dimension of a closed surface of genus g.
KodairaDim surface_kodaira(int genus);

struct AdditivityVerdict {
  bool pass = false;
  Products6 products;
  Kappa6 product_kappa = KodairaDim::neg_infinity();  // left side
  KodairaDim expected = KodairaDim::neg_infinity();  // kappa_M + kappa(Sigma_g)
};

/// Checks kappa(M x Sigma_g) = kappa(M) + kappa(Sigma_g). (k2_m, kw_m) must
/// match kappa_m under the 4-dimensional clauses, and kappa_m = -inf data with
/// K^2 > 0 must satisfy the b+ = 1 light-cone bound (K.[w])^2 >= K^2 [w]^2.
AdditivityVerdict additivity_check(const Rational& k2_m, const Rational& kw_m, const Rational& w2_m,
                                   KodairaDim kappa_m, const SurfaceFactor& sigma);

struct NegativityVerdict {
  bool pass = false;
  Rational k2;
  Rational kw;
  Rational w2;
  /// Whether K^2 [w]^2 >= 4 (K.[w])^2 holds (it must not).
  bool inequality_holds = false;
  Products6 products;
};

/// For CP2 # k(-CP2) (k < 9) or S2 x S2 with omega of positive shape, checks
/// that one of K^2.[w], K.[w]^2 on M x Sigma_g (g >= 2) is negative.
NegativityVerdict rational_ruled_negativity_check(const Lattice2& l, std::span<const Rational> omega_coefficients,
                                                  const SurfaceFactor& sigma);

}  // namespace kodim
