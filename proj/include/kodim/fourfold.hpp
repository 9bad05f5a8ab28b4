#pragma once

#include "kodim/kodaira.hpp"
#include "kodim/norm.hpp"
#include "kodim/rational.hpp"
#include "kodim/taxonomy.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kodim {

/// Numerical data of a symplectic 4-manifold: K.[w], K.K and minimality.
struct SymplecticRecord4 {
  Rational k_dot_omega;
  Rational k_squared;
  bool minimal = true;
};

/// A (g, h, n) Lefschetz fibration: fiber genus, base genus, singular fibers.
struct LefschetzRecord {
  int g = 0;
  int h = 0;
  int n = 0;
  bool relatively_minimal = true;
};

/// Sampled plurigenera (l, P_l), strictly increasing in l, at least 4 rows.
struct PlurigeneraSample {
  std::vector<std::pair<std::int64_t, std::int64_t>> samples;
};

struct Unclassified {
  friend bool operator==(Unclassified, Unclassified) = default;
};

using KappaH = std::variant<KodairaDim, Unclassified>;

std::string to_string(const KappaH& k);

/// Symplectic Kodaira dimension of a minimal symplectic 4-manifold.
KodairaDim kappa_s_4(const SymplecticRecord4& r);

/// Kodaira dimension of a relatively minimal Lefschetz fibration with h >= 1.
KodairaDim kappa_l(const LefschetzRecord& r);

/// Details of the growth fit used by kappa_h_classify.
struct GrowthFit {
  double slope = 0;     // least-squares slope of log P_l against log l
  int exponent = 0;     // slope rounded to the nearest integer >= 1
  double residual = 0;  // max relative error of c * l^exponent over the fit window
};

/// Returns nullopt when the fit window contains a zero plurigenus.
std::optional<GrowthFit> fit_plurigenera_growth(const PlurigeneraSample& p);

inline constexpr double kDefaultGrowthTolerance = 0.05;

/// Holomorphic Kodaira dimension estimated from finitely many plurigenera.
/// The growth exponent is fitted on the upper half of the samples (largest l).
KappaH kappa_h_classify(const PlurigeneraSample& p, const Rational& fit_tolerance);

/// Gromov norm of a closed manifold modelled on a 4-dimensional geometry.
/// volume is the Riemannian volume; it is required for a quantified answer on
/// H4 and H2xH2 and rejected for the zero-norm geometries.
NormValue gromov_norm_4_geometric(Geometry4Name g, const std::optional<Rational>& volume = std::nullopt);

struct Geometry4Report {
  Geometry4 record;
  /// Sol_mn queried with m = n, i.e. Sol^3 x E.
  bool sol_product = false;
  std::vector<std::string> notes;
};

Geometry4Report geometry4_query(Geometry4Name g, bool sol_product = false);

/// Record of the product symplectic form on Sigma_a x Sigma_b with the given
/// areas: K.[w] = (2a-2) area_b + (2b-2) area_a, K^2 = 2 (2a-2)(2b-2).
SymplecticRecord4 surface_product_record(int genus_a, const Rational& area_a, int genus_b, const Rational& area_b);

}  // namespace kodim
