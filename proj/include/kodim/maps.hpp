#pragma once

#include "kodim/kodaira.hpp"
#include "kodim/matrix.hpp"
#include "kodim/norm.hpp"
#include "kodim/threefold.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kodim {

/// Invariants of one manifold as far as they are known. Every field except
/// the dimension is optional; obstructions only use what is present.
struct InvariantProfile {
  int dimension = 3;
  std::optional<KodairaDim> kappa_t;
  std::optional<KodairaDim> kappa_h;
  std::optional<NormValue> gromov_norm;
  std::optional<std::vector<std::int64_t>> betti;
  std::optional<std::int64_t> b2_plus;
  std::optional<std::int64_t> b2_minus;
  std::optional<std::int64_t> hj_plus;
  std::optional<std::int64_t> hj_minus;
};

/// Throws PreconditionError for negative counts, a dimension other than 3 or
/// 4, or a full-length Betti list that is not Poincare symmetric.
void validate_profile(const InvariantProfile& p);

enum class MapCategory { Continuous, Holomorphic, JJprimeHolomorphic };

std::string_view to_string(MapCategory c);

/// A claimed map source -> target of the given non-zero degree.
struct MapClaim {
  InvariantProfile source;
  InvariantProfile target;
  std::int64_t degree = 1;
  MapCategory category = MapCategory::Continuous;
};

/// Necessary conditions for a non-zero degree map:
///   (a) kappa_t(source) >= kappa_t(target)            (dimension 3)
///   (b) ||source|| >= |deg| * ||target||               (when comparable)
///   (c) kappa_h(source) >= kappa_h(target)             (holomorphic maps)
///   (d) b_l(source) >= b_l(target)
///   (e) b2+-(source) >= b2+-(target)
///   (f) hJ+-(source) >= hJ+-(target)                   ((J,J')-holomorphic maps)
enum class Obstruction { KappaT, GromovNorm, KappaH, Betti, B2Plus, B2Minus, HJPlus, HJMinus };

/// Letter of the list above, e.g. 'a' for KappaT.
char obstruction_letter(Obstruction o);
std::string_view to_string(Obstruction o);

struct ObstructionViolation {
  Obstruction kind;
  std::string detail;
};

std::vector<ObstructionViolation> domination_obstructions(const MapClaim& claim);

/// Outcome of comparing ||source|| with |deg| * ||target||.
enum class NormComparison { Holds, Violated, Incomparable };

NormComparison compare_norms(const NormValue& source, const NormValue& target, std::int64_t degree);

/// Fundamental-group ladder check for kappa_t <= 0 geometric connected sums:
/// the highest rung of the target may not exceed that of the source. Returns
/// nullopt when either side has kappa_t = 1 (the ladder does not apply).
std::optional<bool> pi1_ladder_consistent(const Manifold3& source, const Manifold3& target);

/// Induced maps on H_0, H_1, ... of a self-map.
struct HomologyEndo {
  std::vector<IntMatrix> matrices;
};

inline constexpr double kDefaultEntropyTolerance = 1e-9;

/// Largest spectral radius over all homology degrees.
double max_spectral_radius(const HomologyEndo& e, double tolerance);

/// Shub entropy log(lambda), or 0 when lambda <= 1.
double shub_entropy(const HomologyEndo& e, double tolerance = kDefaultEntropyTolerance);

struct EquivalenceVerdict {
  bool pass = false;
  double entropy_f1 = 0;
  double entropy_f2 = 0;
  HomologyEndo f2;
};

/// f2 = g* o f1 o h* degree by degree; passes when |S(f2) - S(f1)| <= tolerance.
/// g* and h* must be invertible over Q in every degree.
EquivalenceVerdict degree_one_equivalence_check(const HomologyEndo& f1, const std::vector<IntMatrix>& g_star,
                                                const std::vector<IntMatrix>& h_star,
                                                double tolerance = kDefaultEntropyTolerance);

struct NormInterval {
  SymbolicNorm lower;
  SymbolicNorm upper;
};

/// ||M|| ||N|| <= ||M x N|| <= binom(dim M + dim N, dim M) ||M|| ||N||.
NormInterval product_norm_bounds(const SymbolicNorm& norm_m, const SymbolicNorm& norm_n, int dim_m, int dim_n);

/// Binomial coefficient, exact.
BigInt binomial(int n, int k);

}  // namespace kodim
