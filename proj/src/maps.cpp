#include "kodim/maps.hpp"

#include "kodim/errors.hpp"
#include "kodim/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace kodim {

namespace {

void check_count(const std::optional<std::int64_t>& v, const char* name) {
  if (v && *v < 0) throw PreconditionError(std::string(name) + " must be non-negative");
}

std::string kd(KodairaDim k) { return k.to_string(); }

void compare_count(std::vector<ObstructionViolation>& out, Obstruction kind, const char* name,
                   const std::optional<std::int64_t>& s, const std::optional<std::int64_t>& t) {
  if (s && t && *s < *t)
    out.push_back({kind, std::string(name) + "(source) = " + std::to_string(*s) + " < " + std::to_string(*t) +
                             " = " + name + "(target)"});
}

}  // namespace

void validate_profile(const InvariantProfile& p) {
  if (p.dimension != 3 && p.dimension != 4) throw PreconditionError("profile dimension must be 3 or 4");
  if (p.betti) {
    for (auto b : *p.betti)
      if (b < 0) throw PreconditionError("betti numbers must be non-negative");
    const auto& b = *p.betti;
    if (b.size() > static_cast<std::size_t>(p.dimension) + 1)
      throw PreconditionError("betti list longer than dimension + 1");
    if (b.size() == static_cast<std::size_t>(p.dimension) + 1)
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != b[b.size() - 1 - i]) throw PreconditionError("betti list is not Poincare symmetric");
  }
  check_count(p.b2_plus, "b2_plus");
  check_count(p.b2_minus, "b2_minus");
  check_count(p.hj_plus, "hJ_plus");
  check_count(p.hj_minus, "hJ_minus");
}

std::string_view to_string(MapCategory c) {
  switch (c) {
    case MapCategory::Continuous: return "continuous";
    case MapCategory::Holomorphic: return "holomorphic";
    case MapCategory::JJprimeHolomorphic: return "jj_holomorphic";
  }
  return "?";
}

char obstruction_letter(Obstruction o) {
  switch (o) {
    case Obstruction::KappaT: return 'a';
    case Obstruction::GromovNorm: return 'b';
    case Obstruction::KappaH: return 'c';
    case Obstruction::Betti: return 'd';
    case Obstruction::B2Plus:
    case Obstruction::B2Minus: return 'e';
    case Obstruction::HJPlus:
    case Obstruction::HJMinus: return 'f';
  }
  return '?';
}

std::string_view to_string(Obstruction o) {
  switch (o) {
    case Obstruction::KappaT: return "kappa_t";
    case Obstruction::GromovNorm: return "gromov_norm";
    case Obstruction::KappaH: return "kappa_h";
    case Obstruction::Betti: return "betti";
    case Obstruction::B2Plus: return "b2_plus";
    case Obstruction::B2Minus: return "b2_minus";
    case Obstruction::HJPlus: return "hJ_plus";
    case Obstruction::HJMinus: return "hJ_minus";
  }
  return "?";
}

NormComparison compare_norms(const NormValue& source, const NormValue& target, std::int64_t degree) {
  if (degree == 0) throw PreconditionError("degree must be non-zero");
  if (is_zero(target)) return NormComparison::Holds;
  if (is_zero(source)) return NormComparison::Violated;
  const auto* s = std::get_if<SymbolicNorm>(&source);
  const auto* t = std::get_if<SymbolicNorm>(&target);
  if (!s || !t) return NormComparison::Incomparable;
  const SymbolicNorm scaled = t->scaled(Rational(degree < 0 ? -degree : degree));
  // Constants are positive, so termwise dominance decides the sum.
  bool all_ge = true;
  for (const auto& [mono, c] : scaled.terms())
    if (s->coefficient(mono) < c) all_ge = false;
  if (all_ge) return NormComparison::Holds;
  bool all_lt = true;
  for (const auto& [mono, c] : s->terms())
    if (c >= scaled.coefficient(mono)) all_lt = false;
  if (all_lt) return NormComparison::Violated;
  return NormComparison::Incomparable;
}

std::vector<ObstructionViolation> domination_obstructions(const MapClaim& claim) {
  if (claim.degree == 0) throw PreconditionError("degree must be non-zero");
  if (claim.source.dimension != claim.target.dimension) throw PreconditionError("dimension mismatch");
  validate_profile(claim.source);
  validate_profile(claim.target);
  const auto& s = claim.source;
  const auto& t = claim.target;
  std::vector<ObstructionViolation> out;

  if (s.dimension == 3 && s.kappa_t && t.kappa_t && *s.kappa_t < *t.kappa_t)
    out.push_back({Obstruction::KappaT, "kappa_t(source) = " + kd(*s.kappa_t) + " < " + kd(*t.kappa_t) +
                                            " = kappa_t(target)"});

  if (s.gromov_norm && t.gromov_norm &&
      compare_norms(*s.gromov_norm, *t.gromov_norm, claim.degree) == NormComparison::Violated)
    out.push_back({Obstruction::GromovNorm, "||source|| = " + to_string(*s.gromov_norm) + " < |" +
                                                std::to_string(claim.degree) + "| * " + to_string(*t.gromov_norm)});

  if (claim.category != MapCategory::Continuous && s.kappa_h && t.kappa_h && *s.kappa_h < *t.kappa_h)
    out.push_back({Obstruction::KappaH, "kappa_h(source) = " + kd(*s.kappa_h) + " < " + kd(*t.kappa_h) +
                                            " = kappa_h(target)"});

  if (s.betti && t.betti) {
    const std::size_t n = std::min(s.betti->size(), t.betti->size());
    for (std::size_t l = 0; l < n; ++l)
      if ((*s.betti)[l] < (*t.betti)[l])
        out.push_back({Obstruction::Betti, "b" + std::to_string(l) + "(source) = " + std::to_string((*s.betti)[l]) +
                                               " < " + std::to_string((*t.betti)[l]) + " = b" + std::to_string(l) +
                                               "(target)"});
  }

  compare_count(out, Obstruction::B2Plus, "b2+", s.b2_plus, t.b2_plus);
  compare_count(out, Obstruction::B2Minus, "b2-", s.b2_minus, t.b2_minus);
  if (claim.category == MapCategory::JJprimeHolomorphic) {
    compare_count(out, Obstruction::HJPlus, "hJ+", s.hj_plus, t.hj_plus);
    compare_count(out, Obstruction::HJMinus, "hJ-", s.hj_minus, t.hj_minus);
  }
  return out;
}

std::optional<bool> pi1_ladder_consistent(const Manifold3& source, const Manifold3& target) {
  const KodairaDim one(1);
  if (kappa_t(source) >= one || kappa_t(target) >= one) return std::nullopt;
  const auto s = pi1_class_of(source);
  const auto t = pi1_class_of(target);
  return t.back() <= s.back();
}

double max_spectral_radius(const HomologyEndo& e, double tolerance) {
  if (e.matrices.empty()) throw PreconditionError("empty matrix list");
  if (!(tolerance > 0)) throw PreconditionError("tolerance must be positive");
  long double best = 0;
  for (const auto& m : e.matrices) {
    if (!m.square()) throw PreconditionError("homology matrices must be square");
    best = std::max(best, spectral_radius(m, tolerance));
  }
  return static_cast<double>(best);
}

double shub_entropy(const HomologyEndo& e, double tolerance) {
  const double lambda = max_spectral_radius(e, tolerance);
  return lambda <= 1 ? 0.0 : std::log(lambda);
}

EquivalenceVerdict degree_one_equivalence_check(const HomologyEndo& f1, const std::vector<IntMatrix>& g_star,
                                                const std::vector<IntMatrix>& h_star, double tolerance) {
  const std::size_t n = f1.matrices.size();
  if (g_star.size() != n || h_star.size() != n)
    throw PreconditionError("one matrix per homology degree is required for g and h");
  EquivalenceVerdict v;
  for (std::size_t l = 0; l < n; ++l) {
    if (!g_star[l].square() || !h_star[l].square() || determinant(g_star[l]) == 0 || determinant(h_star[l]) == 0)
      throw PreconditionError("degree-one maps induce homology isomorphisms");
    v.f2.matrices.push_back(g_star[l] * f1.matrices[l] * h_star[l]);
  }
  v.entropy_f1 = shub_entropy(f1, tolerance);
  v.entropy_f2 = shub_entropy(v.f2, tolerance);
  v.pass = std::fabs(v.entropy_f1 - v.entropy_f2) <= tolerance;
  return v;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

NormInterval product_norm_bounds(const SymbolicNorm& norm_m, const SymbolicNorm& norm_n, int dim_m, int dim_n) {
  if (dim_m <= 0 || dim_n <= 0) throw PreconditionError("dimensions must be positive");
  if (norm_m.is_zero() || norm_n.is_zero()) return {SymbolicNorm::zero(), SymbolicNorm::zero()};
  if (norm_m.term_count() != 1 || norm_n.term_count() != 1) throw PreconditionError("symbolic product not supported");
  const SymbolicNorm lower = norm_m.times(norm_n);
  return {lower, lower.scaled(Rational(binomial(dim_m + dim_n, dim_m)))};
}

}  // namespace kodim
