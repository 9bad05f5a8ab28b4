#include "kodim/fourfold.hpp"

#include "kodim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace kodim {

std::string to_string(const KappaH& k) {
  if (const auto* d = std::get_if<KodairaDim>(&k)) return d->to_string();
  return "unclassified";
}

KodairaDim kappa_s_4(const SymplecticRecord4& r) {
  if (!r.minimal) throw PreconditionError("reduce to minimal model first");
  const int kw = sign(r.k_dot_omega);
  const int k2 = sign(r.k_squared);
  if (kw < 0 || k2 < 0) return KodairaDim::neg_infinity();
  if (kw == 0 && k2 == 0) return KodairaDim(0);
  if (kw > 0 && k2 == 0) return KodairaDim(1);
  if (kw > 0 && k2 > 0) return KodairaDim(2);
  throw PreconditionError("inconsistent minimal symplectic data: K.[w] = 0 but K^2 > 0");
}

KodairaDim kappa_l(const LefschetzRecord& r) {
  if (r.g < 0 || r.h < 0 || r.n < 0) throw PreconditionError("Lefschetz data (g, h, n) must be non-negative");
  if (r.h == 0) throw PreconditionError("kappa_l requires h >= 1");
  if (!r.relatively_minimal) throw PreconditionError("reduce to relatively minimal model");
  if (r.g == 0) return KodairaDim::neg_infinity();
  if (r.g == 1) {
    if (r.h == 1 && r.n == 0) return KodairaDim(0);
    return KodairaDim(1);
  }
  if (r.h == 1 && r.n == 0) return KodairaDim(1);
  return KodairaDim(2);
}

namespace {

void check_sample(const PlurigeneraSample& p) {
  if (p.samples.size() < 4) throw PreconditionError("plurigenera sample needs at least 4 values");
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    const auto [l, pl] = p.samples[i];
    if (l < 1) throw PreconditionError("plurigenus index l must be >= 1");
    if (pl < 0) throw PreconditionError("plurigenera are non-negative");
    if (i > 0 && l <= p.samples[i - 1].first) throw PreconditionError("plurigenus indices must be strictly increasing");
  }
}

}  // namespace

std::optional<GrowthFit> fit_plurigenera_growth(const PlurigeneraSample& p) {
  check_sample(p);
  const std::size_t n = p.samples.size();
  const std::size_t window = (n + 1) / 2;
  std::vector<double> xs, ys;
  for (std::size_t i = n - window; i < n; ++i) {
    const auto [l, pl] = p.samples[i];
    if (pl == 0) return std::nullopt;
    xs.push_back(std::log(static_cast<double>(l)));
    ys.push_back(std::log(static_cast<double>(pl)));
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  GrowthFit fit;
  fit.slope = sxy / sxx;
  fit.exponent = std::max(1, static_cast<int>(std::lround(fit.slope)));
  const double k = fit.exponent;
  // Best constant for the rounded exponent in the log domain.
  const double log_c = my - k * mx;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double model = std::exp(log_c + k * xs[i]);
    const double actual = std::exp(ys[i]);
    fit.residual = std::max(fit.residual, std::abs(actual - model) / actual);
  }
  return fit;
}

KappaH kappa_h_classify(const PlurigeneraSample& p, const Rational& fit_tolerance) {
  check_sample(p);
  if (fit_tolerance <= 0) throw PreconditionError("fit tolerance must be positive");
  const bool all_zero = std::all_of(p.samples.begin(), p.samples.end(), [](const auto& s) { return s.second == 0; });
  if (all_zero) return KodairaDim::neg_infinity();
  const bool at_most_one = std::all_of(p.samples.begin(), p.samples.end(), [](const auto& s) { return s.second <= 1; });
  if (at_most_one) return KodairaDim(0);
  auto fit = fit_plurigenera_growth(p);
  if (!fit || fit->residual > to_double(fit_tolerance)) return Unclassified{};
  return KodairaDim(fit->exponent);
}

NormValue gromov_norm_4_geometric(Geometry4Name g, const std::optional<Rational>& volume) {
  const Geometry4& rec = geometry4_record(g);
  if (volume && *volume <= 0) throw PreconditionError("volume must be positive");
  if (!rec.gromov_nonzero) {
    if (volume) throw PreconditionError("volume irrelevant: " + std::string(to_string(g)) + " manifolds have zero Gromov norm");
    return SymbolicNorm::zero();
  }
  switch (g) {
    case Geometry4Name::H4:
      if (volume) return SymbolicNorm::term(*volume, NormConstant::InvV4);
      return NonzeroUnquantified{};
    case Geometry4Name::H2xH2:
      if (volume) return SymbolicNorm::term(*volume, NormConstant::ThreeOver2Pi2);
      return NonzeroUnquantified{};
    default:
      // Locally symmetric of non-compact type: positive, no closed-form constant.
      return NonzeroUnquantified{};
  }
}

Geometry4Report geometry4_query(Geometry4Name g, bool sol_product) {
  if (sol_product && g != Geometry4Name::Sol_mn) throw PreconditionError("the product flag applies to Sol_mn only");
  Geometry4Report r{geometry4_record(g), sol_product, {}};
  const Geometry4& rec = r.record;
  auto& notes = r.notes;
  using G = Geometry4Name;

  if (!rec.note.empty()) notes.emplace_back(rec.note);
  if (g == G::Sol_mn && sol_product) notes.emplace_back("m = n: the geometry is Sol^3 x E");

  if (rec.admits_compatible_kahler)
    notes.push_back("compatible Kahler structures have Kodaira dimension " + rec.category.to_string());
  if (g == G::S3xE || g == G::Sol0_4 || g == G::Sol1_4) notes.emplace_back("complex models are class VII surfaces");
  if (g == G::Nil3xE || g == G::SL2RxE) notes.emplace_back("complex models are class VI surfaces");
  if (g == G::Nil3xE) notes.emplace_back("compact model: the Kodaira-Thurston manifold");

  if (rec.admits_symplectic_model == TriState::Yes) {
    if (rec.category.is_neg_infinity()) {
      notes.emplace_back("symplectic models are rational or ruled surfaces");
    } else if (rec.category == KodairaDim(0)) {
      if (g == G::Sol_mn && !sol_product)
        notes.emplace_back("symplectic models are known for m = n (Sol^3 x E), realized by T^2 bundles over T^2");
      else
        notes.emplace_back("symplectic models realized by T^2 bundles over T^2");
    } else if (rec.category == KodairaDim(1)) {
      notes.emplace_back("symplectic models realized by surface bundles over T^2");
    } else if (g == G::H2xH2) {
      notes.emplace_back("symplectic models: products of hyperbolic surfaces");
    } else if (g == G::H2C) {
      notes.emplace_back("symplectic models: complex ball quotients");
    }
  } else if (rec.admits_symplectic_model == TriState::ConjecturallyNo) {
    notes.emplace_back("conjecturally no symplectic model: Seiberg-Witten invariants are expected to vanish");
  }

  if (rec.gromov_nonzero) notes.emplace_back("closed models have nonzero Gromov norm");
  return r;
}

SymplecticRecord4 surface_product_record(int genus_a, const Rational& area_a, int genus_b, const Rational& area_b) {
  if (genus_a < 0 || genus_b < 0) throw PreconditionError("genus must be non-negative");
  if (area_a <= 0 || area_b <= 0) throw PreconditionError("areas must be positive");
  const Rational ka = 2 * genus_a - 2;
  const Rational kb = 2 * genus_b - 2;
  return {ka * area_b + kb * area_a, 2 * ka * kb, true};
}

}  // namespace kodim
