#include "kodim/lattice.hpp"

#include "kodim/errors.hpp"
#include "kodim/fourfold.hpp"

#include <numeric>

namespace kodim {

Lattice2::Lattice2(Family family, std::vector<std::vector<Rational>> gram)
    : family_(family), gram_(std::move(gram)) {}

Lattice2 Lattice2::blown_up_plane(int k) {
  if (k < 0) throw PreconditionError("number of blow-ups must be non-negative");
  const int n = k + 1;
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, 0));
  g[0][0] = 1;
  for (int i = 1; i < n; ++i) g[i][i] = -1;
  return {Family::BlownUpPlane, std::move(g)};
}

Lattice2 Lattice2::sphere_product() { return {Family::SphereProduct, {{0, 1}, {1, 0}}}; }

Lattice2 Lattice2::custom(std::vector<std::vector<Rational>> gram) {
  const std::size_t n = gram.size();
  if (n == 0) throw PreconditionError("lattice rank must be at least 1");
  for (const auto& row : gram)
    if (row.size() != n) throw PreconditionError("Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw PreconditionError("Gram matrix must be symmetric");
  return {Family::Custom, std::move(gram)};
}

std::vector<std::string> Lattice2::basis_names() const {
  std::vector<std::string> names;
  switch (family_) {
    case Family::BlownUpPlane:
      names.push_back("H");
      for (int i = 1; i < rank(); ++i) names.push_back("E" + std::to_string(i));
      break;
    case Family::SphereProduct:
      names = {"S1", "S2"};
      break;
    case Family::Custom:
      for (int i = 0; i < rank(); ++i) names.push_back("e" + std::to_string(i + 1));
      break;
  }
  return names;
}

std::string Lattice2::name() const {
  switch (family_) {
    case Family::BlownUpPlane: return "cp2#" + std::to_string(blowups());
    case Family::SphereProduct: return "s2xs2";
    case Family::Custom: return "custom";
  }
  return "?";
}

Rational pair(const Lattice2& l, const Class2& a, const Class2& b) {
  const auto n = static_cast<std::size_t>(l.rank());
  if (a.size() != n || b.size() != n)
    throw PreconditionError("class has " + std::to_string(a.size() != n ? a.size() : b.size()) +
                            " coefficients but the lattice has rank " + std::to_string(n));
  Rational s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& f = l.form(static_cast<int>(i), static_cast<int>(j));
      if (f != 0 && b[j] != 0) s += a[i] * f * b[j];
    }
  }
  return s;
}

Class2 canonical_class(const Lattice2& l) {
  switch (l.family()) {
    case Lattice2::Family::BlownUpPlane: {
      Class2 k(static_cast<std::size_t>(l.rank()), Rational(1));
      k[0] = -3;
      return k;
    }
    case Lattice2::Family::SphereProduct:
      return {Rational(-2), Rational(-2)};
    case Lattice2::Family::Custom:
      break;
  }
  throw PreconditionError("canonical class is defined only for cp2#k and s2xs2 lattices");
}

Class2 omega_from_coefficients(const Lattice2& l, std::span<const Rational> coefficients) {
  if (coefficients.size() != static_cast<std::size_t>(l.rank()))
    throw PreconditionError("omega needs " + std::to_string(l.rank()) + " coefficients");
  for (const auto& c : coefficients)
    if (c <= 0) throw PreconditionError("omega coefficients must all be positive");
  Class2 w(coefficients.begin(), coefficients.end());
  switch (l.family()) {
    case Lattice2::Family::BlownUpPlane:
      for (std::size_t i = 1; i < w.size(); ++i) w[i] = -w[i];
      return w;
    case Lattice2::Family::SphereProduct:
      return w;
    case Lattice2::Family::Custom:
      break;
  }
  throw PreconditionError("positive-shape omega is defined only for cp2#k and s2xs2 lattices");
}

std::string_view to_string(LightConeVerdict v) {
  switch (v) {
    case LightConeVerdict::TorusNullHomologous: return "TorusNullHomologous";
    case LightConeVerdict::NotLagrangianData: return "NotLagrangianData";
    case LightConeVerdict::SpherePossible: return "SpherePossible";
  }
  return "?";
}

LightConeVerdict light_cone_check(const Lattice2& l, const Class2& omega, const Class2& x) {
  if (l.family() == Lattice2::Family::Custom) throw PreconditionError("light-cone check needs a b+ = 1 lattice family");
  if (pair(l, omega, omega) <= 0) throw PreconditionError("omega^2 must be positive");
  const Rational xx = pair(l, x, x);
  const Rational xw = pair(l, x, omega);
  if (xx < 0) return LightConeVerdict::SpherePossible;
  if (xw != 0) return LightConeVerdict::NotLagrangianData;
  // Signature (1, n): a class orthogonal to a positive class has x^2 <= 0,
  // with equality only at zero.
  for (const auto& c : x)
    if (c != 0) throw std::logic_error("light-cone lemma violated: nonzero x with x^2 >= 0 orthogonal to omega");
  return LightConeVerdict::TorusNullHomologous;
}

std::vector<ThomSullivanViolation> thom_sullivan_check(std::span<const std::int64_t> real_betti_z2,
                                                       std::span<const std::int64_t> complex_betti_z2,
                                                       std::int64_t chi_real, std::int64_t chi_complex) {
  for (auto b : real_betti_z2)
    if (b < 0) throw PreconditionError("Betti numbers are non-negative");
  for (auto b : complex_betti_z2)
    if (b < 0) throw PreconditionError("Betti numbers are non-negative");
  std::vector<ThomSullivanViolation> out;
  const BigInt real_total = std::accumulate(real_betti_z2.begin(), real_betti_z2.end(), BigInt(0));
  const BigInt complex_total = std::accumulate(complex_betti_z2.begin(), complex_betti_z2.end(), BigInt(0));
  if (real_total > complex_total)
    out.push_back({ThomSullivanViolation::Kind::ThomInequality,
                   "sum of real Betti numbers " + real_total.str() + " exceeds complex sum " + complex_total.str()});
  if (((chi_real - chi_complex) % 2) != 0)
    out.push_back({ThomSullivanViolation::Kind::SullivanParity, "chi(X(R)) = " + std::to_string(chi_real) +
                                                                    " and chi(X(C)) = " + std::to_string(chi_complex) +
                                                                    " differ mod 2"});
  return out;
}

Products6 product6_intersections(const Rational& k2_m, const Rational& kw_m, const Rational& w2_m,
                                 const SurfaceFactor& sigma) {
  if (w2_m <= 0) throw PreconditionError("[w_M]^2 must be positive");
  if (sigma.genus < 0) throw PreconditionError("genus must be non-negative");
  if (sigma.area <= 0) throw PreconditionError("surface area must be positive");
  const Rational ks = sigma.k_sigma();
  return {k2_m * ks, k2_m * sigma.area + 2 * kw_m * ks, w2_m * ks + 2 * kw_m * sigma.area};
}

std::string to_string(const Kappa6& k) {
  if (const auto* d = std::get_if<KodairaDim>(&k)) return d->to_string();
  return "ill-formed";
}

Kappa6 li_ruan_kappa6(const Products6& p) {
  // Index i pairs K^i with [w]^(3-i); i = 0 is [w]^3 > 0.
  const int s[4] = {1, sign(p.kw2), sign(p.k2w), sign(p.k3)};
  for (int i = 1; i <= 3; ++i)
    if (s[i] < 0) return KodairaDim::neg_infinity();
  for (int k = 0; k <= 3; ++k) {
    bool match = true;
    for (int i = 0; i <= 3; ++i) match = match && (i <= k ? s[i] > 0 : s[i] == 0);
    if (match) return KodairaDim(k);
  }
  return IllFormed{};
}

KodairaDim surface_kodaira(int genus) {
  if (genus < 0) throw PreconditionError("genus must be non-negative");
  if (genus == 0) return KodairaDim::neg_infinity();
  return KodairaDim(genus == 1 ? 0 : 1);
}

AdditivityVerdict additivity_check(const Rational& k2_m, const Rational& kw_m, const Rational& w2_m,
                                   KodairaDim kappa_m, const SurfaceFactor& sigma) {
  if (w2_m <= 0) throw PreconditionError("[w_M]^2 must be positive");
  if (kappa_s_4({kw_m, k2_m, true}) != kappa_m)
    throw PreconditionError("(K^2, K.[w]) = (" + to_string(k2_m) + ", " + to_string(kw_m) +
                            ") does not give kappa = " + kappa_m.to_string());
  if (kappa_m.is_neg_infinity() && k2_m > 0 && kw_m * kw_m < k2_m * w2_m)
    throw PreconditionError("kappa = -inf data violates the b+ = 1 light-cone bound (K.[w])^2 >= K^2 [w]^2");
  AdditivityVerdict v;
  v.products = product6_intersections(k2_m, kw_m, w2_m, sigma);
  v.product_kappa = li_ruan_kappa6(v.products);
  v.expected = kappa_m + surface_kodaira(sigma.genus);
  v.pass = v.product_kappa == Kappa6(v.expected);
  return v;
}

NegativityVerdict rational_ruled_negativity_check(const Lattice2& l, std::span<const Rational> omega_coefficients,
                                                  const SurfaceFactor& sigma) {
  if (l.family() == Lattice2::Family::BlownUpPlane && l.blowups() >= 9)
    throw PreconditionError("needs cp2#k with k < 9");
  if (l.family() == Lattice2::Family::Custom) throw PreconditionError("needs cp2#k or s2xs2");
  if (sigma.genus < 2) throw PreconditionError("needs a surface factor of genus >= 2");
  const Class2 w = omega_from_coefficients(l, omega_coefficients);
  const Class2 k = canonical_class(l);
  NegativityVerdict v;
  v.w2 = pair(l, w, w);
  if (v.w2 <= 0) throw PreconditionError("omega^2 must be positive");
  v.k2 = pair(l, k, k);
  v.kw = pair(l, k, w);
  v.inequality_holds = v.k2 * v.w2 >= 4 * v.kw * v.kw;
  v.products = product6_intersections(v.k2, v.kw, v.w2, sigma);
  v.pass = !v.inequality_holds && (v.products.k2w < 0 || v.products.kw2 < 0);
  return v;
}

}  // namespace kodim
