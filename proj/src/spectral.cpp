#include "kodim/spectral.hpp"

#include "kodim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kodim {

namespace {

using QPoly = std::vector<Rational>;
using CLD = std::complex<long double>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Long division; returns quotient, leaves remainder in `a`.
QPoly divide(QPoly& a, const QPoly& b) {
  trim(a);
  if (b.empty()) throw PreconditionError("division by zero polynomial");
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = a;
    divide(r, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

long double to_ld(const BigInt& v) { return v.convert_to<long double>(); }

CLD horner(const std::vector<long double>& a, CLD z) {
  CLD v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * z + a[i];
  return v;
}

}  // namespace

std::vector<BigInt> square_free_part(const std::vector<BigInt>& p) {
  QPoly q(p.begin(), p.end());
  trim(q);
  if (q.empty()) throw PreconditionError("zero polynomial");
  QPoly g = gcd(q, derivative(q));
  QPoly r = q;
  QPoly s = divide(r, g.empty() ? QPoly{1} : g);
  trim(s);
  BigInt den = 1;
  for (const auto& x : s) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<BigInt> out;
  for (const auto& x : s) out.push_back(boost::multiprecision::numerator(Rational(x * den)));
  BigInt content = 0;
  for (const auto& x : out) content = boost::multiprecision::gcd(content, x);
  if (content != 0) {
    if (out.back() < 0) content = -content;
    for (auto& x : out) x /= content;
  }
  return out;
}

std::vector<CLD> polynomial_roots(const std::vector<BigInt>& p, long double tolerance) {
  std::vector<BigInt> poly = p;
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  if (poly.empty()) throw PreconditionError("zero polynomial");
  std::vector<CLD> roots;
  std::size_t zeros = 0;
  while (zeros < poly.size() && poly[zeros] == 0) ++zeros;
  roots.assign(zeros, CLD(0));
  std::vector<long double> a;
  const long double lead = to_ld(poly.back());
  for (std::size_t i = zeros; i < poly.size(); ++i) a.push_back(to_ld(poly[i]) / lead);
  const std::size_t d = a.size() - 1;
  if (d == 0) return roots;
  if (d == 1) {
    roots.emplace_back(-a[0]);
    return roots;
  }
  std::vector<long double> da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<long double>(i));

  long double bound = 0;
  for (std::size_t i = 0; i < d; ++i) bound = std::max(bound, std::fabs(a[i]));
  bound += 1;
  // Initial guesses on a circle whose radius is the geometric mean of the roots.
  const long double r0 = std::pow(std::fabs(a[0]), 1.0L / static_cast<long double>(d));
  const long double radius = std::clamp(r0, 1e-6L, bound);
  std::vector<CLD> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    const long double t = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(d) + 0.4L;
    z[k] = std::polar(radius, t);
  }
  const long double eps = std::max(tolerance * 1e-3L, 1e-18L);
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const CLD pv = horner(a, z[k]);
      if (pv == CLD(0)) continue;
      const CLD w = pv / horner(da, z[k]);
      CLD s = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += CLD(1) / (z[k] - z[j]);
      const CLD corr = w / (CLD(1) - w * s);
      if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) continue;
      z[k] -= corr;
      worst = std::max(worst, std::abs(corr) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < eps) break;
  }
  for (auto& root : z) {
    for (int i = 0; i < 3; ++i) {
      const CLD dv = horner(da, root);
      if (dv == CLD(0)) break;
      const CLD step = horner(a, root) / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      root -= step;
    }
    roots.push_back(root);
  }
  return roots;
}

long double spectral_radius(const IntMatrix& m, long double tolerance) {
  if (!m.square()) throw PreconditionError("spectral radius of a non-square matrix");
  if (m.rows() == 0) return 0;
  const auto roots = polynomial_roots(square_free_part(characteristic_polynomial(m)), tolerance);
  long double r = 0;
  for (const auto& z : roots) r = std::max(r, std::abs(z));
  return r;
}

}  // namespace kodim
