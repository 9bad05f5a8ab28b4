#pragma once

#include "kodim/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kodim {

/// Named transcendental factors appearing in exact Gromov norms.
enum class NormConstant {
  One,            // 1
  InvV3,          // 1/v3, v3 the volume of the regular ideal hyperbolic tetrahedron
  InvV4,          // 1/v4, v4 the maximal volume of an ideal 4-simplex
  ThreeOver2Pi2,  // 3/(2 pi^2)
};

std::string_view to_string(NormConstant c);
std::optional<NormConstant> norm_constant_from_string(std::string_view s);

/// Marker for a norm known to be positive but without a closed form.
struct NonzeroUnquantified {
  friend bool operator==(NonzeroUnquantified, NonzeroUnquantified) = default;
};

/// Exact non-negative combination of monomials in the norm constants.
///
/// A monomial is a sorted list of constants (One is never stored; the empty
/// monomial stands for 1). Only strictly positive coefficients are kept, so the
/// norm is zero exactly when there are no terms.
class SymbolicNorm {
 public:
  using Monomial = std::vector<NormConstant>;

  SymbolicNorm() = default;

  static SymbolicNorm zero() { return {}; }
  /// coefficient * c. Throws PreconditionError if coefficient < 0.
  static SymbolicNorm term(const Rational& coefficient, NormConstant c);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;

  SymbolicNorm operator+(const SymbolicNorm& other) const;
  SymbolicNorm& operator+=(const SymbolicNorm& other);
  /// Scalar multiple; throws PreconditionError if factor < 0.
  SymbolicNorm scaled(const Rational& factor) const;
  /// Product of two norms, expanded monomial by monomial.
  SymbolicNorm times(const SymbolicNorm& other) const;

  /// Floating-point value for display only; nullopt when a factor has no
  /// built-in approximation (v4).
  std::optional<double> approximate() const;

  /// "0", or terms like "203/100 * (1/v3)" joined by " + ".
  std::string to_string() const;

  friend bool operator==(const SymbolicNorm&, const SymbolicNorm&) = default;

 private:
  std::map<Monomial, Rational> terms_;
};

using NormValue = std::variant<SymbolicNorm, NonzeroUnquantified>;

bool is_zero(const NormValue& v);
std::string to_string(const NormValue& v);

/// Non-normative decimal approximations used only in display output.
namespace display_constants {
inline constexpr double v3 = 1.0149416064096536;
inline constexpr double three_over_two_pi_squared = 0.15198177546350666;
}  // namespace display_constants

}  // namespace kodim
