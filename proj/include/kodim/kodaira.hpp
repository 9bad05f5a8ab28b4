#pragma once

#include <compare>
#include <limits>
#include <string>

namespace kodim {

/// A Kodaira dimension: either negative infinity or a non-negative integer.
/// Ordered with -inf below every integer; addition absorbs -inf.
class KodairaDim {
 public:
  static constexpr KodairaDim neg_infinity() { return KodairaDim(kNegInf, Tag{}); }

  /// Throws PreconditionError for negative values.
  explicit KodairaDim(int value);

  constexpr bool is_neg_infinity() const { return value_ == kNegInf; }

  /// Finite value; throws PreconditionError on -inf.
  int value() const;

  friend constexpr auto operator<=>(KodairaDim, KodairaDim) = default;

  friend KodairaDim operator+(KodairaDim a, KodairaDim b);

  /// "-inf" or the decimal value.
  std::string to_string() const;

 private:
  struct Tag {};
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  constexpr KodairaDim(int raw, Tag) : value_(raw) {}

  int value_;
};

inline std::string to_string(KodairaDim k) { return k.to_string(); }

}  // namespace kodim
