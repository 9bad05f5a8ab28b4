#include "kodim/errors.hpp"
#include "kodim/kodaira.hpp"
#include "kodim/norm.hpp"
#include "kodim/rational.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace kodim {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
    : Error([&] {
        std::ostringstream os;
        os << "parse error at byte " << offset << ": " << message;
        if (!expected.empty()) {
          os << " (expected one of:";
          for (const auto& e : expected) os << ' ' << e;
          os << ')';
        }
        return os.str();
      }()),
      offset_(offset),
      expected_(std::move(expected)),
      detail_(message) {}

// --- rationals --------------------------------------------------------------

std::string to_string(const BigInt& n) { return n.str(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

int sign(const Rational& r) { return r.sign(); }

// --- Kodaira dimension ------------------------------------------------------

KodairaDim::KodairaDim(int value) : value_(value) {
  if (value < 0) throw PreconditionError("Kodaira dimension must be -inf or a non-negative integer");
}

int KodairaDim::value() const {
  if (is_neg_infinity()) throw PreconditionError("Kodaira dimension is -inf");
  return value_;
}

KodairaDim operator+(KodairaDim a, KodairaDim b) {
  if (a.is_neg_infinity() || b.is_neg_infinity()) return KodairaDim::neg_infinity();
  return KodairaDim(a.value_ + b.value_);
}

std::string KodairaDim::to_string() const { return is_neg_infinity() ? "-inf" : std::to_string(value_); }

// --- symbolic norms ---------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 4> kConstantNames = {"ONE", "INV_V3", "INV_V4", "THREE_OVER_2PI2"};

std::string_view factor_text(NormConstant c) {
  switch (c) {
    case NormConstant::One: return "1";
    case NormConstant::InvV3: return "1/v3";
    case NormConstant::InvV4: return "1/v4";
    case NormConstant::ThreeOver2Pi2: return "3/(2pi^2)";
  }
  return "?";
}

std::optional<double> factor_value(NormConstant c) {
  switch (c) {
    case NormConstant::One: return 1.0;
    case NormConstant::InvV3: return 1.0 / display_constants::v3;
    case NormConstant::InvV4: return std::nullopt;
    case NormConstant::ThreeOver2Pi2: return display_constants::three_over_two_pi_squared;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(NormConstant c) { return kConstantNames[static_cast<std::size_t>(c)]; }

std::optional<NormConstant> norm_constant_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kConstantNames.size(); ++i)
    if (kConstantNames[i] == s) return static_cast<NormConstant>(i);
  return std::nullopt;
}

SymbolicNorm SymbolicNorm::term(const Rational& coefficient, NormConstant c) {
  if (coefficient < 0) throw PreconditionError("Gromov norm coefficients are non-negative");
  SymbolicNorm n;
  if (coefficient == 0) return n;
  Monomial m;
  if (c != NormConstant::One) m.push_back(c);
  n.terms_.emplace(std::move(m), coefficient);
  return n;
}

Rational SymbolicNorm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymbolicNorm& SymbolicNorm::operator+=(const SymbolicNorm& other) {
  for (const auto& [m, c] : other.terms_) terms_[m] += c;
  return *this;
}

SymbolicNorm SymbolicNorm::operator+(const SymbolicNorm& other) const {
  SymbolicNorm r = *this;
  r += other;
  return r;
}

SymbolicNorm SymbolicNorm::scaled(const Rational& factor) const {
  if (factor < 0) throw PreconditionError("Gromov norms scale by non-negative factors only");
  SymbolicNorm r;
  if (factor == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * factor);
  return r;
}

SymbolicNorm SymbolicNorm::times(const SymbolicNorm& other) const {
  SymbolicNorm r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      r.terms_[m] += ca * cb;
    }
  }
  return r;
}

std::optional<double> SymbolicNorm::approximate() const {
  double total = 0;
  for (const auto& [m, c] : terms_) {
    double v = to_double(c);
    for (NormConstant k : m) {
      auto f = factor_value(k);
      if (!f) return std::nullopt;
      v *= *f;
    }
    total += v;
  }
  return total;
}

std::string SymbolicNorm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << kodim::to_string(c);
    // Group repeated factors as powers.
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      os << " * (" << factor_text(m[i]) << ")";
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
  }
  return os.str();
}

bool is_zero(const NormValue& v) {
  if (const auto* n = std::get_if<SymbolicNorm>(&v)) return n->is_zero();
  return false;
}

std::string to_string(const NormValue& v) {
  if (const auto* n = std::get_if<SymbolicNorm>(&v)) return n->to_string();
  return "nonzero (unquantified)";
}

}  // namespace kodim
