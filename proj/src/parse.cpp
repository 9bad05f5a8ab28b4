#include "kodim/parse.hpp"

#include "kodim/errors.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace kodim {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<std::string> to_strings(const std::vector<std::string_view>& v) { return {v.begin(), v.end()}; }

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)}, "unexpected " + describe_here());
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message) const {
    throw ParseError(pos_, std::move(expected), message);
  }
  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected, const std::string& message) const {
    throw ParseError(at, std::move(expected), message);
  }

  std::string describe_here() {
    if (at_end()) return "end of input";
    const unsigned char c = static_cast<unsigned char>(text_[pos_]);
    if (std::isprint(c)) return std::string("'") + text_[pos_] + "'";
    return "byte " + std::to_string(static_cast<int>(c));
  }

  /// Maximal run of [A-Za-z0-9_]; empty when none.
  std::string_view identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view expect_identifier(const std::vector<std::string>& expected) {
    skip_ws();
    const auto id = identifier();
    if (id.empty()) fail(expected, "unexpected " + describe_here());
    return id;
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    const BigInt whole = digits("rational");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const BigInt den = digits("denominator");
      if (den == 0) fail_at(start, {"non-zero denominator"}, "malformed rational: zero denominator");
      Rational r(whole, den);
      return negative ? Rational(-r) : r;
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      const std::size_t frac_start = pos_;
      const BigInt frac = digits("digit");
      BigInt scale = 1;
      for (std::size_t i = frac_start; i < pos_; ++i) scale *= 10;
      Rational r = Rational(whole) + Rational(frac, scale);
      return negative ? Rational(-r) : r;
    }
    return negative ? Rational(-whole) : Rational(whole);
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    BigInt v = digits("integer");
    if (negative) v = -v;
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.'))
      fail({"integer"}, "expected an integer, found a fraction");
    if (v < lo || v > hi) fail_at(start, {"integer"}, "integer out of range");
    return v.convert_to<std::int64_t>();
  }

  int small_int() {
    return static_cast<int>(integer(std::numeric_limits<int>::min() / 2, std::numeric_limits<int>::max() / 2));
  }

  bool boolean() {
    const std::size_t start = (skip_ws(), pos_);
    const auto id = identifier();
    if (id == "true") return true;
    if (id == "false") return false;
    fail_at(start, {"true", "false"}, "expected a boolean");
  }

  void finish() {
    if (!at_end()) fail({"end of input"}, "trailing input " + describe_here());
  }

 private:
  BigInt digits(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail({what}, std::string("malformed rational: expected ") + what);
    if (pos_ - start > 4000) fail_at(start, {what}, "numeric literal too long");
    std::string_view lit = text_.substr(start, pos_ - start);
    // Boost reads a leading zero as an octal prefix.
    while (lit.size() > 1 && lit.front() == '0') lit.remove_prefix(1);
    return BigInt(std::string(lit));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Keyword argument list `key=value, ...` up to the closing parenthesis.
/// Handlers consume the value; unknown, duplicate and missing keys are errors.
void keyword_args(Cursor& c, const std::map<std::string, std::function<void(Cursor&)>, std::less<>>& handlers,
                  const std::set<std::string>& required, bool leading_comma) {
  std::vector<std::string> keys;
  for (const auto& [k, _] : handlers) keys.push_back(k + "=");
  std::set<std::string, std::less<>> seen;
  bool first = !leading_comma;
  while (true) {
    if (c.peek() == ')') break;
    if (!first) {
      std::vector<std::string> exp{",", ")"};
      if (!c.accept(',')) c.fail(exp, "unexpected " + c.describe_here());
    }
    first = false;
    const std::size_t at = (c.skip_ws(), c.pos());
    const auto key = c.expect_identifier(keys);
    const auto it = handlers.find(key);
    if (it == handlers.end()) c.fail_at(at, keys, "unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second) c.fail_at(at, keys, "duplicate key '" + std::string(key) + "'");
    c.expect('=');
    it->second(c);
  }
  for (const auto& r : required)
    if (!seen.contains(r)) c.fail({r + "="}, "missing key '" + r + "'");
  c.expect(')');
}

Piece3 parse_piece(Cursor& c) {
  const std::size_t at = (c.skip_ws(), c.pos());
  const auto tokens = to_strings(geometry3_tokens());
  const auto id = c.identifier();
  if (id.empty()) c.fail(tokens, "unexpected " + c.describe_here());
  const auto g = geometry3_from_string(id);
  if (!g) c.fail_at(at, tokens, "unknown geometry '" + std::string(id) + "'");
  if (*g == Geometry3Name::H3) {
    c.expect('(');
    const std::size_t key_at = (c.skip_ws(), c.pos());
    if (c.identifier() != "vol") c.fail_at(key_at, {"vol="}, "hyperbolic piece needs a volume");
    c.expect('=');
    const std::size_t vol_at = (c.skip_ws(), c.pos());
    const Rational v = c.rational();
    if (v <= 0) c.fail_at(vol_at, {"positive rational"}, "hyperbolic volume must be positive");
    c.expect(')');
    return Piece3::hyperbolic(v);
  }
  if (c.peek() == '(') c.fail({"#", ",", "]", "end of input"}, "volume on non-H3 piece");
  return Piece3(*g);
}

IrreducibleBlock3 parse_block(Cursor& c) {
  Cursor probe = c;
  if (probe.identifier() == "JSJ" && probe.peek() == '[') {
    c = probe;
    c.expect('[');
    IrreducibleBlock3 b;
    b.pieces.push_back(parse_piece(c));
    while (c.accept(',')) b.pieces.push_back(parse_piece(c));
    c.expect(']');
    return b;
  }
  return IrreducibleBlock3{{parse_piece(c)}};
}

Lattice2 parse_lattice(Cursor& c) {
  c.expect('(');
  const std::size_t at = (c.skip_ws(), c.pos());
  const auto id = c.identifier();
  Lattice2 l = Lattice2::sphere_product();
  if (id == "cp2") {
    c.expect('#');
    const auto k = c.integer(0, 1000);
    l = Lattice2::blown_up_plane(static_cast<int>(k));
  } else if (id != "s2xs2") {
    c.fail_at(at, {"cp2#", "s2xs2"}, "unknown lattice family");
  }
  c.expect(')');
  return l;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail({"rational"}, "empty input");
  const Rational r = c.rational();
  c.finish();
  return r;
}

Manifold3 parse_manifold3(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) {
    auto tokens = to_strings(geometry3_tokens());
    tokens.insert(tokens.begin(), "JSJ[");
    c.fail(tokens, "empty input");
  }
  Manifold3 m;
  m.blocks.push_back(parse_block(c));
  while (c.accept('#')) m.blocks.push_back(parse_block(c));
  if (!c.at_end()) c.fail({"#", "end of input"}, "unexpected " + c.describe_here());
  return m;
}

std::string render(const Piece3& p) {
  if (p.volume()) return "H3(vol=" + to_string(*p.volume()) + ")";
  return std::string(to_string(p.geometry()));
}

std::string render(const Manifold3& m) {
  std::string out;
  for (std::size_t i = 0; i < m.blocks.size(); ++i) {
    if (i) out += " # ";
    const auto& pieces = m.blocks[i].pieces;
    if (pieces.size() == 1) {
      out += render(pieces.front());
      continue;
    }
    out += "JSJ[";
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (j) out += ", ";
      out += render(pieces[j]);
    }
    out += "]";
  }
  return out;
}

Record4 parse_record4(std::string_view text) {
  Cursor c(text);
  const std::vector<std::string> kinds{"sympl4(", "lef(", "plurigenera["};
  if (c.at_end()) c.fail(kinds, "empty input");
  const std::size_t at = c.pos();
  const auto id = c.identifier();
  Record4 out;
  if (id == "sympl4") {
    SymplecticRecord4 r;
    c.expect('(');
    keyword_args(c,
                 {{"kw", [&](Cursor& cc) { r.k_dot_omega = cc.rational(); }},
                  {"k2", [&](Cursor& cc) { r.k_squared = cc.rational(); }},
                  {"minimal", [&](Cursor& cc) { r.minimal = cc.boolean(); }}},
                 {"kw", "k2", "minimal"}, false);
    out = r;
  } else if (id == "lef") {
    LefschetzRecord r;
    c.expect('(');
    keyword_args(c,
                 {{"g", [&](Cursor& cc) { r.g = cc.small_int(); }},
                  {"h", [&](Cursor& cc) { r.h = cc.small_int(); }},
                  {"n", [&](Cursor& cc) { r.n = cc.small_int(); }},
                  {"min", [&](Cursor& cc) { r.relatively_minimal = cc.boolean(); }}},
                 {"g", "h", "n"}, false);
    out = r;
  } else if (id == "plurigenera") {
    PlurigeneraSample p;
    c.expect('[');
    while (!c.accept(']')) {
      if (c.at_end()) c.fail({"(", "]"}, "unterminated plurigenera list");
      if (!p.samples.empty()) c.accept(',');
      c.expect('(');
      const auto l = c.integer(std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::max());
      c.expect(',');
      const auto v = c.integer(std::numeric_limits<std::int64_t>::min(), std::numeric_limits<std::int64_t>::max());
      c.expect(')');
      p.samples.emplace_back(l, v);
    }
    out = p;
  } else {
    c.fail_at(at, kinds, id.empty() ? "unexpected " + c.describe_here() : "unknown record '" + std::string(id) + "'");
  }
  c.finish();
  return out;
}

Geom4Input parse_geom4(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail({"geom4("}, "empty input");
  const std::size_t at = c.pos();
  if (c.identifier() != "geom4") c.fail_at(at, {"geom4("}, "expected a geom4 record");
  c.expect('(');
  const std::size_t name_at = (c.skip_ws(), c.pos());
  auto tokens = to_strings(geometry4_tokens());
  const auto id = c.identifier();
  Geom4Input in{Geometry4Name::CP2, false, std::nullopt};
  if (id == "Sol3xE") {
    in.name = Geometry4Name::Sol_mn;
    in.sol_product = true;
  } else if (const auto g = geometry4_from_string(id)) {
    in.name = *g;
  } else {
    c.fail_at(name_at, tokens, id.empty() ? "unexpected " + c.describe_here() : "unknown geometry '" + std::string(id) + "'");
  }
  keyword_args(c,
               {{"vol",
                 [&](Cursor& cc) {
                   const std::size_t v_at = (cc.skip_ws(), cc.pos());
                   in.volume = cc.rational();
                   if (*in.volume <= 0) cc.fail_at(v_at, {"positive rational"}, "volume must be positive");
                 }},
                {"product", [&](Cursor& cc) { in.sol_product = cc.boolean() || in.sol_product; }}},
               {}, true);
  c.finish();
  return in;
}

Product6Input parse_product6(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail({"product6("}, "empty input");
  const std::size_t at = c.pos();
  if (c.identifier() != "product6") c.fail_at(at, {"product6("}, "expected a product6 record");
  c.expect('(');
  Product6Input in;
  Cursor probe = c;
  const auto sym = [](Rational& dst) { return [&dst](Cursor& cc) { dst = cc.rational(); }; };
  const auto genus = [&in](Cursor& cc) { in.sigma.genus = static_cast<int>(cc.integer(0, 1'000'000)); };
  const auto area = [&in](Cursor& cc) {
    const std::size_t a_at = (cc.skip_ws(), cc.pos());
    in.sigma.area = cc.rational();
    if (in.sigma.area <= 0) cc.fail_at(a_at, {"positive rational"}, "area must be positive");
  };
  if (probe.identifier() == "lattice") {
    c = probe;
    in.lattice = parse_lattice(c);
    keyword_args(c,
                 {{"omega",
                   [&in](Cursor& cc) {
                     cc.expect('(');
                     in.omega.push_back(cc.rational());
                     while (cc.accept(',')) in.omega.push_back(cc.rational());
                     cc.expect(')');
                   }},
                  {"g", genus},
                  {"area", area}},
                 {"omega", "g", "area"}, true);
    c.finish();
    const Class2 k = canonical_class(*in.lattice);
    const Class2 w = omega_from_coefficients(*in.lattice, in.omega);
    in.k2 = pair(*in.lattice, k, k);
    in.kw = pair(*in.lattice, k, w);
    in.w2 = pair(*in.lattice, w, w);
    return in;
  }
  keyword_args(c, {{"k2", sym(in.k2)}, {"kw", sym(in.kw)}, {"w2", sym(in.w2)}, {"g", genus}, {"area", area}},
               {"k2", "kw", "w2", "g", "area"}, false);
  c.finish();
  return in;
}

Products6 parse_liruan(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail({"liruan("}, "empty input");
  const std::size_t at = c.pos();
  if (c.identifier() != "liruan") c.fail_at(at, {"liruan("}, "expected a liruan record");
  c.expect('(');
  Products6 p;
  keyword_args(c,
               {{"k3", [&](Cursor& cc) { p.k3 = cc.rational(); }},
                {"k2w", [&](Cursor& cc) { p.k2w = cc.rational(); }},
                {"kw2", [&](Cursor& cc) { p.kw2 = cc.rational(); }}},
               {"k3", "k2w", "kw2"}, false);
  c.finish();
  return p;
}

std::string render(const SymplecticRecord4& r) {
  return "sympl4(kw=" + to_string(r.k_dot_omega) + ", k2=" + to_string(r.k_squared) +
         ", minimal=" + (r.minimal ? "true" : "false") + ")";
}

std::string render(const LefschetzRecord& r) {
  return "lef(g=" + std::to_string(r.g) + ", h=" + std::to_string(r.h) + ", n=" + std::to_string(r.n) +
         ", min=" + (r.relatively_minimal ? "true" : "false") + ")";
}

std::string render(const PlurigeneraSample& p) {
  std::string out = "plurigenera[";
  for (std::size_t i = 0; i < p.samples.size(); ++i) {
    if (i) out += " ";
    out += "(" + std::to_string(p.samples[i].first) + "," + std::to_string(p.samples[i].second) + ")";
  }
  return out + "]";
}

}  // namespace kodim
