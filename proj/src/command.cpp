#include "kodim/command.hpp"

#include "kodim/errors.hpp"
#include "kodim/parse.hpp"
#include "kodim/report.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace kodim {

namespace {

constexpr std::array<std::string_view, 10> kVerbs = {"kappa3",  "kappa4",           "kappa6",  "gromov",   "table",
                                                      "check-domination", "entropy", "product6", "shape", "validate"};

struct Outcome {
  Json result;
  std::string text;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(15) << v;
  return os.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool starts_with_word(std::string_view s, std::string_view word) {
  const auto t = trim(s);
  return t.rfind(word, 0) == 0;
}

Rational tolerance_of(const Command& c, const Rational& fallback) {
  if (!c.tolerance) return fallback;
  Rational t;
  try {
    t = parse_rational(*c.tolerance);
  } catch (const ParseError& e) {
    throw ParseError(e.offset(), e.expected(), "in --tolerance: " + e.detail());
  }
  if (t <= 0) throw PreconditionError("tolerance must be positive");
  return t;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw ParseError(at, {"JSON document"}, "malformed JSON");
  }
}

Manifold3 valid_manifold(const std::string& input) {
  Manifold3 m = parse_manifold3(input);
  require_valid(m);
  return m;
}

Outcome do_kappa3(const Command& c) {
  const Manifold3 m = valid_manifold(c.input);
  const KodairaDim k = kappa_t(m);
  return {{{"kappa_t", to_json(k)}, {"canonical", render(m)}}, "kappa_t = " + k.to_string(), {}};
}

Outcome do_kappa4(const Command& c) {
  if (starts_with_word(c.input, "geom4")) {
    const Geom4Input in = parse_geom4(c.input);
    if (in.volume) throw PreconditionError("a volume is not used by kappa4");
    const Geometry4Report r = geometry4_query(in.name, in.sol_product);
    std::string text = std::string(to_string(r.record.name)) + ": category " + r.record.category.to_string();
    for (const auto& n : r.notes) text += "\n  " + n;
    return {{{"kind", "geometry"}, {"category", to_json(r.record.category)}, {"geometry", to_json(r)}}, text, {}};
  }
  const Record4 rec = parse_record4(c.input);
  if (const auto* s = std::get_if<SymplecticRecord4>(&rec)) {
    const KodairaDim k = kappa_s_4(*s);
    return {{{"kind", "symplectic"}, {"canonical", render(*s)}, {"kappa_s", to_json(k)}}, "kappa_s = " + k.to_string(), {}};
  }
  if (const auto* l = std::get_if<LefschetzRecord>(&rec)) {
    const KodairaDim k = kappa_l(*l);
    return {{{"kind", "lefschetz"}, {"canonical", render(*l)}, {"kappa_l", to_json(k)}}, "kappa_l = " + k.to_string(), {}};
  }
  const auto& p = std::get<PlurigeneraSample>(rec);
  const Rational tol = tolerance_of(c, Rational(1, 20));
  const KappaH k = kappa_h_classify(p, tol);
  Outcome o{{{"kind", "plurigenera"}, {"canonical", render(p)}, {"kappa_h", to_json(k)}, {"tolerance", to_json(tol)}},
            "kappa_h = " + to_string(k),
            {}};
  if (const auto fit = fit_plurigenera_growth(p)) {
    o.result["fit"] = {{"slope", fit->slope}, {"exponent", fit->exponent}, {"residual", fit->residual}};
    o.text += "\n  fit: slope " + fmt(fit->slope) + ", exponent " + std::to_string(fit->exponent) + ", residual " +
              fmt(fit->residual);
  }
  if (std::holds_alternative<Unclassified>(k)) o.warnings.push_back("plurigenera growth does not fit c * l^k within tolerance");
  return o;
}

Outcome do_kappa6(const Command& c) {
  Products6 p;
  Json input;
  if (starts_with_word(c.input, "liruan")) {
    p = parse_liruan(c.input);
  } else {
    const Product6Input in = parse_product6(c.input);
    p = product6_intersections(in.k2, in.kw, in.w2, in.sigma);
  }
  const Kappa6 k = li_ruan_kappa6(p);
  Outcome o{{{"products", to_json(p)}, {"kappa6", to_json(k)}}, "kappa6 = " + to_string(k), {}};
  if (std::holds_alternative<IllFormed>(k)) o.warnings.push_back("sign pattern (0, 0, >0) is not realised by a minimal symplectic 6-manifold");
  return o;
}

Outcome do_product6(const Command& c) {
  const Product6Input in = parse_product6(c.input);
  const Products6 p = product6_intersections(in.k2, in.kw, in.w2, in.sigma);
  const Kappa6 k = li_ruan_kappa6(p);
  Outcome o;
  o.result = {{"k2", to_json(in.k2)}, {"kw", to_json(in.kw)}, {"w2", to_json(in.w2)},
              {"genus", in.sigma.genus}, {"area", to_json(in.sigma.area)}, {"products", to_json(p)},
              {"kappa6", to_json(k)}};
  o.text = "K^3 = " + to_string(p.k3) + "\nK^2.[w] = " + to_string(p.k2w) + "\nK.[w]^2 = " + to_string(p.kw2) +
           "\nkappa6 = " + to_string(k);
  if (in.lattice) {
    o.result["lattice"] = in.lattice->name();
    try {
      const NegativityVerdict v = rational_ruled_negativity_check(*in.lattice, in.omega, in.sigma);
      o.result["negativity"] = {{"pass", v.pass}, {"inequality_holds", v.inequality_holds}};
      o.text += std::string("\nnegativity check: ") + (v.pass ? "pass" : "FAIL");
      if (!v.pass) o.exit_code = 1;
    } catch (const PreconditionError& e) {
      o.warnings.push_back(std::string("negativity check skipped: ") + e.what());
    }
  }
  return o;
}

Outcome do_gromov(const Command& c) {
  const int dim = c.dim.value_or(starts_with_word(c.input, "geom4") ? 4 : 3);
  if (dim == 3) {
    const Manifold3 m = valid_manifold(c.input);
    const SymbolicNorm n = gromov_norm_3(m);
    Outcome o{{{"dimension", 3}, {"norm", to_json(n)}}, n.to_string(), {}};
    if (const auto a = n.approximate(); a && !n.is_zero()) o.text += "  (~ " + fmt(*a) + ")";
    return o;
  }
  if (dim != 4) throw PreconditionError("--dim must be 3 or 4");
  const Geom4Input in = parse_geom4(c.input);
  if (in.sol_product) (void)geometry4_query(in.name, true);
  const NormValue n = gromov_norm_4_geometric(in.name, in.volume);
  Outcome o{{{"dimension", 4}, {"norm", to_json(n)}}, to_string(n), {}};
  if (const auto* s = std::get_if<SymbolicNorm>(&n)) {
    if (!s->is_zero()) {
      if (const auto a = s->approximate()) o.text += "  (~ " + fmt(*a) + ")";
      else o.warnings.push_back("no decimal value is known for v4");
    }
  }
  return o;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

Outcome do_table(const Command& c) {
  if (!trim(c.input).empty()) throw PreconditionError("table takes no input");
  const int dim = c.dim.value_or(3);
  Outcome o;
  o.result = taxonomy_json(dim);
  std::ostringstream os;
  if (dim == 3) {
    os << std::left << std::setw(8) << "name" << std::setw(10) << "category" << std::setw(34) << "pi1_class"
       << "noncompact_finite_volume";
    for (const auto& g : geometries3())
      os << '\n'
         << std::setw(8) << to_string(g.name) << std::setw(10) << g.category.to_string() << std::setw(34)
         << to_string(g.pi1_class) << yn(g.admits_noncompact_finite_volume);
  } else {
    os << std::left << std::setw(8) << "name" << std::setw(10) << "category" << std::setw(9) << "compact"
       << std::setw(9) << "complex" << std::setw(8) << "kahler" << std::setw(18) << "symplectic" << "gromov";
    for (const auto& g : geometries4())
      os << '\n'
         << std::setw(8) << to_string(g.name) << std::setw(10) << g.category.to_string() << std::setw(9)
         << yn(g.admits_compact_model) << std::setw(9) << yn(g.admits_compatible_complex) << std::setw(8)
         << yn(g.admits_compatible_kahler) << std::setw(18) << to_string(g.admits_symplectic_model)
         << (g.gromov_nonzero ? "nonzero" : "0");
  }
  o.text = os.str();
  return o;
}

Outcome do_check_domination(const Command& c) {
  const MapClaim claim = claim_from_json(parse_json(c.input));
  const auto violations = domination_obstructions(claim);
  Outcome o;
  Json list = Json::array();
  std::string text;
  for (const auto& v : violations) {
    list.push_back({{"obstruction", std::string(1, obstruction_letter(v.kind))},
                    {"kind", std::string(to_string(v.kind))},
                    {"detail", v.detail}});
    text += std::string(text.empty() ? "" : "\n") + "(" + obstruction_letter(v.kind) + ") " + v.detail;
  }
  o.result = {{"consistent", violations.empty()}, {"violations", list}};
  o.text = violations.empty() ? "consistent: no obstruction applies" : text;
  return o;
}

Outcome do_entropy(const Command& c) {
  const HomologyEndo e = endo_from_json(parse_json(c.input));
  const double tol = to_double(tolerance_of(c, Rational(1, 1'000'000'000)));
  const double lambda = max_spectral_radius(e, tol);
  const double s = shub_entropy(e, tol);
  Json radii = Json::array();
  for (const auto& m : e.matrices) radii.push_back(static_cast<double>(max_spectral_radius(HomologyEndo{{m}}, tol)));
  Outcome o{{{"entropy", s}, {"lambda", lambda}, {"spectral_radii", radii}}, "S = " + fmt(s) + "  (lambda = " + fmt(lambda) + ")", {}};
  return o;
}

Outcome do_shape(const Command& c) {
  const Manifold3 m = valid_manifold(c.input);
  const ShapeReport r = classify_shape(m);
  std::string text = "kappa_t = " + r.kappa.to_string();
  for (const auto& s : r.summands)
    text += "\n  summand " + std::to_string(s.block) + ": " + std::string(to_string(s.geometry)) + " -> clause " +
            std::string(clause_label(s.shape)) + " " + std::string(to_string(s.shape));
  if (!r.classified())
    text += "\n  kappa_t = 1: no finite list; " + std::to_string(r.category_one_pieces.size()) + " category-1 piece(s)";
  return {to_json(r), text, {}};
}

Outcome do_validate(const Command& c) {
  const Manifold3 m = parse_manifold3(c.input);
  const auto violations = validate(m);
  Outcome o;
  Json list = Json::array();
  std::string text;
  for (const auto& v : violations) {
    list.push_back({{"block", v.block}, {"message", v.message}});
    text += std::string(text.empty() ? "" : "\n") + "block " + std::to_string(v.block) + ": " + v.message;
  }
  o.result = {{"valid", violations.empty()}, {"violations", list}};
  o.text = violations.empty() ? "valid" : text;
  if (!violations.empty()) o.exit_code = 1;
  return o;
}

Outcome dispatch(const Command& c) {
  switch (c.verb) {
    case Verb::Kappa3: return do_kappa3(c);
    case Verb::Kappa4: return do_kappa4(c);
    case Verb::Kappa6: return do_kappa6(c);
    case Verb::Gromov: return do_gromov(c);
    case Verb::Table: return do_table(c);
    case Verb::CheckDomination: return do_check_domination(c);
    case Verb::Entropy: return do_entropy(c);
    case Verb::Product6: return do_product6(c);
    case Verb::Shape: return do_shape(c);
    case Verb::Validate: return do_validate(c);
  }
  throw PreconditionError("unknown verb");
}

std::string caret(const std::string& input, std::size_t offset) {
  if (input.find('\n') != std::string::npos || input.size() > 200) return {};
  return "  " + input + "\n  " + std::string(std::min(offset, input.size()), ' ') + "^\n";
}

}  // namespace

std::string_view to_string(Verb v) { return kVerbs.at(static_cast<std::size_t>(v)); }

std::optional<Verb> verb_from_string(std::string_view s) {
  for (std::size_t i = 0; i < kVerbs.size(); ++i)
    if (kVerbs[i] == s) return static_cast<Verb>(i);
  return std::nullopt;
}

std::optional<OutputFormat> format_from_string(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  return std::nullopt;
}

RunResult run(const Command& c) {
  RunResult r;
  try {
    Outcome o = dispatch(c);
    r.exit_code = o.exit_code;
    if (c.format == OutputFormat::Json) {
      Json doc = {{"verb", std::string(to_string(c.verb))}, {"input", c.input}, {"result", o.result},
                  {"warnings", o.warnings}};
      r.out = doc.dump(2) + "\n";
    } else {
      r.out = o.text + "\n";
      for (const auto& w : o.warnings) r.err += "warning: " + w + "\n";
    }
  } catch (const ParseError& e) {
    r.exit_code = 2;
    r.err = std::string("error: ") + e.what() + "\n";
    if (e.detail().rfind("in --tolerance", 0) != 0) r.err += caret(c.input, e.offset());
  } catch (const Error& e) {
    r.exit_code = 1;
    r.err = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

}  // namespace kodim
