#include "kodim/report.hpp"

#include "kodim/errors.hpp"
#include "kodim/parse.hpp"

namespace kodim {

Json to_json(KodairaDim k) {
  if (k.is_neg_infinity()) return "-inf";
  return k.value();
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const SymbolicNorm& n) {
  Json terms = Json::array();
  for (const auto& [mono, c] : n.terms()) {
    Json constants = Json::array();
    for (auto k : mono) constants.push_back(std::string(to_string(k)));
    terms.push_back({{"coefficient", to_json(c)}, {"constants", constants}});
  }
  Json approx = nullptr;
  if (const auto a = n.approximate()) approx = *a;
  return {{"kind", "symbolic"}, {"display", n.to_string()}, {"terms", terms}, {"approximate", approx}};
}

Json to_json(const NormValue& n) {
  if (const auto* s = std::get_if<SymbolicNorm>(&n)) return to_json(*s);
  return {{"kind", "nonzero_unquantified"}, {"display", to_string(n)}};
}

Json to_json(const Geometry3& g) {
  return {{"name", std::string(to_string(g.name))},
          {"category", to_json(g.category)},
          {"pi1_class", std::string(to_string(g.pi1_class))},
          {"admits_noncompact_finite_volume", g.admits_noncompact_finite_volume}};
}

Json to_json(const Geometry4& g) {
  Json j = {{"name", std::string(to_string(g.name))},
            {"category", to_json(g.category)},
            {"admits_compact_model", g.admits_compact_model},
            {"admits_compatible_complex", g.admits_compatible_complex},
            {"admits_compatible_kahler", g.admits_compatible_kahler},
            {"admits_symplectic_model", std::string(to_string(g.admits_symplectic_model))},
            {"gromov_nonzero", g.gromov_nonzero}};
  j["note"] = g.note.empty() ? Json(nullptr) : Json(std::string(g.note));
  return j;
}

Json to_json(const Geometry4Report& r) {
  Json j = to_json(r.record);
  j["sol_product"] = r.sol_product;
  j["notes"] = r.notes;
  return j;
}

Json to_json(const ShapeReport& r) {
  Json summands = Json::array();
  for (const auto& s : r.summands)
    summands.push_back({{"block", s.block},
                        {"geometry", std::string(to_string(s.geometry))},
                        {"shape", std::string(to_string(s.shape))},
                        {"clause", std::string(clause_label(s.shape))}});
  Json pieces = Json::array();
  for (const auto& p : r.category_one_pieces)
    pieces.push_back({{"block", p.block}, {"piece", p.piece}, {"geometry", std::string(to_string(p.geometry))}});
  return {{"kappa_t", to_json(r.kappa)},
          {"classified", r.classified()},
          {"summands", summands},
          {"category_one_pieces", pieces}};
}

Json to_json(const Products6& p) { return {{"k3", to_json(p.k3)}, {"k2w", to_json(p.k2w)}, {"kw2", to_json(p.kw2)}}; }

Json to_json(const Kappa6& k) {
  if (const auto* d = std::get_if<KodairaDim>(&k)) return to_json(*d);
  return "ill_formed";
}

Json to_json(const KappaH& k) {
  if (const auto* d = std::get_if<KodairaDim>(&k)) return to_json(*d);
  return "unclassified";
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return rows;
}

Json taxonomy_json(int dimension) {
  Json out = Json::array();
  for (const auto& rec : list_geometries(dimension))
    std::visit([&](const auto& g) { out.push_back(to_json(g)); }, rec);
  return out;
}

// --- decoding ----------------------------------------------------------------

namespace {

[[noreturn]] void bad(const std::string& what) { throw PreconditionError("malformed input document: " + what); }

std::int64_t as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field + " must be an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    bad(field + " out of range");
  return j.get<std::int64_t>();
}

std::optional<std::int64_t> opt_int(const Json& j, const char* field) {
  if (!j.contains(field) || j.at(field).is_null()) return std::nullopt;
  return as_int(j.at(field), field);
}

}  // namespace

KodairaDim kodaira_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return KodairaDim::neg_infinity();
    bad("Kodaira dimension must be \"-inf\" or a non-negative integer, got \"" + s + "\"");
  }
  const auto v = as_int(j, "Kodaira dimension");
  if (v < 0 || v > 1000) bad("Kodaira dimension must be \"-inf\" or a non-negative integer");
  return KodairaDim(static_cast<int>(v));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(as_int(j, "rational"));
  if (!j.is_string()) bad("rational must be an integer or a string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    bad("rational: " + std::string(e.what()));
  }
}

NormValue norm_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (as_int(j, "norm") != 0) bad("a numeric Gromov norm must be 0; use terms");
    return SymbolicNorm::zero();
  }
  if (j.is_string()) {
    if (j.get<std::string>() == "nonzero_unquantified") return NonzeroUnquantified{};
    if (j.get<std::string>() == "0") return SymbolicNorm::zero();
    bad("unknown norm string");
  }
  if (!j.is_object()) bad("Gromov norm must be 0, \"nonzero_unquantified\" or an object");
  if (j.contains("kind") && j.at("kind") == "nonzero_unquantified") return NonzeroUnquantified{};
  if (!j.contains("terms") || !j.at("terms").is_array()) bad("Gromov norm object needs a terms array");
  SymbolicNorm n;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coefficient")) bad("norm term needs a coefficient");
    const Rational c = rational_from_json(t.at("coefficient"));
    SymbolicNorm term = SymbolicNorm::term(c, NormConstant::One);
    if (t.contains("constants")) {
      if (!t.at("constants").is_array()) bad("norm constants must be an array");
      for (const auto& k : t.at("constants")) {
        if (!k.is_string()) bad("norm constant must be a string");
        const auto nc = norm_constant_from_string(k.get<std::string>());
        if (!nc) bad("unknown norm constant " + k.get<std::string>());
        term = term.times(SymbolicNorm::term(1, *nc));
      }
    }
    n += term;
  }
  return n;
}

InvariantProfile profile_from_json(const Json& j) {
  if (!j.is_object()) bad("profile must be an object");
  static const std::vector<std::string> known{"dimension", "manifold", "kappa_t",  "kappa_h",  "gromov_norm",
                                              "betti",     "b2_plus",  "b2_minus", "hJ_plus", "hJ_minus"};
  for (const auto& [k, _] : j.items())
    if (std::find(known.begin(), known.end(), k) == known.end()) bad("unknown profile field " + k);
  InvariantProfile p;
  if (j.contains("dimension")) {
    const auto d = as_int(j.at("dimension"), "dimension");
    if (d != 3 && d != 4) bad("dimension must be 3 or 4");
    p.dimension = static_cast<int>(d);
  }
  if (j.contains("kappa_t") && !j.at("kappa_t").is_null()) p.kappa_t = kodaira_from_json(j.at("kappa_t"));
  if (j.contains("kappa_h") && !j.at("kappa_h").is_null()) p.kappa_h = kodaira_from_json(j.at("kappa_h"));
  if (j.contains("gromov_norm") && !j.at("gromov_norm").is_null()) p.gromov_norm = norm_from_json(j.at("gromov_norm"));
  if (j.contains("betti") && !j.at("betti").is_null()) {
    if (!j.at("betti").is_array()) bad("betti must be an array");
    std::vector<std::int64_t> b;
    for (const auto& x : j.at("betti")) b.push_back(as_int(x, "betti"));
    p.betti = b;
  }
  p.b2_plus = opt_int(j, "b2_plus");
  p.b2_minus = opt_int(j, "b2_minus");
  p.hj_plus = opt_int(j, "hJ_plus");
  p.hj_minus = opt_int(j, "hJ_minus");
  if (j.contains("manifold")) {
    if (!j.at("manifold").is_string()) bad("manifold must be a description string");
    if (p.dimension != 3) bad("manifold descriptions are 3-dimensional");
    const Manifold3 m = parse_manifold3(j.at("manifold").get<std::string>());
    require_valid(m);
    if (!p.kappa_t) p.kappa_t = kappa_t(m);
    if (!p.gromov_norm) p.gromov_norm = gromov_norm_3(m);
  }
  validate_profile(p);
  return p;
}

MapClaim claim_from_json(const Json& j) {
  if (!j.is_object()) bad("claim must be an object");
  if (!j.contains("source") || !j.contains("target")) bad("claim needs source and target");
  MapClaim c;
  c.source = profile_from_json(j.at("source"));
  c.target = profile_from_json(j.at("target"));
  if (j.contains("degree")) c.degree = as_int(j.at("degree"), "degree");
  if (c.degree == 0) bad("degree must be non-zero");
  if (j.contains("category")) {
    if (!j.at("category").is_string()) bad("category must be a string");
    const auto s = j.at("category").get<std::string>();
    if (s == "continuous") c.category = MapCategory::Continuous;
    else if (s == "holomorphic") c.category = MapCategory::Holomorphic;
    else if (s == "jj_holomorphic") c.category = MapCategory::JJprimeHolomorphic;
    else bad("unknown map category " + s);
  }
  if (c.source.dimension != c.target.dimension) throw PreconditionError("dimension mismatch");
  return c;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<std::int64_t> row;
    for (const auto& x : r) row.push_back(as_int(x, "matrix entry"));
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

HomologyEndo endo_from_json(const Json& j) {
  const Json* list = &j;
  if (j.is_object()) {
    if (!j.contains("matrices")) bad("expected a matrices field");
    list = &j.at("matrices");
  }
  if (!list->is_array()) bad("matrices must be an array");
  HomologyEndo e;
  for (const auto& m : *list) e.matrices.push_back(matrix_from_json(m));
  return e;
}

}  // namespace kodim
