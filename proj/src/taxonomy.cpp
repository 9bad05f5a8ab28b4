#include "kodim/taxonomy.hpp"

#include "kodim/errors.hpp"

#include <array>
#include <utility>

namespace kodim {

namespace {

const KodairaDim kNegInf = KodairaDim::neg_infinity();
const KodairaDim kZero{0};
const KodairaDim kOne{1};
const KodairaDim kTwo{2};

const std::array<Geometry3, 8> kGeometries3 = {{
    {Geometry3Name::S3, kNegInf, Pi1Class::Finite, false},
    {Geometry3Name::S2xE, kNegInf, Pi1Class::VirtuallyCyclic, false},
    {Geometry3Name::E3, kZero, Pi1Class::VirtuallyAbelian, false},
    {Geometry3Name::Nil, kZero, Pi1Class::VirtuallyNilpotent, false},
    {Geometry3Name::Sol, kZero, Pi1Class::VirtuallySolvable, false},
    {Geometry3Name::H2xE, kOne, Pi1Class::InfIndexNormalCyclicNotSolvable, true},
    {Geometry3Name::SL2R, kOne, Pi1Class::InfIndexNormalCyclicNotSolvable, true},
    {Geometry3Name::H3, kOne, Pi1Class::Hyperbolic, true},
}};

using T = TriState;

// name, category, compact model, complex, Kahler, symplectic model, ||.|| > 0, note
const std::array<Geometry4, 19> kGeometries4 = {{
    {Geometry4Name::CP2, kNegInf, true, true, true, T::Yes, false, ""},
    {Geometry4Name::S4, kNegInf, true, false, false, T::No, false, ""},
    {Geometry4Name::S3xE, kNegInf, true, true, false, T::No, false, ""},
    {Geometry4Name::S2xS2, kNegInf, true, true, true, T::Yes, false, ""},
    {Geometry4Name::S2xE2, kNegInf, true, true, true, T::Yes, false, ""},
    {Geometry4Name::S2xH2, kNegInf, true, true, true, T::Yes, false, ""},
    {Geometry4Name::Sol0_4, kNegInf, true, true, false, T::No, false, ""},
    {Geometry4Name::Sol1_4, kNegInf, true, true, false, T::No, false,
     "carries two complex structures, Sol^4_1 and Sol'^4_1"},
    {Geometry4Name::E4, kZero, true, true, true, T::Yes, false, ""},
    {Geometry4Name::Nil4, kZero, true, false, false, T::Yes, false, ""},
    {Geometry4Name::Nil3xE, kZero, true, true, false, T::Yes, false, ""},
    {Geometry4Name::Sol_mn, kZero, true, false, false, T::Yes, false,
     "includes Sol^3 x E as the case m = n; the symplectic model is the m = n case"},
    {Geometry4Name::H2xE2, kOne, true, true, true, T::Yes, false, ""},
    {Geometry4Name::SL2RxE, kOne, true, true, false, T::Yes, false, ""},
    {Geometry4Name::H3xE, kOne, true, false, false, T::Yes, false, ""},
    {Geometry4Name::F4, kOne, false, true, true, T::No, false, "no compact model; finite-volume models only"},
    {Geometry4Name::H2C, kTwo, true, true, true, T::Yes, true, ""},
    {Geometry4Name::H2xH2, kTwo, true, true, true, T::Yes, true, ""},
    {Geometry4Name::H4, kTwo, true, false, false, T::ConjecturallyNo, true, ""},
}};

constexpr std::array<std::string_view, 8> kNames3 = {"S3", "S2xE", "E3", "Nil", "Sol", "H2xE", "SL2R", "H3"};

constexpr std::array<std::string_view, 19> kNames4 = {
    "CP2", "S4",     "S3xE",  "S2xS2",  "S2xE2", "S2xH2", "Sol0_4", "Sol1_4", "E4",   "Nil4",
    "Nil3xE", "Sol_mn", "H2xE2", "SL2RxE", "H3xE",  "F4",    "H2C",    "H2xH2",  "H4",
};

constexpr std::array<std::pair<std::string_view, Geometry3Name>, 9> kSynonyms3 = {{
    {"S2xR", Geometry3Name::S2xE},
    {"S2xS1", Geometry3Name::S2xE},
    {"R3", Geometry3Name::E3},
    {"H2xR", Geometry3Name::H2xE},
    {"H2xS1", Geometry3Name::H2xE},
    {"SL2", Geometry3Name::SL2R},
    {"PSL2R", Geometry3Name::SL2R},
    {"Nil3", Geometry3Name::Nil},
    {"Sol3", Geometry3Name::Sol},
}};

constexpr std::array<std::pair<std::string_view, Geometry4Name>, 10> kSynonyms4 = {{
    {"P2C", Geometry4Name::CP2},
    {"S3xR", Geometry4Name::S3xE},
    {"S2xR2", Geometry4Name::S2xE2},
    {"R4", Geometry4Name::E4},
    {"Sol4_mn", Geometry4Name::Sol_mn},
    {"H2xR2", Geometry4Name::H2xE2},
    {"SL2xE", Geometry4Name::SL2RxE},
    {"H3xR", Geometry4Name::H3xE},
    {"CH2", Geometry4Name::H2C},
    {"Sol1p_4", Geometry4Name::Sol1_4},
}};

}  // namespace

const Geometry3& geometry3_record(Geometry3Name name) { return kGeometries3.at(static_cast<std::size_t>(name)); }

const Geometry4& geometry4_record(Geometry4Name name) { return kGeometries4.at(static_cast<std::size_t>(name)); }

std::span<const Geometry3> geometries3() { return kGeometries3; }
std::span<const Geometry4> geometries4() { return kGeometries4; }

std::vector<GeometryRecord> list_geometries(int dimension) {
  std::vector<GeometryRecord> out;
  if (dimension == 3) {
    out.assign(kGeometries3.begin(), kGeometries3.end());
  } else if (dimension == 4) {
    out.assign(kGeometries4.begin(), kGeometries4.end());
  } else {
    throw PreconditionError("geometry tables exist for dimensions 3 and 4 only, got " + std::to_string(dimension));
  }
  return out;
}

std::string_view to_string(Geometry3Name g) { return kNames3.at(static_cast<std::size_t>(g)); }
std::string_view to_string(Geometry4Name g) { return kNames4.at(static_cast<std::size_t>(g)); }

std::string_view to_string(Pi1Class c) {
  switch (c) {
    case Pi1Class::Finite: return "Finite";
    case Pi1Class::VirtuallyCyclic: return "VirtuallyCyclic";
    case Pi1Class::VirtuallyAbelian: return "VirtuallyAbelian";
    case Pi1Class::VirtuallyNilpotent: return "VirtuallyNilpotent";
    case Pi1Class::VirtuallySolvable: return "VirtuallySolvable";
    case Pi1Class::InfIndexNormalCyclicNotSolvable: return "InfIndexNormalCyclicNotSolvable";
    case Pi1Class::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

std::string_view to_string(TriState t) {
  switch (t) {
    case TriState::Yes: return "yes";
    case TriState::No: return "no";
    case TriState::ConjecturallyNo: return "conjecturally_no";
  }
  return "?";
}

std::optional<Geometry3Name> geometry3_from_string(std::string_view token) {
  for (std::size_t i = 0; i < kNames3.size(); ++i)
    if (kNames3[i] == token) return static_cast<Geometry3Name>(i);
  for (const auto& [alt, g] : kSynonyms3)
    if (alt == token) return g;
  return std::nullopt;
}

std::optional<Geometry4Name> geometry4_from_string(std::string_view token) {
  for (std::size_t i = 0; i < kNames4.size(); ++i)
    if (kNames4[i] == token) return static_cast<Geometry4Name>(i);
  for (const auto& [alt, g] : kSynonyms4)
    if (alt == token) return g;
  return std::nullopt;
}

std::vector<std::string_view> geometry3_tokens() { return {kNames3.begin(), kNames3.end()}; }
std::vector<std::string_view> geometry4_tokens() { return {kNames4.begin(), kNames4.end()}; }

}  // namespace kodim
