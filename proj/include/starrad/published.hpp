#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "radii.hpp"
#include "regions.hpp"

namespace starrad {

/// Radii as published (four-decimal approximations) with annotations for the
/// printed formulas that do not match their own defining equations.
namespace published {

inline constexpr std::string_view kManifestVersion = "1";

struct Entry {
  ClassId cls;
  RegionKind kind;
  double value;
  std::string_view typo;  // empty unless the published value is known to be misprinted
};

// clang-format off
inline constexpr std::array<Entry, 30> kRadii = {{
    {ClassId::G1, RegionKind::Lemniscate,        0.0687, ""},
    {ClassId::G1, RegionKind::Parabolic,         0.0827, ""},
    {ClassId::G1, RegionKind::Exponential,       0.1042, ""},
    {ClassId::G1, RegionKind::Cardioid,          0.1097, ""},
    {ClassId::G1, RegionKind::Sine,              0.1375, ""},
    {ClassId::G1, RegionKind::Lune,              0.0967, ""},
    {ClassId::G1, RegionKind::Rational,          0.0285, ""},
    {ClassId::G1, RegionKind::ReverseLemniscate, 0.0475,
     "printed quartic (36+2eta)r^2-eta r^2-eta is garbled; read as eta r^4-(36+2eta)r^2+eta=0, whose root matches"},
    {ClassId::G1, RegionKind::Nephroid,          0.1097, ""},
    {ClassId::G1, RegionKind::Sigmoid,           0.0766, ""},
    {ClassId::G2, RegionKind::Lemniscate,        0.0809, ""},
    {ClassId::G2, RegionKind::Parabolic,         0.0972, ""},
    {ClassId::G2, RegionKind::Exponential,       0.1213, ""},
    {ClassId::G2, RegionKind::Cardioid,          0.1279, ""},
    {ClassId::G2, RegionKind::Sine,              0.1589, ""},
    {ClassId::G2, RegionKind::Lune,              0.1131, ""},
    {ClassId::G2, RegionKind::Rational,          0.0340, ""},
    {ClassId::G2, RegionKind::ReverseLemniscate, 0.0567,
     "printed quartic has -2eta r^2; expanding b2(r)^2 = eta(1-r^2)^2 gives +2eta and root 0.056368"},
    {ClassId::G2, RegionKind::Nephroid,          0.1278, ""},
    {ClassId::G2, RegionKind::Sigmoid,           0.0901, ""},
    {ClassId::G3, RegionKind::Lemniscate,        0.1025, ""},
    {ClassId::G3, RegionKind::Parabolic,         0.1231, ""},
    {ClassId::G3, RegionKind::Exponential,       0.1543, ""},
    {ClassId::G3, RegionKind::Cardioid,          0.1623, ""},
    {ClassId::G3, RegionKind::Sine,              0.2018, ""},
    {ClassId::G3, RegionKind::Lune,              0.1434, ""},
    {ClassId::G3, RegionKind::Rational,          0.0428, ""},
    {ClassId::G3, RegionKind::ReverseLemniscate, 0.0711, ""},
    {ClassId::G3, RegionKind::Nephroid,          0.1622, ""},
    {ClassId::G3, RegionKind::Sigmoid,           0.1140, ""},
}};
// clang-format on

/// Conjectured sharp radii for the G2 pairs where only a lower bound is proven.
struct Conjecture {
  RegionKind kind;
  double value;
};

inline constexpr std::array<Conjecture, 5> kG2Conjectures = {{
    {RegionKind::Parabolic, 0.1010},
    {RegionKind::Exponential, 0.1276},
    {RegionKind::Cardioid, 0.1345},
    {RegionKind::Lune, 0.1183},
    {RegionKind::Rational, 0.0345},
}};

inline constexpr std::string_view kAlphaTypo =
    "printed discriminant 25-4a+a^2; the root of a r^2-5r+(1-a)=0 needs 25-4a+4a^2 (agrees at a=0)";

struct Lookup {
  double value;
  std::string_view typo;
};

/// Published radius for (cls, region). Half-plane rows evaluate the printed
/// order-alpha formulas.
inline std::optional<Lookup> lookup(ClassId cls, const Region& region) {
  if (region.kind == RegionKind::StarlikeHalfPlane) {
    const double a = region.alpha;
    switch (cls) {
      case ClassId::G1: return Lookup{(1.0 - a) / (3.0 + std::sqrt(10.0 - 2.0 * a + a * a)), ""};
      case ClassId::G2:
        return Lookup{2.0 * (1.0 - a) / (5.0 + std::sqrt(25.0 - 4.0 * a + a * a)),
                      a == 0.0 ? std::string_view{} : kAlphaTypo};
      case ClassId::G3: return Lookup{(1.0 - a) / (2.0 + std::sqrt(5.0 - 2.0 * a + a * a)), ""};
    }
  }
  for (const Entry& e : kRadii) {
    if (e.cls == cls && e.kind == region.kind) return Lookup{e.value, e.typo};
  }
  return std::nullopt;
}

inline std::optional<double> g2_conjecture(RegionKind kind) {
  for (const Conjecture& c : kG2Conjectures) {
    if (c.kind == kind) return c.value;
  }
  return std::nullopt;
}

/// Agreement threshold for comparisons against the four-decimal values.
inline constexpr double kCompareTolerance = 5e-4;

}  // namespace published
}  // namespace starrad
