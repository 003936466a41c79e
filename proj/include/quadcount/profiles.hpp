#pragma once

#include <array>
#include <cstdint>

namespace quadcount {

// The 11 isomorphism classes of graphs on 4 vertices, in the canonical
// order used by every 11-vector in this library (profiles, sampling
// matrices, edge-share maxima).
enum class QuadType : std::uint8_t {
  empty4 = 0,   // no edges
  one_edge,     // one edge, two isolated vertices
  matching,     // two disjoint edges
  wedge,        // 2-path plus an isolated vertex
  path4,        // 3-path
  triangle4,    // triangle plus an isolated vertex
  claw,         // star K_{1,3}
  cycle4,       // 4-cycle
  paw,          // triangle with a pendant edge
  diamond,      // K4 minus one edge
  clique4,      // K4
};

inline constexpr int kQuadTypes = 11;

// The 20 vertex orbits of the 11 quad types, grouped by type. Within a
// type, orbits are distinguished by vertex degree alone (the paw is the
// only type with three distinct degrees).
enum class Orbit : std::uint8_t {
  empty4 = 0,
  edge_end,      // on the single edge
  edge_iso,      // isolated beside the single edge
  matching,
  wedge_end,
  wedge_mid,
  wedge_iso,
  path_end,
  path_mid,
  tri_on,        // on the triangle
  tri_iso,       // isolated beside the triangle
  claw_leaf,
  claw_hub,
  cycle4,
  paw_pendant,   // degree 1
  paw_hub,       // degree 3
  paw_tri,       // degree 2, on the triangle
  diamond_deg2,
  diamond_deg3,
  clique4,
};

inline constexpr int kOrbits = 20;

using Local3Profile = std::array<std::uint64_t, 6>;    // H0,H1e,H1d,H2c,H2e,H3
using Global3Profile = std::array<std::uint64_t, 4>;   // n0..n3
using Local4Orbits = std::array<std::uint64_t, kOrbits>;
using Local4Profile = std::array<std::uint64_t, kQuadTypes>;
using GlobalProfile = std::array<std::uint64_t, kQuadTypes>;

constexpr QuadType orbit_type(Orbit o) {
  constexpr QuadType table[kOrbits] = {
      QuadType::empty4,
      QuadType::one_edge,  QuadType::one_edge,
      QuadType::matching,
      QuadType::wedge,     QuadType::wedge,     QuadType::wedge,
      QuadType::path4,     QuadType::path4,
      QuadType::triangle4, QuadType::triangle4,
      QuadType::claw,      QuadType::claw,
      QuadType::cycle4,
      QuadType::paw,       QuadType::paw,       QuadType::paw,
      QuadType::diamond,   QuadType::diamond,
      QuadType::clique4,
  };
  return table[(int)o];
}

constexpr const char* orbit_name(Orbit o) {
  constexpr const char* names[kOrbits] = {
      "empty",        "edge_end",     "edge_iso",    "matching",
      "wedge_end",    "wedge_mid",    "wedge_iso",   "path_end",
      "path_mid",     "tri_on",       "tri_iso",     "claw_leaf",
      "claw_hub",     "cycle",        "paw_pendant", "paw_hub",
      "paw_tri",      "diamond_deg2", "diamond_deg3", "clique",
  };
  return names[(int)o];
}

constexpr const char* quad_type_name(QuadType t) {
  constexpr const char* names[kQuadTypes] = {
      "empty",  "one_edge", "matching", "wedge", "path",   "triangle",
      "claw",   "cycle",    "paw",      "diamond", "clique",
  };
  return names[(int)t];
}

// Collapse orbit roles into the per-type local 4-profile.
constexpr Local4Profile profile_from_orbits(const Local4Orbits& o) {
  Local4Profile p{};
  for (int i = 0; i < kOrbits; ++i) p[(int)orbit_type((Orbit)i)] += o[i];
  return p;
}

}  // namespace quadcount
