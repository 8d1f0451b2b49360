#pragma once

#include <string>

namespace chromapos {

// Hard size guards. The environment variable CHROMAPOS_MAX_VERTICES may lower
// (never raise) every vertex-count guard.
inline constexpr int kDegreeCap = 14;                 // basis conversions
inline constexpr int kCsfMaxVertices = 12;            // stable-partition census
inline constexpr int kColoringOracleMaxVertices = 9;  // exact coloring counts
inline constexpr int kNCSymMaxVertices = 8;           // Bell(8) transforms
inline constexpr int kTabloidMaxVertices = 10;        // tabloid Schur coefficients
inline constexpr int kInducedPatternMaxVertices = 8;  // induced-subgraph search
inline constexpr int kGraphMaxVertices = 63;          // adjacency bitmask width

inline constexpr int kPathClosedFormMax = 40;     // path_csf
inline constexpr int kCycleClosedFormMax = 12;    // cycle_csf
inline constexpr int kTadpoleCycleMax = 13;       // tadpole_csf, a
inline constexpr int kTadpoleTotalMax = 40;       // tadpole_csf, a + b
inline constexpr int kTwinnedTadpoleBMax = 34;    // twinned_tadpole4_csf / hb_csf
inline constexpr int kPathWithLeafMMax = 39;      // path_with_leaf_csf
inline constexpr int kForkClanKMax = 30;          // fork_clan_schur_closed_form

// min(default_guard, $CHROMAPOS_MAX_VERTICES); the env var never raises a guard.
int effective_vertex_guard(int default_guard);

// Throws TooLarge with a message naming the guard when actual > effective guard.
void check_vertex_guard(const std::string& op, const std::string& guard_name,
                        int default_guard, int actual);

// Non-vertex parameter guard (not env-adjustable).
void check_param_guard(const std::string& op, const std::string& guard_name,
                       long long guard, long long actual);

}  // namespace chromapos
