#pragma once

// Brute-force verifiers.  Everything here recomputes results from the group
// action alone (rootdata/affine primitives, generator closures, interval
// searches) and deliberately avoids the closed-form code paths it is used to
// check.

#include <set>

#include "alcove/tilting.hpp"

namespace alcove {

// closure of {lambda} under the W_{I,p} generator moves (simple I-reflections
// and +-p alpha_i translations, dot action), pruned to the coordinate box
// |coord| <= box_radius.  BoundExceeded only if the visited set blows past
// the global cap.
std::set<Weight> brute_orbit(const Weight& lambda, const LeviDatum& L, long long box_radius);

// |W_I . (lambda + pX)| by generator closure on residue vectors mod p,
// computed directly from the Cartan matrix
long long brute_coset_orbit_count(const Weight& lambda, const LeviDatum& L);

// decide mu uparrow lambda by forward closure of ascending single-reflection
// steps; every chain stays inside the root-coordinate interval [mu, lambda]
bool brute_uparrow(const RootSystem& rs, const Weight& mu, const Weight& lambda, long long p);

// classical indecomposable tilting characters for A1, I = {}: T(nu) =
// [Zbar(nu)] + [Zbar(nu')] with nu' the reflection of nu across the floor of
// its alcove (tilting = projective plus reciprocity), for all regular nu
// with |<nu+rho,alpha-vee>| <= c_radius
TiltingTable brute_sl2_tilting_table(const RootSystem& rs, long long p, long long c_radius);

// all weights with every fundamental coordinate in [-radius, radius]
std::vector<Weight> box_weights(const RootSystem& rs, long long radius);

} // namespace alcove
