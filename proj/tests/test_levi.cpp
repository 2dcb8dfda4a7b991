#include "doctest.h"

#include <memory>

#include "alcove/levi.hpp"
#include "alcove/oracle.hpp"

using namespace alcove;

namespace {

Weight wt(std::vector<long long> c) { return weight_from_ll(std::move(c)); }

LeviDatum levi(const char* spec, std::vector<int> I, long long p) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system(spec));
  return make_levi(rs, std::move(I), p);
}

} // namespace

TEST_SUITE("Levi orbits") {

TEST_CASE("Levi data sizes") {
  CHECK(levi("A1", {}, 5).order_WI == 1);
  CHECK(levi("A1", {0}, 5).order_WI == 2);
  CHECK(levi("A2", {0, 1}, 5).order_WI == 6);
  CHECK(levi("B2", {0, 1}, 7).order_WI == 8);
  CHECK(levi("G2", {0, 1}, 7).order_WI == 12);
  CHECK(levi("A2", {0}, 5).phi_I.size() == 1);
  CHECK(levi("A2", {0, 1}, 5).phi_I.size() == 3);
  CHECK(levi("B2", {0}, 7).phi_I.size() == 1);
  CHECK_THROWS_AS(levi("A2", {2}, 5), calc_error);  // index out of range
  CHECK_THROWS_AS(levi("A2", {-1}, 5), calc_error);
}

TEST_CASE("membership in the Levi affine subgroup") {
  LeviDatum full = levi("A1", {0}, 5);
  CHECK(in_WIp(*full.rs, reflection_elt(*full.rs, 0, 1, 5), full));
  CHECK(in_WIp(*full.rs, identity_elt(*full.rs, 5), full));

  LeviDatum empty = levi("A1", {}, 5);
  CHECK_FALSE(in_WIp(*empty.rs, reflection_elt(*empty.rs, 0, 1, 5), empty));
  CHECK(in_WIp(*empty.rs, identity_elt(*empty.rs, 5), empty));

  LeviDatum a2 = levi("A2", {0}, 5);
  int alpha2 = a2.rs->simple_root_index[1];
  CHECK_FALSE(in_WIp(*a2.rs, reflection_elt(*a2.rs, alpha2, 0, 5), a2));
  int alpha1 = a2.rs->simple_root_index[0];
  CHECK(in_WIp(*a2.rs, reflection_elt(*a2.rs, alpha1, 2, 5), a2));
  // translation by p*alpha2 has trivial finite part but leaves the I-span
  CHECK_FALSE(in_WIp(*a2.rs, translation_elt(*a2.rs, {Int(0), Int(1)}, 5), a2));
  CHECK(in_WIp(*a2.rs, translation_elt(*a2.rs, {Int(3), Int(0)}, 5), a2));
}

TEST_CASE("orbit representatives live in the Levi fundamental domain") {
  LeviDatum L = levi("A1", {0}, 5);
  CHECK(orbit_rep(wt({8}), L).rep == wt({0}));
  CHECK(orbit_rep(wt({-1}), L).rep == wt({-1}));
  CHECK(orbit_rep(wt({0}), L).rep == wt({0})); // idempotent
  ReduceResult rr = orbit_rep_word(wt({8}), L);
  CHECK(dot_action(*L.rs, rr.v, rr.rep) == wt({8}));

  // with I empty every weight is its own representative
  LeviDatum none = levi("A1", {}, 5);
  CHECK(orbit_rep(wt({8}), none).rep == wt({8}));
  CHECK(orbit_rep(wt({-13}), none).rep == wt({-13}));
}

TEST_CASE("representatives label orbits consistently") {
  LeviDatum L = levi("A2", {0}, 5);
  for (const Weight& x : box_weights(*L.rs, 6)) {
    Weight r = orbit_rep(x, L).rep;
    CHECK(in_CI_closure(*L.rs, L, r));
    CHECK(orbit_rep(r, L).rep == r);
    // generator closure from x must contain its representative
    std::set<Weight> orb = brute_orbit(x, L, 40);
    CHECK(orb.count(r) == 1);
    // and everything in the closure maps to the same representative
    for (const Weight& y : orb) CHECK(orbit_rep(y, L).rep == r);
  }
}

TEST_CASE("orbit counts against the stabilizer formula") {
  LeviDatum L = levi("A1", {0}, 5);
  CHECK(N_I(wt({0}), L) == 2);
  CHECK(N_I(wt({-1}), L) == 1); // the wall point is fixed by s_alpha
  CHECK(N_I(wt({4}), L) == 1);  // s_alpha moves 4w by -10w, which vanishes mod pX

  LeviDatum none = levi("A2", {}, 5);
  CHECK(N_I(wt({2, 3}), none) == 1);

  LeviDatum a2 = levi("A2", {0, 1}, 5);
  CHECK(N_I(wt({0, 0}), a2) == 6);
  CHECK(N_I(wt({-1, 0}), a2) == 3); // one singular simple root

  // a wall root outside the Levi span does not shrink the orbit
  LeviDatum half = levi("A2", {0}, 5);
  CHECK(N_I(wt({0, -1}), half) == 2); // singular alpha_2, but I = {alpha_1}
}

TEST_CASE("regularity across the wall matches the conjugate criterion") {
  LeviDatum empty = levi("A1", {}, 5);
  WallSetup s5 = choose_mu(Reflection{0, 1}, *empty.rs, 5);
  CHECK(refl_stays_regular(identity_elt(*empty.rs, 5), s5, empty));

  LeviDatum full = levi("A1", {0}, 5);
  CHECK_FALSE(refl_stays_regular(identity_elt(*full.rs, 5), s5, full));

  LeviDatum a2 = levi("A2", {0}, 5);
  int alpha2 = a2.rs->simple_root_index[1];
  WallSetup w2 = choose_mu(Reflection{alpha2, 0}, *a2.rs, 5);
  CHECK(refl_stays_regular(identity_elt(*a2.rs, 5), w2, a2));

  try {
    refl_stays_regular(reflection_elt(*full.rs, 0, 1, 5), s5, full); // 8w not in C_I
    FAIL("expected not_in_ci");
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::not_in_ci);
  }
}

TEST_CASE("wall weights have stabilizer exactly one reflection") {
  RootSystem a1 = parse_root_system("A1");
  CHECK(choose_mu(Reflection{0, 1}, a1, 5).mu == wt({4}));
  CHECK(choose_mu(Reflection{0, 0}, a1, 5).mu == wt({-1}));
  CHECK(choose_mu(Reflection{0, 0}, a1, 5).lambda_star == wt({0}));

  RootSystem a2 = parse_root_system("A2");
  try {
    choose_mu(Reflection{0, 0}, a2, 2); // p below the Coxeter number 3
    FAIL("expected no_such_weight");
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::no_such_weight);
  }

  // each chosen mu really is fixed by s and by no other wall of C-bar
  for (const char* spec : {"A2", "B2"}) {
    RootSystem rs = parse_root_system(spec);
    for (const Reflection& s : simple_reflections_Sp(rs, 7)) {
      WallSetup setup = choose_mu(s, rs, 7);
      CHECK(dot_action(rs, reflection_elt(rs, s, 7), setup.mu) == setup.mu);
      for (const Reflection& t : simple_reflections_Sp(rs, 7)) {
        if (t == s) continue;
        CHECK(dot_action(rs, reflection_elt(rs, t, 7), setup.mu) != setup.mu);
      }
    }
  }
}

TEST_CASE("integral points of the closed fundamental alcove") {
  RootSystem a1 = parse_root_system("A1");
  auto pts = closure_C_points(a1, 5);
  REQUIRE(pts.size() == 6); // pairings 0..5
  CHECK(pts.front() == wt({-1}));
  CHECK(pts.back() == wt({4}));

  RootSystem a2 = parse_root_system("A2");
  CHECK(closure_C_points(a2, 5).size() == 21); // lattice points of a closed simplex

  for (const Weight& x : closure_C_points(a2, 5)) {
    for (int k = 0; k < (int)a2.positive_roots.size(); k++) {
      CHECK(rho_pairing(a2, x, k) >= Int(0));
      CHECK(rho_pairing(a2, x, k) <= Int(5));
    }
  }
}

TEST_CASE("linkage: equal representatives exactly for connected weights") {
  LeviDatum L = levi("A1", {0}, 5);
  // 8w and 0 are linked through s_{alpha,5}; 2w is not linked to 0
  CHECK(orbit_rep(wt({8}), L).rep == orbit_rep(wt({0}), L).rep);
  CHECK(orbit_rep(wt({2}), L).rep != orbit_rep(wt({0}), L).rep);
  CHECK(orbit_rep(wt({10}), L).rep == orbit_rep(wt({0}), L).rep); // 10w = 0 + p*alpha
}

} // TEST_SUITE
