#include "doctest.h"

#include "alcove/alcoves.hpp"
#include "alcove/oracle.hpp"

using namespace alcove;

namespace {

Weight wt(std::vector<long long> c) { return weight_from_ll(std::move(c)); }

} // namespace

TEST_SUITE("alcove geometry") {

TEST_CASE("alcove coordinates and depth") {
  RootSystem rs = parse_root_system("A1");
  AlcoveCoords base = alcove_coords(rs, wt({0}), 5);
  CHECK(base.n[0] == Int(0));
  CHECK(base.d == Int(0));
  CHECK(alcove_coords(rs, wt({8}), 5).d == Int(1)); // pairing 9 sits in (5,10)
  CHECK(d_value(rs, wt({-2}), 5) == Int(-1));
  CHECK_THROWS_AS(alcove_coords(rs, wt({4}), 5), calc_error); // pairing 5, on the wall

  RootSystem a2 = parse_root_system("A2");
  AlcoveCoords up = alcove_coords(a2, wt({5, 5}), 5);
  CHECK(up.d == up.n[0] + up.n[1] + up.n[2]);
  CHECK(up.d == Int(4)); // pairings 6, 6, 12 give coordinates 1, 1, 2
}

TEST_CASE("single reflection comparison decides the arrow direction") {
  RootSystem rs = parse_root_system("A1");
  CHECK(single_reflection_compare(rs, Reflection{0, 1}, wt({8}), 5) == OrderRel::below);
  CHECK(single_reflection_compare(rs, Reflection{0, 0}, wt({0}), 5) == OrderRel::below);
  CHECK(single_reflection_compare(rs, Reflection{0, 1}, wt({0}), 5) == OrderRel::above);
  try {
    single_reflection_compare(rs, Reflection{0, 1}, wt({4}), 5); // fixed wall point
    FAIL("expected fixed_point");
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::fixed_point);
  }
}

TEST_CASE("arrow order basics") {
  RootSystem rs = parse_root_system("A1");
  CHECK(uparrow_leq(rs, wt({3}), wt({3}), 5));
  CHECK(uparrow_leq(rs, wt({-2}), wt({0}), 5));
  CHECK_FALSE(uparrow_leq(rs, wt({8}), wt({0}), 5)); // fails the root-order bound
  CHECK(uparrow_leq(rs, wt({0}), wt({8}), 5));       // single up step across 5
  CHECK(uparrow_leq(rs, wt({-1}), wt({9}), 5));      // wall points participate too
  CHECK_FALSE(uparrow_leq(rs, wt({1}), wt({9}), 5)); // same root distance, wrong orbit
}

TEST_CASE("arrow order against the forward-closure oracle") {
  RootSystem rs = parse_root_system("A2");
  std::vector<Weight> box = box_weights(rs, 6);
  for (const Weight& mu : box)
    for (const Weight& lam : box) {
      bool fast = uparrow_leq(rs, mu, lam, 5);
      bool slow = brute_uparrow(rs, mu, lam, 5);
      CAPTURE(mu.str());
      CAPTURE(lam.str());
      CHECK(fast == slow);
    }
}

TEST_CASE("walls of an alcove") {
  RootSystem rs = parse_root_system("A1");
  auto walls = walls_of_alcove(rs, wt({0}), 5);
  REQUIRE(walls.size() == 2);
  CHECK(walls[0].root_index == 0);
  CHECK(walls[0].n == 0);
  CHECK(walls[0].side == WallSide::down);
  CHECK(walls[1].n == 1);
  CHECK(walls[1].side == WallSide::up);

  auto high = walls_of_alcove(rs, wt({8}), 5);
  REQUIRE(high.size() == 2);
  CHECK(high[0].n == 1);
  CHECK(high[1].n == 2);

  CHECK(walls_of_alcove(parse_root_system("A2"), wt({0, 0}), 5).size() == 3);
  CHECK(walls_of_alcove(parse_root_system("A2xA1"), wt({0, 0, 0}), 5).size() == 5);
}

TEST_CASE("crossing a wall moves the depth by one") {
  RootSystem rs = parse_root_system("B2");
  long long p = 5;
  for (const Weight& nu : box_weights(rs, 7)) {
    if (!is_regular(rs, nu, p)) continue;
    Int d = d_value(rs, nu, p);
    for (const WallDatum& w : walls_of_alcove(rs, nu, p)) {
      Weight img = dot_action(rs, reflection_elt(rs, w.root_index, w.n, p), nu);
      Int dd = d_value(rs, img, p);
      if (w.side == WallSide::down)
        CHECK(dd == d - Int(1));
      else
        CHECK(dd == d + Int(1));
    }
  }
}

TEST_CASE("reduction into the fundamental alcove") {
  RootSystem rs = parse_root_system("A1");
  ReduceResult rr = reduce_to_C(rs, wt({8}), 5);
  CHECK(rr.rep == wt({0}));
  CHECK(dot_action(rs, rr.v, rr.rep) == wt({8}));
  CHECK(rr.word.size() == 1);

  ReduceResult self = reduce_to_C(rs, wt({2}), 5);
  CHECK(self.rep == wt({2}));
  CHECK(self.word.empty());

  CHECK_THROWS_AS(reduce_to_C(rs, wt({4}), 5), calc_error); // wall point

  // every regular weight in a window lands on a d = 0 representative
  RootSystem a2 = parse_root_system("A2");
  for (const Weight& nu : box_weights(a2, 8)) {
    if (!is_regular(a2, nu, 5)) continue;
    ReduceResult r = reduce_to_C(a2, nu, 5);
    CHECK(d_value(a2, r.rep, 5) == Int(0));
    CHECK(dot_action(a2, r.v, r.rep) == nu);
  }
}

TEST_CASE("uparrow implies the root order and the same block") {
  RootSystem rs = parse_root_system("A2");
  std::vector<Weight> box = box_weights(rs, 5);
  for (const Weight& mu : box)
    for (const Weight& lam : box) {
      if (mu == lam || !uparrow_leq(rs, mu, lam, 5)) continue;
      std::vector<Int> gap;
      CHECK(in_root_lattice(rs, lam - mu, &gap));
      for (const Int& g : gap) CHECK(g >= Int(0));
      if (is_regular(rs, mu, 5)) {
        // same W_p-orbit: both reduce to the same alcove-C point
        CHECK(reduce_to_C(rs, mu, 5).rep == reduce_to_C(rs, lam, 5).rep);
      }
    }
}

} // TEST_SUITE
