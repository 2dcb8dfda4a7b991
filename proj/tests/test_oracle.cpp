#include "doctest.h"

#include <memory>

#include "alcove/verify.hpp"

using namespace alcove;

namespace {

Weight wt(std::vector<long long> c) { return weight_from_ll(std::move(c)); }

LeviDatum levi(const char* spec, std::vector<int> I, long long p) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system(spec));
  return make_levi(rs, std::move(I), p);
}

} // namespace

TEST_SUITE("brute-force oracle") {

TEST_CASE("orbit closure under the Levi generators") {
  LeviDatum none = levi("A1", {}, 5);
  std::set<Weight> only = brute_orbit(wt({3}), none, 20);
  CHECK(only == std::set<Weight>{wt({3})});

  LeviDatum full = levi("A1", {0}, 5);
  std::set<Weight> orb = brute_orbit(wt({8}), full, 20);
  CHECK(orb.count(wt({8})) == 1);
  CHECK(orb.count(wt({0})) == 1);   // s_{alpha,5} . 8w
  CHECK(orb.count(wt({-2})) == 1);
  CHECK(orb.count(wt({10})) == 1);  // translation by p alpha
  for (const Weight& x : orb) CHECK(orbit_rep(x, full).rep == wt({0}));

  // a wall weight has a thinner orbit than a regular one in the same window
  std::set<Weight> wall = brute_orbit(wt({-1}), full, 20);
  CHECK(wall.size() < orb.size());
  for (const Weight& x : wall) CHECK((x.c[0].as_ll() + 1) % 10 == 0);
}

TEST_CASE("coset orbit counts") {
  LeviDatum full = levi("A1", {0}, 5);
  CHECK(brute_coset_orbit_count(wt({0}), full) == 2);
  CHECK(brute_coset_orbit_count(wt({-1}), full) == 1);
  CHECK(brute_coset_orbit_count(wt({4}), full) == 1);

  LeviDatum a2 = levi("A2", {0, 1}, 5);
  CHECK(brute_coset_orbit_count(wt({0, 0}), a2) == 6);
  CHECK(brute_coset_orbit_count(wt({-1, 0}), a2) == 3);

  // the library N_I must agree everywhere in a window
  for (const Weight& x : box_weights(*a2.rs, 7))
    CHECK(brute_coset_orbit_count(x, a2) == N_I(x, a2));
}

TEST_CASE("forward-closure arrow order") {
  RootSystem rs = parse_root_system("A1");
  CHECK(brute_uparrow(rs, wt({2}), wt({2}), 5));
  CHECK(brute_uparrow(rs, wt({0}), wt({8}), 5));
  CHECK_FALSE(brute_uparrow(rs, wt({1}), wt({0}), 5));
  CHECK_FALSE(brute_uparrow(rs, wt({1}), wt({9}), 5));
  CHECK(brute_uparrow(rs, wt({-1}), wt({9}), 5));
}

TEST_CASE("classical rank-one tilting table") {
  RootSystem rs = parse_root_system("A1");
  TiltingTable table = brute_sl2_tilting_table(rs, 5, 30);

  // regular weights only, both signs
  CHECK(table.entries.count(wt({4})) == 0); // wall
  REQUIRE(table.entries.count(wt({0})) == 1);
  REQUIRE(table.entries.count(wt({8})) == 1);
  REQUIRE(table.entries.count(wt({-2})) == 1);

  // T(0) = Zbar(0) + Zbar(-2w): reflection across the floor at 0
  const GVector& t0 = table.entries.at(wt({0}));
  CHECK(t0.terms.size() == 2);
  CHECK(t0.terms.at(wt({0})) == Rat(Int(1)));
  CHECK(t0.terms.at(wt({-2})) == Rat(Int(1)));

  // T(8w) = Zbar(8w) + Zbar(0): floor at 5
  const GVector& t8 = table.entries.at(wt({8}));
  CHECK(t8.terms.at(wt({8})) == Rat(Int(1)));
  CHECK(t8.terms.at(wt({0})) == Rat(Int(1)));

  // T(-2w) = Zbar(-2w) + Zbar(-10w): floor at -5
  const GVector& tm2 = table.entries.at(wt({-2}));
  CHECK(tm2.terms.at(wt({-2})) == Rat(Int(1)));
  CHECK(tm2.terms.at(wt({-10})) == Rat(Int(1)));

  // every entry is unitriangular for the arrow order
  LeviDatum none = levi("A1", {}, 5);
  validate_tilting_table(table, none);

  CHECK_THROWS_AS(brute_sl2_tilting_table(parse_root_system("A2"), 5, 10), calc_error);
}

TEST_CASE("verify suite aggregates clean runs") {
  VerifyConfig cfg;
  cfg.type_spec = "A1";
  cfg.p = 5;
  cfg.box_radius = 15;
  cfg.max_d = 3;
  cfg.sample_cap = 400;
  VerifyReport report = verify_suite(cfg);
  CHECK(report.ok());
  CHECK(report.seed == cfg.seed);
  bool saw_stab = false, saw_sections = false;
  for (const CheckResult& c : report.checks) {
    if (c.name == "stab-size") {
      saw_stab = true;
      CHECK(c.instances > 0);
    }
    if (c.name == "section-squares") saw_sections = true;
    CHECK(c.failures.empty());
  }
  CHECK(saw_stab);
  CHECK(saw_sections);
}

TEST_CASE("verify suite refuses degenerate moduli") {
  VerifyConfig cfg;
  cfg.type_spec = "A2";
  cfg.p = 2; // below the Coxeter number 3
  VerifyReport report = verify_suite(cfg);
  CHECK_FALSE(report.ok());
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].name == "PTooSmall");
  CHECK(report.checks[0].failures.size() == 1);
}

} // TEST_SUITE
