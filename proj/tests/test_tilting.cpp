#include "doctest.h"

#include <memory>

#include "alcove/tilting.hpp"
#include "alcove/oracle.hpp"

using namespace alcove;

namespace {

Weight wt(std::vector<long long> c) { return weight_from_ll(std::move(c)); }

LeviDatum levi(const char* spec, std::vector<int> I, long long p) {
  auto rs = std::make_shared<const RootSystem>(parse_root_system(spec));
  return make_levi(rs, std::move(I), p);
}

GVector zchar(const Weight& block, std::vector<std::pair<Weight, long long>> terms) {
  GVector v;
  v.basis = Basis::zbar;
  v.block = block;
  for (auto& [label, coeff] : terms) v.add(label, Rat(Int(coeff)));
  return v;
}

} // namespace

TEST_SUITE("tilting calculus") {

TEST_CASE("descent words for dominant regular weights") {
  LeviDatum empty = levi("A1", {}, 5);
  ReducedWord triv = domexp_word(wt({0}), empty);
  CHECK(triv.letters.empty());
  CHECK(triv.base == wt({0}));

  ReducedWord one = domexp_word(wt({8}), empty);
  REQUIRE(one.letters.size() == 1);
  CHECK(one.letters[0] == Reflection{0, 1});
  CHECK(one.prefix_targets.back() == wt({8}));
  CHECK(one.ascent_ok[0]);
  CHECK(one.regularity_ok[0]);
  recheck_word(one, empty);

  ReducedWord two = domexp_word(wt({10}), empty);
  REQUIRE(two.letters.size() == 2);
  CHECK(two.letters[0] == Reflection{0, 1}); // first ascent 0 -> 8w
  CHECK(two.letters[1] == Reflection{0, 0}); // conjugated second step
  CHECK(two.prefix_targets[0] == wt({8}));
  CHECK(two.prefix_targets[1] == wt({10}));
  recheck_word(two, empty);

  LeviDatum full = levi("A1", {0}, 5);
  try {
    domexp_word(wt({8}), full); // 8w is not its own orbit representative
    FAIL("expected not_in_ci");
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::not_in_ci);
  }
  CHECK_THROWS_AS(domexp_word(wt({-2}), empty), calc_error); // not dominant
  CHECK_THROWS_AS(domexp_word(wt({4}), empty), calc_error);  // wall point
}

TEST_CASE("word length equals the alcove depth") {
  for (const char* spec : {"A2", "B2"}) {
    LeviDatum L = levi(spec, {}, 7);
    for (const Weight& nu : box_weights(*L.rs, 14)) {
      if (!is_regular(*L.rs, nu, 7) || !is_dominant(*L.rs, nu)) continue;
      Int d = d_value(*L.rs, nu, 7);
      if (d > Int(3)) continue;
      ReducedWord w = domexp_word(nu, L);
      CHECK(Int((long long)w.letters.size()) == d);
      recheck_word(w, L);
    }
  }
}

TEST_CASE("wall-crossing products of the base tilting class") {
  LeviDatum empty = levi("A1", {}, 5);
  ReducedWord w0 = domexp_word(wt({0}), empty);
  CHECK(theta_product_char(w0, empty) == zchar(wt({0}), {{wt({0}), 1}}));

  GVector c1 = theta_product_char(domexp_word(wt({8}), empty), empty);
  CHECK(c1 == zchar(wt({0}), {{wt({0}), 1}, {wt({8}), 1}}));

  GVector c2 = theta_product_char(domexp_word(wt({10}), empty), empty);
  CHECK(c2 == zchar(wt({0}), {{wt({0}), 1}, {wt({8}), 1}, {wt({-2}), 1}, {wt({10}), 1}}));

  GVector c3 = theta_product_char(domexp_word(wt({18}), empty), empty);
  CHECK(c3 == zchar(wt({0}), {{wt({0}), 2},
                              {wt({8}), 2},
                              {wt({-2}), 1},
                              {wt({-10}), 1},
                              {wt({10}), 1},
                              {wt({18}), 1}}));

  // the full Levi doubles the base class instead of spreading out
  LeviDatum full = levi("A1", {0}, 5);
  CHECK(theta_product_char(domexp_word(wt({0}), full), full) ==
        zchar(wt({0}), {{wt({0}), 2}}));
}

TEST_CASE("triangularity of the crossing product") {
  LeviDatum empty = levi("A1", {}, 5);
  TiltSummandReport r = tilt_summand_check(domexp_word(wt({8}), empty), empty);
  CHECK(r.top == wt({8}));
  CHECK(r.top_d == 1);
  CHECK(r.residual.terms.size() == 1);
  CHECK(r.residual.terms.at(wt({0})) == Rat(Int(1)));

  TiltSummandReport r0 = tilt_summand_check(domexp_word(wt({0}), empty), empty);
  CHECK(r0.top == wt({0}));
  CHECK(r0.residual.terms.empty());

  TiltSummandReport r2 = tilt_summand_check(domexp_word(wt({10}), empty), empty);
  CHECK(r2.top == wt({10}));
  for (const auto& [label, coeff] : r2.residual.terms)
    CHECK(d_value(*empty.rs, label, 5) < Int(2));
}

TEST_CASE("closed wall-crossing cases") {
  LeviDatum empty = levi("A1", {}, 5);
  Reflection s5{0, 1};

  // crossing up from the lower neighbor leaves a symbolic lower remainder
  WallCrossDecomp up = refl_transwall_decompose(wt({0}), s5, wt({0}), empty);
  CHECK(up.tag == "one-plus-lower");
  REQUIRE(up.parts.size() == 1);
  CHECK(up.parts[0] == wt({8}));
  CHECK(up.has_remainder);
  CHECK(up.remainder_d_bound == 1);

  // crossing down doubles
  WallCrossDecomp down = refl_transwall_decompose(wt({8}), s5, wt({0}), empty);
  CHECK(down.tag == "double");
  REQUIRE(down.parts.size() == 2);
  CHECK(down.parts[0] == wt({8}));
  CHECK(down.parts[1] == wt({8}));
  CHECK_FALSE(down.has_remainder);

  // conjugate inside W_{I,p} doubles as well
  LeviDatum full = levi("A1", {0}, 5);
  WallCrossDecomp fixed = refl_transwall_decompose(wt({0}), s5, wt({0}), full);
  CHECK(fixed.tag == "double");
  REQUIRE(fixed.parts.size() == 2);
  CHECK(fixed.parts[0] == wt({0}));
}

TEST_CASE("greedy peeling against a character table") {
  LeviDatum empty = levi("A1", {}, 5);
  TiltingTable table;
  table.entries[wt({0})] = zchar(wt({0}), {{wt({0}), 1}});
  table.entries[wt({8})] = zchar(wt({0}), {{wt({8}), 1}, {wt({0}), 1}});
  validate_tilting_table(table, empty);

  auto m = greedy_peel(zchar(wt({0}), {{wt({0}), 1}, {wt({8}), 1}}), table, empty);
  REQUIRE(m.size() == 1);
  CHECK(m.at(wt({8})) == 1);

  auto triple = greedy_peel(zchar(wt({0}), {{wt({8}), 3}, {wt({0}), 3}}), table, empty);
  CHECK(triple.at(wt({8})) == 3);
  CHECK(triple.count(wt({0})) == 0);

  auto self = greedy_peel(table.entries[wt({8})], table, empty);
  REQUIRE(self.size() == 1);
  CHECK(self.at(wt({8})) == 1);

  try {
    greedy_peel(zchar(wt({0}), {{wt({8}), 1}}), table, empty); // leaves -1 at 0
    FAIL("expected peel_failed");
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::peel_failed);
  }
  try {
    greedy_peel(zchar(wt({0}), {{wt({10}), 1}}), table, empty);
    FAIL("expected missing_entry");
  } catch (const calc_error& e) {
    CHECK(e.code() == errc::missing_entry);
  }

  TiltingTable bad;
  bad.entries[wt({8})] = zchar(wt({0}), {{wt({8}), 1}, {wt({10}), 1}}); // 10w is not below 8w
  CHECK_THROWS_AS(validate_tilting_table(bad, empty), calc_error);
}

TEST_CASE("hom family sizes") {
  LeviDatum empty = levi("A1", {}, 5);
  GVector nab;
  nab.basis = Basis::nabla;
  nab.block = wt({0});
  nab.add(wt({0}), Rat(Int(1)));
  auto [ds, dbs] = section_sizes_for_hom_bases(wt({0}), nab, empty);
  CHECK(ds == 1);
  CHECK(dbs == 1);

  LeviDatum full = levi("A1", {0}, 5);
  auto [df, dbf] = section_sizes_for_hom_bases(wt({0}), nab, full);
  CHECK(df == 2);
  CHECK(dbf == 1);

  GVector zero;
  zero.basis = Basis::nabla;
  zero.block = wt({0});
  auto [dz, dbz] = section_sizes_for_hom_bases(wt({0}), zero, empty);
  CHECK(dz == 0);
  CHECK(dbz == 0);
}

} // TEST_SUITE
