#include "doctest.h"

#include <set>

#include "alcove/rootdata.hpp"

using namespace alcove;

namespace {

Weight wt(std::vector<long long> c) { return weight_from_ll(std::move(c)); }

// reflect the root-coordinate vector b across simple root i using the
// Cartan matrix directly (independent of the library's reflection code)
std::vector<long long> simple_reflect_b(const RootSystem& rs, std::vector<long long> b, int i) {
  long long pair = 0;
  for (int j = 0; j < rs.rank; j++) pair += b[j] * rs.cartan_matrix[j][i];
  b[i] -= pair;
  return b;
}

} // namespace

TEST_SUITE("root systems") {

TEST_CASE("positive root counts and Coxeter numbers") {
  struct Row {
    const char* spec;
    size_t roots;
    long long h;
  };
  for (Row row : {Row{"A1", 1, 2}, Row{"A2", 3, 3}, Row{"B2", 4, 4}, Row{"G2", 6, 6},
                  Row{"A3", 6, 4}, Row{"C3", 9, 6}, Row{"D4", 12, 6}, Row{"F4", 24, 12}}) {
    RootSystem rs = parse_root_system(row.spec);
    CAPTURE(row.spec);
    CHECK(rs.positive_roots.size() == row.roots);
    CHECK(rs.coxeter_number == row.h);
  }
}

TEST_CASE("products concatenate components") {
  RootSystem rs = parse_root_system("A2xA1");
  CHECK(rs.rank == 3);
  CHECK(rs.positive_roots.size() == 4);
  CHECK(rs.coxeter_number == 3); // max over components
  CHECK(rs.component_count == 2);
  CHECK(rs.type_string() == "A2xA1");
  CHECK(parse_root_system("A2,A1").type_string() == "A2xA1");
  // no coupling between the blocks
  CHECK(rs.cartan_matrix[0][2] == 0);
  CHECK(rs.cartan_matrix[2][1] == 0);
}

TEST_CASE("bad specs are rejected") {
  CHECK_THROWS_AS(parse_root_system("H3"), calc_error);
  CHECK_THROWS_AS(parse_root_system("A0"), calc_error);
  CHECK_THROWS_AS(parse_root_system("A9"), calc_error); // above the rank cap
  CHECK_THROWS_AS(parse_root_system("B1"), calc_error);
  CHECK_THROWS_AS(parse_root_system(""), calc_error);
  CHECK_THROWS_AS(parse_root_system("A4xA5"), calc_error); // total rank 9
}

TEST_CASE("Cartan matrix shape") {
  for (const char* spec : {"A2", "B2", "G2", "B3"}) {
    RootSystem rs = parse_root_system(spec);
    for (int i = 0; i < rs.rank; i++)
      for (int j = 0; j < rs.rank; j++) {
        if (i == j)
          CHECK(rs.cartan_matrix[i][j] == 2);
        else
          CHECK(rs.cartan_matrix[i][j] <= 0);
      }
  }
  // the two B2 off-diagonal entries are -1 and -2 in some order
  RootSystem b2 = parse_root_system("B2");
  CHECK(b2.cartan_matrix[0][1] * b2.cartan_matrix[1][0] == 2);
}

TEST_CASE("pairings read off fundamental coordinates") {
  RootSystem rs = parse_root_system("A1");
  int alpha = rs.simple_root_index[0];
  CHECK(pairing(rs, wt({1}), alpha) == Int(1));
  CHECK(pairing(rs, wt({2}), alpha) == Int(2)); // alpha = 2*fund weight
  CHECK(pairing(rs, zero_weight(rs), alpha) == Int(0));
  CHECK(rho_pairing(rs, zero_weight(rs), alpha) == Int(1));

  RootSystem a2 = parse_root_system("A2");
  // highest root = alpha1 + alpha2 has fund coords (1,1), coroot pairing 2 with rho
  int hi = a2.highest_coroot_root[0];
  CHECK(rho_pairing(a2, zero_weight(a2), hi) == Int(2));
  CHECK_THROWS_AS(pairing(a2, wt({1}), 0), calc_error); // wrong rank
}

TEST_CASE("rho has all-ones coordinates") {
  for (const char* spec : {"A1", "A2", "B2", "G2", "A2xA1"}) {
    RootSystem rs = parse_root_system(spec);
    for (const Int& c : rho(rs).c) CHECK(c == Int(1));
  }
}

TEST_CASE("co-heights separate simple roots") {
  for (const char* spec : {"A2", "B2", "G2", "B3"}) {
    RootSystem rs = parse_root_system(spec);
    std::set<int> simples(rs.simple_root_index.begin(), rs.simple_root_index.end());
    for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
      CHECK(rs.positive_roots[k].co_height >= 1);
      CHECK((rs.positive_roots[k].co_height == 1) == (simples.count(k) > 0));
    }
  }
}

TEST_CASE("simple reflections permute the root set") {
  for (const char* spec : {"A2", "B2", "G2"}) {
    RootSystem rs = parse_root_system(spec);
    for (const Root& beta : rs.positive_roots)
      for (int i = 0; i < rs.rank; i++) {
        std::vector<long long> image = simple_reflect_b(rs, beta.b, i);
        bool neg = true, pos = true;
        for (long long x : image) {
          if (x > 0) neg = false;
          if (x < 0) pos = false;
        }
        CHECK((pos || neg)); // never mixed signs
        std::vector<long long> abs_image = image;
        for (long long& x : abs_image)
          if (x < 0) x = -x;
        CHECK(find_root(rs, abs_image) >= 0);
      }
  }
}

TEST_CASE("root lattice membership") {
  RootSystem rs = parse_root_system("A2");
  std::vector<Int> g;
  CHECK(in_root_lattice(rs, wt({-1, 2}), &g)); // alpha_2
  CHECK(g[0] == Int(0));
  CHECK(g[1] == Int(1));
  CHECK_FALSE(in_root_lattice(rs, wt({1, 0}), nullptr)); // fund weight, index 3 lattice
  CHECK(in_root_lattice(rs, wt({1, 1}), &g));            // alpha_1 + alpha_2
  CHECK(g[0] == Int(1));
  CHECK(g[1] == Int(1));
}

TEST_CASE("weight helpers") {
  RootSystem rs = parse_root_system("A1");
  CHECK(wt({3}).str() == "3");
  CHECK(wt({1, -2}).str() == "1,-2");
  CHECK(add_root_multiple(rs, zero_weight(rs), rs.simple_root_index[0], Int(5)) == wt({10}));
  CHECK(is_dominant(rs, wt({-1})));       // pairing with rho shift = 0
  CHECK_FALSE(is_dominant(rs, wt({-2}))); // strictly negative
  CHECK(is_regular(rs, wt({0}), 5));
  CHECK_FALSE(is_regular(rs, wt({4}), 5)); // <4+1> = 5
}

} // TEST_SUITE
