// Root systems of types A-G at small rank (products allowed, total rank <= 8)
// and weight-lattice arithmetic.  Weights live in fundamental-weight
// coordinates of the simply connected group, so coordinate i of a weight is
// its pairing with the i-th simple coroot.  Roots are stored with both their
// simple-root coordinates and the simple-coroot coordinates of the coroot.
#ifndef ALCOVE_ROOTDATA_HPP
#define ALCOVE_ROOTDATA_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "alcove/numeric.hpp"

namespace alcove {

inline constexpr int kRankCap = 8;

struct Root {
  std::vector<long long> b;    // coords of beta in the simple roots
  std::vector<long long> d;    // coords of beta-vee in the simple coroots
  std::vector<long long> fund; // coords of beta in the fundamental weights
  long long height;            // sum of b
  long long co_height;         // sum of d = <rho, beta-vee>
};

struct RootSystem {
  std::vector<std::pair<char, int>> cartan_type;
  int rank = 0;
  // A[i][j] = <alpha_i, alpha_j-vee>
  std::vector<std::vector<long long>> cartan_matrix;
  std::vector<Root> positive_roots; // sorted by (height, lex b)
  std::vector<int> simple_root_index; // position of alpha_i in positive_roots
  std::vector<int> component_of;      // simple index -> component id
  int component_count = 0;
  std::vector<int> highest_coroot_root; // per component: index into positive_roots
  long long coxeter_number = 0;         // max over components
  // exact inverse of A^T, for converting fundamental coords to root coords
  std::vector<std::vector<Rat>> fund_to_root;

  std::string type_string() const; // "A2xA1" style
};

struct Weight {
  std::vector<Int> c; // fundamental-weight coordinates

  Weight() = default;
  explicit Weight(std::vector<Int> coords) : c(std::move(coords)) {}
  size_t rank() const { return c.size(); }

  friend bool operator==(const Weight& a, const Weight& b) { return lex_cmp(a.c, b.c) == 0; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return lex_cmp(a.c, b.c) < 0; }

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  std::string str() const; // "c1,c2,..."
};

Weight weight_from_ll(std::vector<long long> coords);

RootSystem build_root_system(const std::vector<std::pair<char, int>>& type_spec);

// "A1", "B2", "A2xA1", also comma-separated lists of such tokens.
RootSystem parse_root_system(const std::string& spec);

Weight rho(const RootSystem& rs);
Weight zero_weight(const RootSystem& rs);

// <lambda, beta_vee> for the positive root with the given index.
Int pairing(const RootSystem& rs, const Weight& lambda, int root_index);
// <lambda + rho, beta_vee>; the quantity every alcove condition reads.
Int rho_pairing(const RootSystem& rs, const Weight& lambda, int root_index);

// lambda + t*beta, exact.
Weight add_root_multiple(const RootSystem& rs, const Weight& lambda, int root_index, const Int& t);

// Root-lattice coordinates of a weight, if it lies in the root lattice.
bool in_root_lattice(const RootSystem& rs, const Weight& w, std::vector<Int>* coords_out);

bool is_dominant(const RootSystem& rs, const Weight& nu); // <nu+rho, alpha-vee> >= 0 on Phi+
bool is_regular(const RootSystem& rs, const Weight& nu, long long p);

// index of the positive root equal to (root coords) b, or -1.
int find_root(const RootSystem& rs, const std::vector<long long>& b);

} // namespace alcove

#endif
