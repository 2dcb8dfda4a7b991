// The affine Weyl group W_p = pZPhi . W (semidirect), its dot-action on
// weights, reflections s_{beta,np}, and the simple reflections S_p in the
// walls of the fundamental alcove.  A group element t_{p*gamma} o wbar is
// stored as the matrix of wbar (on fundamental and on root coordinates, with
// inverses carried along) plus the root-lattice vector gamma.
#ifndef ALCOVE_AFFINE_HPP
#define ALCOVE_AFFINE_HPP

#include <optional>
#include <vector>

#include "alcove/rootdata.hpp"

namespace alcove {

using Mat = std::vector<std::vector<long long>>;

struct FiniteWeyl {
  Mat m;   // action on fundamental coords
  Mat mi;  // inverse of m
  Mat mr;  // action on root coords
  Mat mri; // inverse of mr

  friend bool operator==(const FiniteWeyl& a, const FiniteWeyl& b) { return a.m == b.m; }
  friend bool operator!=(const FiniteWeyl& a, const FiniteWeyl& b) { return !(a == b); }
};

struct AffineElt {
  FiniteWeyl f;
  std::vector<Int> gamma; // translation by p*gamma, gamma in root coords
  long long p = 0;

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.p == b.p && a.f == b.f && lex_cmp(a.gamma, b.gamma) == 0;
  }
  friend bool operator!=(const AffineElt& a, const AffineElt& b) { return !(a == b); }
};

// s_{beta,np}: reflection in the hyperplane <x+rho, beta-vee> = np.
struct Reflection {
  int root_index = -1;
  long long n = 0;

  friend bool operator==(const Reflection& a, const Reflection& b) {
    return a.root_index == b.root_index && a.n == b.n;
  }
};

FiniteWeyl finite_identity(const RootSystem& rs);
FiniteWeyl finite_simple_reflection(const RootSystem& rs, int simple_index);
FiniteWeyl finite_compose(const FiniteWeyl& a, const FiniteWeyl& b); // a then... a o b
FiniteWeyl finite_inverse(const FiniteWeyl& a);
Weight finite_apply(const RootSystem& rs, const FiniteWeyl& w, const Weight& x); // linear
std::vector<Int> finite_apply_root_coords(const FiniteWeyl& w, const std::vector<Int>& g);

AffineElt identity_elt(const RootSystem& rs, long long p);
AffineElt compose(const RootSystem& rs, const AffineElt& a, const AffineElt& b); // a o b
AffineElt inverse(const RootSystem& rs, const AffineElt& a);
AffineElt translation_elt(const RootSystem& rs, std::vector<Int> gamma, long long p);

// w . lambda = w(lambda + rho) - rho, with w acting as t_{p gamma} o wbar.
Weight dot_action(const RootSystem& rs, const AffineElt& w, const Weight& lambda);

AffineElt reflection_elt(const RootSystem& rs, const Reflection& s, long long p);
AffineElt reflection_elt(const RootSystem& rs, int root_index, long long n, long long p);

// w with translation part dropped.
AffineElt finite_projection(const RootSystem& rs, const AffineElt& w);

// Decompose an involution fixing a hyperplane into (root_index, n); nullopt
// if the element is not a reflection.
std::optional<Reflection> as_reflection(const RootSystem& rs, const AffineElt& w);

// Walls of the fundamental alcove C = {0 < <x+rho,beta-vee> < p}: the simple
// walls (alpha_i, 0) and, per irreducible component, (highest-coroot root, 1).
// PTooSmall unless p >= coxeter_number.
std::vector<Reflection> simple_reflections_Sp(const RootSystem& rs, long long p);

// -w_I(lambda) for the longest element w_I of W_I (plain action, not dot).
Weight tau_weight(const RootSystem& rs, const Weight& lambda, const std::vector<int>& I);

// Longest element of W_I as a finite Weyl matrix.
FiniteWeyl longest_element(const RootSystem& rs, const std::vector<int>& I);

// True iff the matrix lies in W_I (chamber descent on the rho-image);
// I defaults to all simples, giving membership in W.
bool finite_in_WI(const RootSystem& rs, const FiniteWeyl& w, const std::vector<int>& I);
bool finite_in_W(const RootSystem& rs, const FiniteWeyl& w);

// Reduction of x into the fundamental domain cut out by the given walls
// (each wall (beta, 0) demands <x+rho,beta-vee> >= 0, each wall (beta, 1)
// demands <x+rho,beta-vee> <= p).  Returns the representative, the applied
// wall word (indices into `walls`, first-applied first), and v with
// v . rep = x.
struct ReduceResult {
  Weight rep;
  std::vector<int> word;
  AffineElt v;
};
ReduceResult reduce_by_walls(const RootSystem& rs, long long p, const Weight& x,
                             const std::vector<Reflection>& walls);

} // namespace alcove

#endif
