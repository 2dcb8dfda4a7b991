// Standard Levi datum I: the subgroup W_{I,p} = pZI . W_I, its fundamental
// domain C_I-bar, canonical orbit representatives, stabilizer-orbit counts
// N_I, and the wall setups (s, mu) used by translation functors.
#ifndef ALCOVE_LEVI_HPP
#define ALCOVE_LEVI_HPP

#include <memory>
#include <vector>

#include "alcove/alcoves.hpp"

namespace alcove {

struct LeviDatum {
  std::shared_ptr<const RootSystem> rs;
  std::vector<int> I; // 0-based simple indices, strictly increasing
  long long p = 0;
  long long order_WI = 1;          // |W_I|, by matrix closure
  std::vector<int> phi_I;          // positive-root indices with support in I
  std::vector<Reflection> I_walls; // fundamental-domain walls of W_{I,p}

  bool in_levi_span(int root_index) const; // beta in Phi_I
};

// order_WI closure guard; generous, only ever hit for huge exceptional Levis
inline constexpr long long kGroupClosureCap = 2'000'000;

LeviDatum make_levi(std::shared_ptr<const RootSystem> rs, std::vector<int> I, long long p);

struct OrbitLabel {
  Weight rep;

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) { return a.rep == b.rep; }
  friend bool operator<(const OrbitLabel& a, const OrbitLabel& b) { return a.rep < b.rep; }
};

// A wall of C together with an integral mu whose stabilizer in W_p is
// exactly {1, s}, and the base point lambda_star = 0 in C.
struct WallSetup {
  Reflection s;
  Weight mu;
  Weight lambda_star;
};

// finite part in W_I and translation part in ZI.
bool in_WIp(const RootSystem& rs, const AffineElt& w, const LeviDatum& L);

// The unique W_{I,p}-orbit point in C_I-bar.
OrbitLabel orbit_rep(const Weight& lambda, const LeviDatum& L);
// Same, with the reduction word (v . rep = lambda).
ReduceResult orbit_rep_word(const Weight& lambda, const LeviDatum& L);

// N_I(lambda) = |W_I . (lambda + pX)| (dot action on X/pX), brute-forced and
// cross-checked against the stabilizer-order formula.
long long N_I(const Weight& lambda, const LeviDatum& L);

// Is ws . lambda_star still in C_I (given w . lambda_star in C_I)?
// Cross-checked against in_WIp(w s w^-1): the two must be complementary.
bool refl_stays_regular(const AffineElt& w, const WallSetup& setup, const LeviDatum& L);

// mu in C-bar with stabilizer exactly {1,s}; lexicographically smallest such.
// NoSuchWeight if p < h or if no integral point qualifies.
WallSetup choose_mu(const Reflection& s, const RootSystem& rs, long long p);

// membership of lambda in C_I / C_I-bar
bool in_CI(const RootSystem& rs, const LeviDatum& L, const Weight& lambda);
bool in_CI_closure(const RootSystem& rs, const LeviDatum& L, const Weight& lambda);

// all integral points of C-bar (finite simplex), ordered lexicographically
std::vector<Weight> closure_C_points(const RootSystem& rs, long long p);

} // namespace alcove

#endif
