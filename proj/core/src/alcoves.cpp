#include "alcove/alcoves.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

AlcoveCoords alcove_coords(const RootSystem& rs, const Weight& nu, long long p) {
  if (p < 1) fail(errc::p_too_small, "p must be positive");
  AlcoveCoords ac;
  ac.n.reserve(rs.positive_roots.size());
  ac.d = Int(0);
  for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
    Int c = rho_pairing(rs, nu, k);
    if (floor_mod(c, Int(p)).is_zero())
      fail(errc::wall_point, "weight (" + nu.str() + ") lies on the wall <.+rho,beta-vee> = " +
                                 c.str() + " of root #" + std::to_string(k));
    Int nk = floor_div(c, Int(p));
    ac.d += nk;
    ac.n.push_back(std::move(nk));
  }
  return ac;
}

Int d_value(const RootSystem& rs, const Weight& nu, long long p) {
  return alcove_coords(rs, nu, p).d;
}

OrderRel single_reflection_compare(const RootSystem& rs, const Reflection& t,
                                   const Weight& nu, long long p) {
  Weight image = dot_action(rs, reflection_elt(rs, t, p), nu);
  if (image == nu) fail(errc::fixed_point, "reflection fixes " + nu.str());
  Int dn = d_value(rs, nu, p);
  Int di = d_value(rs, image, p);
  if (di == dn) fail(errc::internal, "reflection image with equal d"); // cannot happen
  return di < dn ? OrderRel::below : OrderRel::above;
}

bool uparrow_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda, long long p) {
  if (p < 1) fail(errc::p_too_small, "p must be positive");
  if (mu == lambda) return true;
  // necessary: lambda - mu a nonnegative root-lattice vector
  std::vector<Int> delta;
  if (!in_root_lattice(rs, lambda - mu, &delta)) return false;
  for (auto& x : delta)
    if (x.sign() < 0) return false;

  // BFS downward from lambda through generating steps x -> s_{beta,mp}.x with
  // <x+rho,beta-vee> > mp, staying inside the root-order interval [mu, lambda]
  std::set<Weight> visited{lambda};
  std::vector<std::pair<Weight, std::vector<Int>>> stack{{lambda, delta}}; // (x, x-mu coords)
  while (!stack.empty()) {
    auto [x, r] = stack.back();
    stack.pop_back();
    for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
      const Root& beta = rs.positive_roots[k];
      Int c = rho_pairing(rs, x, k);
      // steps x - t beta with t > 0, t == c (mod p), x - t beta >= mu
      Int tmax;
      bool have_tmax = false;
      for (int j = 0; j < rs.rank; j++) {
        if (beta.b[j] == 0) continue;
        Int bound = floor_div(r[j], Int(beta.b[j]));
        if (!have_tmax || bound < tmax) { tmax = bound; have_tmax = true; }
      }
      if (!have_tmax || tmax.sign() <= 0) continue;
      Int t0 = floor_mod(c, Int(p));
      if (t0.is_zero()) t0 = Int(p);
      for (Int t = t0; t <= tmax; t += Int(p)) {
        Weight y = add_root_multiple(rs, x, k, -t);
        if (y == mu) return true;
        if (!visited.insert(y).second) continue;
        auto r2 = r;
        for (int j = 0; j < rs.rank; j++) r2[j] -= t * Int(beta.b[j]);
        stack.push_back({std::move(y), std::move(r2)});
      }
    }
  }
  return false;
}

ReduceResult reduce_to_C(const RootSystem& rs, const Weight& nu, long long p) {
  if (!is_regular(rs, nu, p))
    fail(errc::wall_point, "weight (" + nu.str() + ") is not regular");
  ReduceResult res = reduce_by_walls(rs, p, nu, simple_reflections_Sp(rs, p));
  // regular orbits land strictly inside C
  AlcoveCoords ac = alcove_coords(rs, res.rep, p);
  if (!ac.d.is_zero()) fail(errc::internal, "reduction left the fundamental alcove");
  return res;
}

std::vector<WallDatum> walls_of_alcove(const RootSystem& rs, const Weight& nu, long long p) {
  AlcoveCoords ac = alcove_coords(rs, nu, p); // also validates regularity
  ReduceResult red = reduce_to_C(rs, nu, p);
  std::vector<WallDatum> out;
  for (const Reflection& s : simple_reflections_Sp(rs, p)) {
    // the wall of alcove(nu) matching the s-wall of C is fixed by v s v^-1
    AffineElt conj = compose(rs, compose(rs, red.v, reflection_elt(rs, s, p)),
                             inverse(rs, red.v));
    auto r = as_reflection(rs, conj);
    if (!r) fail(errc::internal, "conjugate of a wall reflection is not a reflection");
    Weight image = dot_action(rs, conj, nu);
    AlcoveCoords aci = alcove_coords(rs, image, p);
    // facet sanity: exactly the beta-coordinate moves, by one
    for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
      Int diff = aci.n[k] - ac.n[k];
      if (k == r->root_index ? abs(diff) != Int(1) : !diff.is_zero())
        fail(errc::check_failed, "wall reflection is not a facet crossing");
    }
    out.push_back({r->root_index, r->n, aci.d < ac.d ? WallSide::down : WallSide::up});
  }
  std::sort(out.begin(), out.end(), [](const WallDatum& a, const WallDatum& b) {
    if (a.root_index != b.root_index) return a.root_index < b.root_index;
    return a.n < b.n;
  });
  return out;
}

} // namespace alcove
