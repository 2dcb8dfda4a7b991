#include "alcove/levi.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

bool LeviDatum::in_levi_span(int root_index) const {
  return std::find(phi_I.begin(), phi_I.end(), root_index) != phi_I.end();
}

LeviDatum make_levi(std::shared_ptr<const RootSystem> rs, std::vector<int> I, long long p) {
  if (!rs) fail(errc::internal, "null root system");
  if (p < 1) fail(errc::p_too_small, "p must be positive");
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  for (int i : I)
    if (i < 0 || i >= rs->rank)
      fail(errc::dimension_mismatch, "Levi index " + std::to_string(i + 1) + " out of range");

  LeviDatum L;
  L.rs = rs;
  L.I = I;
  L.p = p;

  std::vector<bool> inI(rs->rank, false);
  for (int i : I) inI[i] = true;
  for (int k = 0; k < (int)rs->positive_roots.size(); k++) {
    const Root& beta = rs->positive_roots[k];
    bool inside = true;
    for (int j = 0; j < rs->rank && inside; j++)
      if (beta.b[j] != 0 && !inI[j]) inside = false;
    if (inside) L.phi_I.push_back(k);
  }

  // |W_I| by closure over the generating reflection matrices
  {
    std::set<Mat> seen;
    std::vector<FiniteWeyl> stack{finite_identity(*rs)};
    seen.insert(stack[0].m);
    while (!stack.empty()) {
      FiniteWeyl w = stack.back();
      stack.pop_back();
      for (int i : I) {
        FiniteWeyl next = finite_compose(finite_simple_reflection(*rs, i), w);
        if (seen.insert(next.m).second) {
          if ((long long)seen.size() > kGroupClosureCap)
            fail(errc::bound_exceeded, "W_I closure exceeds cap");
          stack.push_back(next);
        }
      }
    }
    L.order_WI = (long long)seen.size();
  }

  // connected components of I in the Dynkin diagram
  std::map<int, int> comp; // I index -> component id
  int ncomp = 0;
  for (int i : I) {
    if (comp.count(i)) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : I)
        if (!comp.count(b) && rs->cartan_matrix[a][b] != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ncomp++;
  }

  // walls of the W_{I,p} fundamental domain: simple I-walls at 0 and, per
  // component of I, the highest-coroot wall at p
  for (int i : I) L.I_walls.push_back({rs->simple_root_index[i], 0});
  for (int c = 0; c < ncomp; c++) {
    int best = -1;
    for (int k : L.phi_I) {
      const Root& beta = rs->positive_roots[k];
      int root_comp = -1;
      for (int j = 0; j < rs->rank; j++)
        if (beta.b[j] != 0) { root_comp = comp.at(j); break; }
      if (root_comp != c) continue;
      if (best < 0 || beta.co_height > rs->positive_roots[best].co_height) best = k;
    }
    if (best < 0) fail(errc::internal, "empty Levi component");
    L.I_walls.push_back({best, 1});
  }
  return L;
}

bool in_WIp(const RootSystem& rs, const AffineElt& w, const LeviDatum& L) {
  std::vector<bool> inI(rs.rank, false);
  for (int i : L.I) inI[i] = true;
  for (int j = 0; j < rs.rank; j++)
    if (!inI[j] && !w.gamma[j].is_zero()) return false;
  return finite_in_WI(rs, w.f, L.I);
}

ReduceResult orbit_rep_word(const Weight& lambda, const LeviDatum& L) {
  return reduce_by_walls(*L.rs, L.p, lambda, L.I_walls);
}

OrbitLabel orbit_rep(const Weight& lambda, const LeviDatum& L) {
  return {orbit_rep_word(lambda, L).rep};
}

namespace {

// dot action of the simple reflection on residue coordinates mod p
std::vector<Int> residue_dot_simple(const RootSystem& rs, int simple_index,
                                    const std::vector<Int>& x, long long p) {
  Weight w(x);
  Weight img = dot_action(rs, reflection_elt(rs, rs.simple_root_index[simple_index], 0, p), w);
  for (auto& c : img.c) c = floor_mod(c, Int(p));
  return img.c;
}

} // namespace

long long N_I(const Weight& lambda, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  if ((int)lambda.rank() != rs.rank) fail(errc::dimension_mismatch, "weight rank mismatch");
  std::vector<Int> start(lambda.c);
  for (auto& c : start) c = floor_mod(c, Int(L.p));
  std::set<std::vector<Int>> orbit{start};
  std::vector<std::vector<Int>> stack{start};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (int i : L.I) {
      auto y = residue_dot_simple(rs, i, x, L.p);
      if (orbit.insert(y).second) stack.push_back(y);
    }
  }
  long long count = (long long)orbit.size();

  // cross-check against the closed form where the stabilizer structure is
  // known: regular weights give |W_I|, weights on exactly one hyperplane give
  // |W_I| or |W_I|/2 according to whether the fixing reflection's root lies
  // in Phi_I
  int singular_root = -1;
  int singular_count = 0;
  for (int k = 0; k < (int)rs.positive_roots.size(); k++)
    if (floor_mod(rho_pairing(rs, lambda, k), Int(L.p)).is_zero()) {
      singular_root = k;
      singular_count++;
    }
  if (singular_count == 0) {
    if (count != L.order_WI)
      fail(errc::check_failed, "N_I(" + lambda.str() + ") = " + std::to_string(count) +
                                   " but |W_I| = " + std::to_string(L.order_WI));
  } else if (singular_count == 1) {
    long long expect = L.in_levi_span(singular_root) ? L.order_WI / 2 : L.order_WI;
    if (L.in_levi_span(singular_root) && L.order_WI % 2 != 0)
      fail(errc::check_failed, "odd |W_I| in the halved stabilizer case");
    if (count != expect)
      fail(errc::check_failed, "N_I(" + lambda.str() + ") = " + std::to_string(count) +
                                   " but the stabilizer formula gives " + std::to_string(expect));
  }
  return count;
}

bool in_CI(const RootSystem& rs, const LeviDatum& L, const Weight& lambda) {
  for (int k : L.phi_I) {
    Int c = rho_pairing(rs, lambda, k);
    if (c.sign() <= 0 || c >= Int(L.p)) return false;
  }
  return true;
}

bool in_CI_closure(const RootSystem& rs, const LeviDatum& L, const Weight& lambda) {
  for (int k : L.phi_I) {
    Int c = rho_pairing(rs, lambda, k);
    if (c.sign() < 0 || c > Int(L.p)) return false;
  }
  return true;
}

bool refl_stays_regular(const AffineElt& w, const WallSetup& setup, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  Weight base = dot_action(rs, w, setup.lambda_star);
  if (!in_CI(rs, L, base))
    fail(errc::not_in_ci, "w.lambda_star = (" + base.str() + ") is not in C_I");
  AffineElt s_elt = reflection_elt(rs, setup.s, L.p);
  Weight image = dot_action(rs, compose(rs, w, s_elt), setup.lambda_star);
  bool stays = in_CI(rs, L, image);
  AffineElt conj = compose(rs, compose(rs, w, s_elt), inverse(rs, w));
  if (in_WIp(rs, conj, L) == stays)
    fail(errc::check_failed, "regularity of ws.lambda_star does not complement the "
                             "conjugate membership in W_{I,p}");
  return stays;
}

std::vector<Weight> closure_C_points(const RootSystem& rs, long long p) {
  // integral points with m_i = <lambda+rho, alpha_i-vee> >= 0 and, per
  // component, sum m_i d_i(highest coroot) <= p; the highest coroot dominates
  // every coroot coordinatewise, so these cut out exactly C-bar
  std::vector<Weight> out;
  std::vector<long long> m(rs.rank, 0);
  std::vector<std::vector<long long>> hi(rs.component_count);
  for (int c = 0; c < rs.component_count; c++)
    hi[c] = rs.positive_roots[rs.highest_coroot_root[c]].d;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == rs.rank) {
      std::vector<Int> coords(rs.rank);
      for (int j = 0; j < rs.rank; j++) coords[j] = Int(m[j] - 1);
      out.push_back(Weight(std::move(coords)));
      return;
    }
    int comp = rs.component_of[i];
    for (long long v = 0;; v++) {
      m[i] = v;
      long long partial = 0;
      for (int j = 0; j <= i; j++)
        if (rs.component_of[j] == comp) partial += m[j] * hi[comp][j];
      if (partial > p) break;
      self(self, i + 1);
    }
    m[i] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

WallSetup choose_mu(const Reflection& s, const RootSystem& rs, long long p) {
  if (p < rs.coxeter_number)
    fail(errc::no_such_weight, "no wall weight with stabilizer {1,s}: p = " +
                                   std::to_string(p) + " < h = " +
                                   std::to_string(rs.coxeter_number));
  AffineElt s_elt = reflection_elt(rs, s, p);
  std::vector<Reflection> walls = simple_reflections_Sp(rs, p);
  for (const Weight& cand : closure_C_points(rs, p)) {
    if (dot_action(rs, s_elt, cand) != cand) continue;
    bool clean = true;
    for (const Reflection& other : walls) {
      if (other == s) continue;
      if (dot_action(rs, reflection_elt(rs, other, p), cand) == cand) { clean = false; break; }
    }
    if (clean) return {s, cand, zero_weight(rs)};
  }
  fail(errc::no_such_weight, "no integral weight on the wall of s has stabilizer exactly {1,s}");
}

} // namespace alcove
