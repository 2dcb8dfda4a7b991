#include "alcove/oracle.hpp"

#include <algorithm>

namespace alcove {

namespace {

bool inside_box(const Weight& w, long long r) {
  for (const Int& c : w.c)
    if (abs(c) > Int(r)) return false;
  return true;
}

// dot action of s_{alpha_i, 0} written out from the Cartan matrix:
// lambda - <lambda + rho, alpha_i-vee> alpha_i in fundamental coordinates
std::vector<Int> raw_simple_dot(const RootSystem& rs, int i, const std::vector<Int>& x) {
  Int c = x[i] + Int(1);
  std::vector<Int> out(x);
  for (int j = 0; j < rs.rank; j++) out[j] -= c * Int(rs.cartan_matrix[i][j]);
  return out;
}

} // namespace

std::set<Weight> brute_orbit(const Weight& lambda, const LeviDatum& L, long long box_radius) {
  const RootSystem& rs = *L.rs;
  if ((int)lambda.rank() != rs.rank) fail(errc::dimension_mismatch, "weight rank mismatch");
  std::set<Weight> seen{lambda};
  std::vector<Weight> stack{lambda};
  auto push = [&](Weight w) {
    if (!inside_box(w, box_radius)) return;
    if (seen.insert(w).second) {
      if ((long long)seen.size() > kGroupClosureCap)
        fail(errc::bound_exceeded, "orbit closure exceeds cap");
      stack.push_back(std::move(w));
    }
  };
  while (!stack.empty()) {
    Weight x = stack.back();
    stack.pop_back();
    for (int i : L.I) {
      push(Weight(raw_simple_dot(rs, i, x.c)));
      // translations by +-p alpha_i, in fundamental coordinates via the
      // Cartan matrix row
      for (int sign : {1, -1}) {
        std::vector<Int> t(x.c);
        for (int j = 0; j < rs.rank; j++)
          t[j] += Int(sign * L.p) * Int(rs.cartan_matrix[i][j]);
        push(Weight(std::move(t)));
      }
    }
  }
  return seen;
}

long long brute_coset_orbit_count(const Weight& lambda, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  if ((int)lambda.rank() != rs.rank) fail(errc::dimension_mismatch, "weight rank mismatch");
  std::vector<Int> start(lambda.c);
  for (Int& c : start) c = floor_mod(c, Int(L.p));
  std::set<std::vector<Int>> seen{start};
  std::vector<std::vector<Int>> stack{start};
  while (!stack.empty()) {
    std::vector<Int> x = stack.back();
    stack.pop_back();
    for (int i : L.I) {
      std::vector<Int> y = raw_simple_dot(rs, i, x);
      for (Int& c : y) c = floor_mod(c, Int(L.p));
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return (long long)seen.size();
}

bool brute_uparrow(const RootSystem& rs, const Weight& mu, const Weight& lambda, long long p) {
  if (mu == lambda) return true;
  // every ascending chain from mu to lambda adds positive multiples of
  // positive roots, so it lives in the interval: 0 <= root-coords of x - mu
  // and x - mu <= lambda - mu coordinatewise
  std::vector<Int> gap;
  {
    Weight diff = lambda - mu;
    if (!in_root_lattice(rs, diff, &gap)) return false;
    for (int j = 0; j < rs.rank; j++)
      if (gap[j].sign() < 0) return false;
  }
  std::set<Weight> seen{mu};
  std::vector<std::pair<Weight, std::vector<Int>>> stack{{mu, std::vector<Int>(rs.rank, Int(0))}};
  while (!stack.empty()) {
    auto [x, used] = stack.back();
    stack.pop_back();
    for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
      const Root& beta = rs.positive_roots[k];
      Int c = rho_pairing(rs, x, k);
      // ascending steps x -> x + t beta with t > 0 and t = -c mod p
      Int t0 = floor_mod(-c, Int(p));
      if (t0.is_zero()) t0 = Int(p);
      // t beta must fit in the remaining interval
      Int tmax;
      bool unbounded = true;
      for (int j = 0; j < rs.rank; j++) {
        if (beta.b[j] == 0) continue;
        Int room = gap[j] - used[j];
        Int cap = floor_div(room, Int(beta.b[j]));
        if (unbounded || cap < tmax) tmax = cap;
        unbounded = false;
      }
      if (unbounded) continue;
      for (Int t = t0; t <= tmax; t += Int(p)) {
        Weight y = add_root_multiple(rs, x, k, t);
        if (y == lambda) return true;
        if (seen.insert(y).second) {
          std::vector<Int> u(used);
          for (int j = 0; j < rs.rank; j++) u[j] += t * Int(beta.b[j]);
          stack.push_back({std::move(y), std::move(u)});
        }
      }
    }
  }
  return false;
}

TiltingTable brute_sl2_tilting_table(const RootSystem& rs, long long p, long long c_radius) {
  if (rs.type_string() != "A1") fail(errc::unknown_type, "the sl2 table needs type A1");
  auto block_rep = [&](long long c) {
    // dot-orbit of c under W_p is {2np +- c}; the representative sits in (0,p)
    long long r = ((c % (2 * p)) + 2 * p) % (2 * p);
    return r < p ? r : 2 * p - r;
  };
  TiltingTable table;
  for (long long c = -c_radius; c <= c_radius; c++) {
    if (c % p == 0) continue; // wall
    long long n = (c >= 0 ? c / p : -((-c + p - 1) / p)); // floor(c/p)
    long long partner = 2 * n * p - c;
    GVector gv;
    gv.basis = Basis::zbar;
    gv.block = weight_from_ll({block_rep(c) - 1});
    gv.add(weight_from_ll({c - 1}), Rat(Int(1)));
    gv.add(weight_from_ll({partner - 1}), Rat(Int(1)));
    table.entries.emplace(weight_from_ll({c - 1}), std::move(gv));
  }
  return table;
}

std::vector<Weight> box_weights(const RootSystem& rs, long long radius) {
  std::vector<Weight> out;
  std::vector<long long> c(rs.rank, -radius);
  for (;;) {
    std::vector<Int> coords(rs.rank);
    for (int j = 0; j < rs.rank; j++) coords[j] = Int(c[j]);
    out.push_back(Weight(std::move(coords)));
    int i = rs.rank - 1;
    while (i >= 0 && c[i] == radius) c[i--] = -radius;
    if (i < 0) break;
    c[i]++;
  }
  return out;
}

} // namespace alcove
