#include "alcove/affine.hpp"

#include <algorithm>
#include <climits>

namespace alcove {

namespace {

Mat mat_identity(int n) {
  Mat m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; i++) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = (int)a.size();
  Mat r(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; i++)
    for (int k = 0; k < n; k++) {
      long long aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; j++) r[i][j] += aik * b[k][j];
    }
  return r;
}

std::vector<Int> mat_apply(const Mat& m, const std::vector<Int>& x) {
  int n = (int)m.size();
  if ((int)x.size() != n) fail(errc::dimension_mismatch, "matrix/vector size mismatch");
  std::vector<Int> r(n, Int(0));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (m[i][j] != 0) r[i] += Int(m[i][j]) * x[j];
  return r;
}

// reflection s_beta on fundamental coords: x -> x - <x,beta-vee> beta
Mat refl_fund_matrix(const RootSystem& rs, const Root& beta) {
  int n = rs.rank;
  Mat m = mat_identity(n);
  for (int k = 0; k < n; k++)
    for (int j = 0; j < n; j++) m[k][j] -= beta.d[j] * beta.fund[k];
  return m;
}

// same reflection on root coords: c -> c - <sum c_j alpha_j, beta-vee> b
Mat refl_root_matrix(const RootSystem& rs, const Root& beta) {
  int n = rs.rank;
  std::vector<long long> q(n, 0); // q_j = <alpha_j, beta-vee>
  for (int j = 0; j < n; j++)
    for (int i = 0; i < n; i++) q[j] += beta.d[i] * rs.cartan_matrix[j][i];
  Mat m = mat_identity(n);
  for (int k = 0; k < n; k++)
    for (int j = 0; j < n; j++) m[k][j] -= q[j] * beta.b[k];
  return m;
}

FiniteWeyl finite_reflection(const RootSystem& rs, int root_index) {
  if (root_index < 0 || root_index >= (int)rs.positive_roots.size())
    fail(errc::not_a_positive_root, "root index " + std::to_string(root_index));
  const Root& beta = rs.positive_roots[root_index];
  FiniteWeyl w;
  w.m = refl_fund_matrix(rs, beta);
  w.mi = w.m; // involution
  w.mr = refl_root_matrix(rs, beta);
  w.mri = w.mr;
  return w;
}

} // namespace

FiniteWeyl finite_identity(const RootSystem& rs) {
  FiniteWeyl w;
  w.m = w.mi = w.mr = w.mri = mat_identity(rs.rank);
  return w;
}

FiniteWeyl finite_simple_reflection(const RootSystem& rs, int simple_index) {
  if (simple_index < 0 || simple_index >= rs.rank)
    fail(errc::not_a_positive_root, "simple index " + std::to_string(simple_index));
  return finite_reflection(rs, rs.simple_root_index[simple_index]);
}

FiniteWeyl finite_compose(const FiniteWeyl& a, const FiniteWeyl& b) {
  FiniteWeyl r;
  r.m = mat_mul(a.m, b.m);
  r.mi = mat_mul(b.mi, a.mi);
  r.mr = mat_mul(a.mr, b.mr);
  r.mri = mat_mul(b.mri, a.mri);
  return r;
}

FiniteWeyl finite_inverse(const FiniteWeyl& a) { return {a.mi, a.m, a.mri, a.mr}; }

Weight finite_apply(const RootSystem& rs, const FiniteWeyl& w, const Weight& x) {
  if ((int)x.rank() != rs.rank) fail(errc::dimension_mismatch, "weight rank mismatch");
  return Weight(mat_apply(w.m, x.c));
}

std::vector<Int> finite_apply_root_coords(const FiniteWeyl& w, const std::vector<Int>& g) {
  return mat_apply(w.mr, g);
}

AffineElt identity_elt(const RootSystem& rs, long long p) {
  return {finite_identity(rs), std::vector<Int>(rs.rank, Int(0)), p};
}

AffineElt compose(const RootSystem& rs, const AffineElt& a, const AffineElt& b) {
  if (a.p != b.p) fail(errc::dimension_mismatch, "composing elements with different p");
  AffineElt r;
  r.f = finite_compose(a.f, b.f);
  r.gamma = finite_apply_root_coords(a.f, b.gamma);
  for (int i = 0; i < rs.rank; i++) r.gamma[i] += a.gamma[i];
  r.p = a.p;
  return r;
}

AffineElt inverse(const RootSystem& rs, const AffineElt& a) {
  AffineElt r;
  r.f = finite_inverse(a.f);
  r.gamma = finite_apply_root_coords(r.f, a.gamma);
  for (auto& x : r.gamma) x = -x;
  r.p = a.p;
  return r;
}

AffineElt translation_elt(const RootSystem& rs, std::vector<Int> gamma, long long p) {
  if ((int)gamma.size() != rs.rank) fail(errc::dimension_mismatch, "translation vector rank");
  return {finite_identity(rs), std::move(gamma), p};
}

Weight dot_action(const RootSystem& rs, const AffineElt& w, const Weight& lambda) {
  Weight shifted = lambda + rho(rs);
  Weight image = finite_apply(rs, w.f, shifted);
  // add p*gamma in fundamental coords: coord i of gamma is sum_j gamma_j A[j][i]
  for (int i = 0; i < rs.rank; i++) {
    Int g(0);
    for (int j = 0; j < rs.rank; j++)
      if (rs.cartan_matrix[j][i] != 0) g += w.gamma[j] * Int(rs.cartan_matrix[j][i]);
    image.c[i] += Int(w.p) * g;
  }
  return image - rho(rs);
}

AffineElt reflection_elt(const RootSystem& rs, const Reflection& s, long long p) {
  return reflection_elt(rs, s.root_index, s.n, p);
}

AffineElt reflection_elt(const RootSystem& rs, int root_index, long long n, long long p) {
  if (root_index < 0 || root_index >= (int)rs.positive_roots.size())
    fail(errc::not_a_positive_root, "root index " + std::to_string(root_index));
  const Root& beta = rs.positive_roots[root_index];
  AffineElt r;
  r.f = finite_reflection(rs, root_index);
  r.gamma.assign(rs.rank, Int(0));
  for (int i = 0; i < rs.rank; i++) r.gamma[i] = Int(n) * Int(beta.b[i]);
  r.p = p;
  return r;
}

AffineElt finite_projection(const RootSystem& rs, const AffineElt& w) {
  return {w.f, std::vector<Int>(rs.rank, Int(0)), w.p};
}

std::optional<Reflection> as_reflection(const RootSystem& rs, const AffineElt& w) {
  // finite part must be s_beta; read beta off rho - wbar(rho) = <rho,beta-vee> beta
  Weight r0 = rho(rs);
  Weight delta = r0 - finite_apply(rs, w.f, r0);
  bool all_zero = true;
  for (auto& x : delta.c)
    if (!x.is_zero()) { all_zero = false; break; }
  if (all_zero) return std::nullopt;
  for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
    const Root& beta = rs.positive_roots[k];
    bool match = true;
    for (int i = 0; i < rs.rank && match; i++)
      match = (delta.c[i] == Int(beta.co_height) * Int(beta.fund[i]));
    if (!match) continue;
    AffineElt probe = reflection_elt(rs, k, 0, w.p);
    if (probe.f != w.f) return std::nullopt;
    // gamma must be n * b(beta)
    int support = -1;
    for (int i = 0; i < rs.rank; i++)
      if (beta.b[i] != 0) { support = i; break; }
    Int n;
    try {
      n = div_exact(w.gamma[support], Int(beta.b[support]));
    } catch (const calc_error&) {
      return std::nullopt;
    }
    for (int i = 0; i < rs.rank; i++)
      if (w.gamma[i] != n * Int(beta.b[i])) return std::nullopt;
    if (!n.small()) return std::nullopt;
    return Reflection{k, n.as_ll()};
  }
  return std::nullopt;
}

std::vector<Reflection> simple_reflections_Sp(const RootSystem& rs, long long p) {
  if (p < rs.coxeter_number)
    fail(errc::p_too_small, "p = " + std::to_string(p) + " < h = " +
                                std::to_string(rs.coxeter_number));
  std::vector<Reflection> out;
  for (int i = 0; i < rs.rank; i++) out.push_back({rs.simple_root_index[i], 0});
  for (int c = 0; c < rs.component_count; c++) out.push_back({rs.highest_coroot_root[c], 1});
  return out;
}

FiniteWeyl longest_element(const RootSystem& rs, const std::vector<int>& I) {
  for (int i : I)
    if (i < 0 || i >= rs.rank) fail(errc::dimension_mismatch, "bad simple index");
  Weight v = rho(rs);
  FiniteWeyl w = finite_identity(rs);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : I) {
      if (pairing(rs, v, rs.simple_root_index[i]).sign() > 0) {
        FiniteWeyl s = finite_simple_reflection(rs, i);
        v = finite_apply(rs, s, v);
        w = finite_compose(s, w);
        moved = true;
      }
    }
  }
  return w;
}

Weight tau_weight(const RootSystem& rs, const Weight& lambda, const std::vector<int>& I) {
  Weight img = finite_apply(rs, longest_element(rs, I), lambda);
  for (auto& x : img.c) x = -x;
  return img;
}

bool finite_in_WI(const RootSystem& rs, const FiniteWeyl& w, const std::vector<int>& I) {
  Weight u = finite_apply(rs, w, rho(rs));
  FiniteWeyl prod = finite_identity(rs);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : I) {
      if (pairing(rs, u, rs.simple_root_index[i]).sign() < 0) {
        FiniteWeyl s = finite_simple_reflection(rs, i);
        u = finite_apply(rs, s, u);
        prod = finite_compose(s, prod);
        moved = true;
      }
    }
  }
  if (u != rho(rs)) return false;
  return finite_compose(prod, w) == finite_identity(rs);
}

bool finite_in_W(const RootSystem& rs, const FiniteWeyl& w) {
  std::vector<int> all(rs.rank);
  for (int i = 0; i < rs.rank; i++) all[i] = i;
  return finite_in_WI(rs, w, all);
}

ReduceResult reduce_by_walls(const RootSystem& rs, long long p, const Weight& x,
                             const std::vector<Reflection>& walls) {
  for (const Reflection& s : walls)
    if (s.n != 0 && s.n != 1)
      fail(errc::internal, "fundamental-domain walls must have n in {0,1}");
  ReduceResult res;
  res.rep = x;
  res.v = identity_elt(rs, p);
  // generous iteration guard: each application crosses one separating
  // hyperplane, so ~ sum over walls of |pairing|/p steps suffice
  long long cap = 256;
  for (const Reflection& s : walls) {
    Int c = abs(rho_pairing(rs, x, s.root_index));
    Int steps = floor_div(c, Int(p)) + Int(4);
    cap = steps.small() && cap < LLONG_MAX / 4 - steps.as_ll()
              ? cap + 4 * steps.as_ll()
              : LLONG_MAX;
  }
  for (long long iter = 0;; iter++) {
    if (iter > cap) fail(errc::internal, "wall reduction failed to terminate");
    bool violated = false;
    for (int wi = 0; wi < (int)walls.size(); wi++) {
      const Reflection& s = walls[wi];
      Int c = rho_pairing(rs, res.rep, s.root_index);
      bool bad = s.n == 0 ? c.sign() < 0 : c > Int(s.n) * Int(p);
      if (!bad) continue;
      // reflect across <.+rho, beta-vee> = n p:  x + (np - c) beta
      res.rep = add_root_multiple(rs, res.rep, s.root_index, Int(s.n) * Int(p) - c);
      res.word.push_back(wi);
      res.v = compose(rs, res.v, reflection_elt(rs, s, p));
      violated = true;
      break;
    }
    if (!violated) break;
  }
  return res;
}

} // namespace alcove
