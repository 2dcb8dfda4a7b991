#include "alcove/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

namespace {

// Cartan matrix of one irreducible factor, A[i][j] = <alpha_i, alpha_j-vee>.
std::vector<std::vector<long long>> cartan_block(char letter, int n) {
  auto chain = [&](int len) {
    std::vector<std::vector<long long>> a(len, std::vector<long long>(len, 0));
    for (int i = 0; i < len; i++) a[i][i] = 2;
    for (int i = 0; i + 1 < len; i++) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
    return a;
  };
  switch (letter) {
    case 'A':
      if (n < 1) fail(errc::unknown_type, "A_n needs n >= 1");
      return chain(n);
    case 'B': { // alpha_n short: <alpha_{n-1}, alpha_n-vee> = -2
      if (n < 2) fail(errc::unknown_type, "B_n needs n >= 2");
      auto a = chain(n);
      a[n - 2][n - 1] = -2;
      return a;
    }
    case 'C': { // transpose of B
      if (n < 2) fail(errc::unknown_type, "C_n needs n >= 2");
      auto a = chain(n);
      a[n - 1][n - 2] = -2;
      return a;
    }
    case 'D': {
      if (n < 3) fail(errc::unknown_type, "D_n needs n >= 3");
      auto a = chain(n - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(std::vector<long long>(n, 0));
      a[n - 1][n - 1] = 2;
      a[n - 3][n - 1] = -1; // last node hangs off node n-2 (0-based n-3)
      a[n - 1][n - 3] = -1;
      a[n - 2][n - 1] = 0;
      a[n - 1][n - 2] = 0;
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) fail(errc::unknown_type, "E_n needs n in {6,7,8}");
      // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4.
      std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
      for (int i = 0; i < n; i++) a[i][i] = 2;
      auto bond = [&](int i, int j) { a[i - 1][j - 1] = -1; a[j - 1][i - 1] = -1; };
      bond(1, 3);
      bond(3, 4);
      bond(2, 4);
      for (int k = 4; k < n; k++) bond(k, k + 1);
      return a;
    }
    case 'F': { // alpha_3, alpha_4 short: <alpha_2, alpha_3-vee> = -2
      if (n != 4) fail(errc::unknown_type, "F_n needs n = 4");
      auto a = chain(4);
      a[1][2] = -2;
      return a;
    }
    case 'G': { // alpha_2 long: <alpha_2, alpha_1-vee> = -3
      if (n != 2) fail(errc::unknown_type, "G_n needs n = 2");
      return {{2, -1}, {-3, 2}};
    }
    default:
      fail(errc::unknown_type, std::string("unsupported family '") + letter + "'");
  }
}

long long expected_root_count(char letter, int n) {
  switch (letter) {
    case 'A': return (long long)n * (n + 1) / 2;
    case 'B':
    case 'C': return (long long)n * n;
    case 'D': return (long long)n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

// exact inverse of the transpose of the Cartan matrix, by Gauss elimination
std::vector<std::vector<Rat>> invert_transpose(const std::vector<std::vector<long long>>& a) {
  int n = (int)a.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) m[i][j] = Rat(Int(a[j][i])); // transpose
  for (int i = 0; i < n; i++) m[i][n + i] = Rat(1);
  for (int col = 0; col < n; col++) {
    int piv = -1;
    for (int r = col; r < n; r++)
      if (!m[r][col].is_zero()) { piv = r; break; }
    if (piv < 0) fail(errc::internal, "singular Cartan matrix");
    std::swap(m[col], m[piv]);
    Rat inv = Rat(1) / m[col][col];
    for (auto& x : m[col]) x = x * inv;
    for (int r = 0; r < n; r++) {
      if (r == col || m[r][col].is_zero()) continue;
      Rat f = m[r][col];
      for (int j = 0; j < 2 * n; j++) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) inv[i][j] = m[i][n + j];
  return inv;
}

} // namespace

std::string RootSystem::type_string() const {
  std::string s;
  for (size_t k = 0; k < cartan_type.size(); k++) {
    if (k) s += "x";
    s += cartan_type[k].first;
    s += std::to_string(cartan_type[k].second);
  }
  return s;
}

RootSystem build_root_system(const std::vector<std::pair<char, int>>& type_spec) {
  if (type_spec.empty()) fail(errc::unknown_type, "empty type specification");
  RootSystem rs;
  rs.cartan_type = type_spec;
  for (auto& [letter, n] : type_spec) rs.rank += n;
  if (rs.rank > kRankCap)
    fail(errc::unknown_type, "total rank " + std::to_string(rs.rank) +
                                 " exceeds cap " + std::to_string(kRankCap));

  // block-diagonal Cartan matrix, and component bookkeeping
  rs.cartan_matrix.assign(rs.rank, std::vector<long long>(rs.rank, 0));
  rs.component_of.assign(rs.rank, 0);
  int off = 0;
  for (auto& [letter, n] : type_spec) {
    auto block = cartan_block(letter, n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) rs.cartan_matrix[off + i][off + j] = block[i][j];
    for (int i = 0; i < n; i++) rs.component_of[off + i] = rs.component_count;
    rs.component_count++;
    off += n;
  }
  const auto& A = rs.cartan_matrix;
  int r = rs.rank;

  // close the simple (root, coroot) pairs under simple reflections:
  //   s_i(beta):  b' = b - (sum_j b_j A[j][i]) e_i
  //   s_i(beta-vee): d' = d - (sum_j d_j A[i][j]) e_i
  std::map<std::vector<long long>, std::vector<long long>> seen; // b -> d
  std::vector<std::pair<std::vector<long long>, std::vector<long long>>> queue;
  for (int i = 0; i < r; i++) {
    std::vector<long long> b(r, 0), d(r, 0);
    b[i] = 1;
    d[i] = 1;
    seen.emplace(b, d);
    queue.push_back({b, d});
  }
  while (!queue.empty()) {
    auto [b, d] = queue.back();
    queue.pop_back();
    for (int i = 0; i < r; i++) {
      long long pb = 0, pd = 0;
      for (int j = 0; j < r; j++) {
        pb += b[j] * A[j][i];
        pd += d[j] * A[i][j];
      }
      auto b2 = b;
      auto d2 = d;
      b2[i] -= pb;
      d2[i] -= pd;
      if (seen.emplace(b2, d2).second) queue.push_back({b2, d2});
    }
  }

  for (auto& [b, d] : seen) {
    bool pos = true, neg = true;
    for (long long x : b) {
      if (x > 0) neg = false;
      if (x < 0) pos = false;
    }
    if (!pos && !neg) fail(errc::internal, "mixed-sign root generated");
    if (!pos) continue;
    Root root;
    root.b = b;
    root.d = d;
    root.fund.assign(r, 0);
    for (int i = 0; i < r; i++)
      for (int j = 0; j < r; j++) root.fund[i] += b[j] * A[j][i];
    root.height = 0;
    root.co_height = 0;
    for (long long x : b) root.height += x;
    for (long long x : d) root.co_height += x;
    rs.positive_roots.push_back(std::move(root));
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const Root& x, const Root& y) {
              if (x.height != y.height) return x.height < y.height;
              return x.b < y.b;
            });

  long long want = 0;
  for (auto& [letter, n] : type_spec) want += expected_root_count(letter, n);
  if ((long long)rs.positive_roots.size() != want)
    fail(errc::internal, "reflection closure produced " +
                             std::to_string(rs.positive_roots.size()) +
                             " positive roots, expected " + std::to_string(want));

  rs.simple_root_index.assign(r, -1);
  for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
    const Root& root = rs.positive_roots[k];
    if (root.height == 1)
      for (int i = 0; i < r; i++)
        if (root.b[i] == 1) rs.simple_root_index[i] = k;
  }

  // highest coroot per component, and the Coxeter number
  rs.highest_coroot_root.assign(rs.component_count, -1);
  std::vector<long long> best(rs.component_count, -1);
  for (int k = 0; k < (int)rs.positive_roots.size(); k++) {
    const Root& root = rs.positive_roots[k];
    int comp = -1;
    for (int i = 0; i < r; i++)
      if (root.b[i] != 0) { comp = rs.component_of[i]; break; }
    if (root.co_height > best[comp]) {
      best[comp] = root.co_height;
      rs.highest_coroot_root[comp] = k;
    }
  }
  for (int c = 0; c < rs.component_count; c++)
    rs.coxeter_number = std::max(rs.coxeter_number, best[c] + 1);

  rs.fund_to_root = invert_transpose(A);
  return rs;
}

RootSystem parse_root_system(const std::string& spec) {
  std::vector<std::pair<char, int>> ts;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) fail(errc::unknown_type, "empty type token in '" + spec + "'");
    char letter = token[0];
    if (letter >= 'a' && letter <= 'z') letter = (char)(letter - 'a' + 'A');
    if (token.size() < 2) fail(errc::unknown_type, "missing rank in '" + token + "'");
    int n = 0;
    for (size_t i = 1; i < token.size(); i++) {
      if (token[i] < '0' || token[i] > '9')
        fail(errc::unknown_type, "bad rank in '" + token + "'");
      n = n * 10 + (token[i] - '0');
    }
    ts.push_back({letter, n});
    token.clear();
  };
  for (char ch : spec) {
    if (ch == ',' || ch == 'x' || ch == 'X') flush();
    else if (ch != ' ') token += ch;
  }
  flush();
  return build_root_system(ts);
}

Weight weight_from_ll(std::vector<long long> coords) {
  std::vector<Int> c(coords.begin(), coords.end());
  return Weight(std::move(c));
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) fail(errc::dimension_mismatch, "weight rank mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] += b.c[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) fail(errc::dimension_mismatch, "weight rank mismatch");
  Weight r = a;
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] -= b.c[i];
  return r;
}

std::string Weight::str() const {
  std::string s;
  for (size_t i = 0; i < c.size(); i++) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s;
}

Weight rho(const RootSystem& rs) {
  return Weight(std::vector<Int>(rs.rank, Int(1)));
}

Weight zero_weight(const RootSystem& rs) {
  return Weight(std::vector<Int>(rs.rank, Int(0)));
}

Int pairing(const RootSystem& rs, const Weight& lambda, int root_index) {
  if ((int)lambda.rank() != rs.rank) fail(errc::dimension_mismatch, "weight rank mismatch");
  if (root_index < 0 || root_index >= (int)rs.positive_roots.size())
    fail(errc::not_a_positive_root, "root index " + std::to_string(root_index));
  const Root& beta = rs.positive_roots[root_index];
  Int s = 0;
  for (int i = 0; i < rs.rank; i++) s += lambda.c[i] * Int(beta.d[i]);
  return s;
}

Int rho_pairing(const RootSystem& rs, const Weight& lambda, int root_index) {
  const Root& beta = rs.positive_roots[root_index];
  return pairing(rs, lambda, root_index) + Int(beta.co_height);
}

Weight add_root_multiple(const RootSystem& rs, const Weight& lambda, int root_index, const Int& t) {
  const Root& beta = rs.positive_roots[root_index];
  Weight r = lambda;
  for (int i = 0; i < rs.rank; i++) r.c[i] += t * Int(beta.fund[i]);
  return r;
}

bool in_root_lattice(const RootSystem& rs, const Weight& w, std::vector<Int>* coords_out) {
  std::vector<Rat> b(rs.rank);
  for (int i = 0; i < rs.rank; i++) {
    Rat s;
    for (int j = 0; j < rs.rank; j++) s += rs.fund_to_root[i][j] * Rat(w.c[j]);
    b[i] = s;
  }
  std::vector<Int> out(rs.rank);
  for (int i = 0; i < rs.rank; i++) {
    if (!b[i].is_integer()) return false;
    out[i] = b[i].num();
  }
  if (coords_out) *coords_out = std::move(out);
  return true;
}

bool is_dominant(const RootSystem& rs, const Weight& nu) {
  for (int k = 0; k < (int)rs.positive_roots.size(); k++)
    if (rho_pairing(rs, nu, k).sign() < 0) return false;
  return true;
}

bool is_regular(const RootSystem& rs, const Weight& nu, long long p) {
  for (int k = 0; k < (int)rs.positive_roots.size(); k++)
    if (floor_mod(rho_pairing(rs, nu, k), Int(p)).is_zero()) return false;
  return true;
}

int find_root(const RootSystem& rs, const std::vector<long long>& b) {
  for (int k = 0; k < (int)rs.positive_roots.size(); k++)
    if (rs.positive_roots[k].b == b) return k;
  return -1;
}

} // namespace alcove
