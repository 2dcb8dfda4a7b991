#include "alcove/tilting.hpp"

#include <algorithm>
#include <map>

namespace alcove {

namespace {

// facet of the alcove of x on its lower side with n >= 1, smallest root
// index; such a facet exists whenever d(x) > 0
std::optional<WallDatum> descent_facet(const RootSystem& rs, const Weight& x, long long p) {
  for (const WallDatum& w : walls_of_alcove(rs, x, p))
    if (w.side == WallSide::down && w.n >= 1) return w;
  return std::nullopt;
}

AffineElt word_product(const RootSystem& rs, const std::vector<Reflection>& letters, long long p) {
  AffineElt w = identity_elt(rs, p);
  for (const Reflection& s : letters) w = compose(rs, w, reflection_elt(rs, s, p));
  return w;
}

} // namespace

ReducedWord domexp_word(const Weight& nu, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  const long long p = L.p;

  ReduceResult to_C;
  try {
    to_C = reduce_to_C(rs, nu, p);
  } catch (const calc_error& e) {
    if (e.code() == errc::wall_point)
      fail(errc::not_regular, "(" + nu.str() + ") lies on a wall");
    throw;
  }
  if (!(orbit_rep(nu, L).rep == nu))
    fail(errc::not_in_ci, "(" + nu.str() + ") is not its own W_{I,p}-orbit representative");
  if (!is_dominant(rs, nu)) fail(errc::not_dominant, "(" + nu.str() + ") is not dominant");

  ReducedWord out;
  out.base = to_C.rep;

  // top-down gallery: cross a qualifying lower facet until depth zero
  std::vector<Reflection> raws; // r_1 ... r_k, applied to nu in this order
  Weight x = nu;
  while (!d_value(rs, x, p).is_zero()) {
    std::optional<WallDatum> facet = descent_facet(rs, x, p);
    if (!facet) fail(errc::internal, "positive depth but no qualifying facet");
    Reflection r{facet->root_index, facet->n};
    raws.push_back(r);
    x = dot_action(rs, reflection_elt(rs, r, p), x);
  }
  if (!(x == out.base)) fail(errc::internal, "gallery did not land on the block base");

  // s_i is raw r_{k-i+1} conjugated by the tail r_{k-i+2}...r_k, which drags
  // the crossed facet back to a wall of the fundamental alcove
  const int k = (int)raws.size();
  std::vector<Reflection> sp = simple_reflections_Sp(rs, p);
  Weight prev = out.base;
  AffineElt tail = identity_elt(rs, p); // r_{k-i+2} ... r_k as one element
  for (int i = 1; i <= k; i++) {
    const Reflection& raw = raws[k - i];
    AffineElt raw_elt = reflection_elt(rs, raw, p);
    AffineElt letter_elt = compose(rs, compose(rs, inverse(rs, tail), raw_elt), tail);
    std::optional<Reflection> letter = as_reflection(rs, letter_elt);
    if (!letter || std::find(sp.begin(), sp.end(), *letter) == sp.end())
      fail(errc::internal, "conjugated crossing is not a wall of the fundamental alcove");
    out.letters.push_back(*letter);

    Weight target = dot_action(rs, raw_elt, prev);
    out.prefix_targets.push_back(target);
    out.ascent_ok.push_back(single_reflection_compare(rs, raw, prev, p) == OrderRel::above);
    out.regularity_ok.push_back(!in_WIp(rs, raw_elt, L));
    prev = target;
    tail = compose(rs, raw_elt, tail);
  }
  if (!(prev == nu)) fail(errc::internal, "prefix chain did not end at the input weight");
  for (int i = 0; i < k; i++)
    if (!out.ascent_ok[i] || !out.regularity_ok[i])
      fail(errc::check_failed, "descent word certificate " + std::to_string(i + 1) + " failed");
  return out;
}

void recheck_word(const ReducedWord& word, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  const long long p = L.p;
  const int n = (int)word.letters.size();
  if ((int)word.prefix_targets.size() != n || (int)word.ascent_ok.size() != n ||
      (int)word.regularity_ok.size() != n)
    fail(errc::dimension_mismatch, "word fields disagree in length");
  std::vector<Reflection> prefix;
  Weight prev = word.base;
  for (int i = 0; i < n; i++) {
    prefix.push_back(word.letters[i]);
    AffineElt w = word_product(rs, prefix, p);
    Weight target = dot_action(rs, w, word.base);
    if (!(target == word.prefix_targets[i]))
      fail(errc::check_failed, "prefix target " + std::to_string(i + 1) + " does not match");
    // t = s_1..s_{i-1} s_i s_{i-1}..s_1 carries prefix i-1 to prefix i
    AffineElt head = word_product(rs, {prefix.begin(), prefix.end() - 1}, p);
    AffineElt t = compose(rs, compose(rs, head, reflection_elt(rs, word.letters[i], p)),
                          inverse(rs, head));
    std::optional<Reflection> tr = as_reflection(rs, t);
    if (!tr) fail(errc::check_failed, "palindromic conjugate is not a reflection");
    bool ascent = single_reflection_compare(rs, *tr, prev, p) == OrderRel::above;
    bool regular = !in_WIp(rs, t, L);
    if (ascent != (bool)word.ascent_ok[i] || regular != (bool)word.regularity_ok[i])
      fail(errc::check_failed, "stored certificate " + std::to_string(i + 1) +
                                   " disagrees with recomputation");
    prev = target;
  }
}

GVector theta_product_char(const ReducedWord& word, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  ReduceResult base_check;
  try {
    base_check = reduce_to_C(rs, word.base, L.p);
  } catch (const calc_error& e) {
    if (e.code() == errc::wall_point)
      fail(errc::not_regular, "base (" + word.base.str() + ") lies on a wall");
    throw;
  }
  if (!(base_check.rep == word.base))
    fail(errc::not_regular, "base (" + word.base.str() + ") is not in the fundamental alcove");

  GVector v;
  v.basis = Basis::zbar;
  v.block = orbit_rep(word.base, L).rep;
  v.add(v.block, Rat(Int(N_I(word.base, L))));

  std::map<Reflection, WallSetup, bool (*)(const Reflection&, const Reflection&)> cache(
      [](const Reflection& a, const Reflection& b) {
        return a.root_index != b.root_index ? a.root_index < b.root_index : a.n < b.n;
      });
  for (const Reflection& s : word.letters) {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, choose_mu(s, rs, L.p)).first;
    WallSetup setup = it->second;
    setup.lambda_star = word.base;
    v = theta_s(v, setup, L);
  }
  return v;
}

TiltSummandReport tilt_summand_check(const ReducedWord& word, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  recheck_word(word, L);
  GVector character = convert_basis(theta_product_char(word, L), Basis::nabla, L);
  Weight top = word.letters.empty() ? word.base : word.prefix_targets.back();
  top = orbit_rep(top, L).rep;

  TiltSummandReport report;
  report.top = top;
  Int top_d = d_value(rs, top, L.p);
  if (!top_d.small()) fail(errc::bound_exceeded, "depth overflows");
  report.top_d = top_d.as_ll();

  auto it = character.terms.find(top);
  if (it == character.terms.end() || it->second != Rat(Int(1)))
    fail(errc::check_failed, "coefficient at the target (" + top.str() + ") is " +
                                 (it == character.terms.end() ? std::string("0")
                                                              : it->second.str()) +
                                 ", not 1");
  for (const auto& [label, coeff] : character.terms) {
    if (label == top) continue;
    if (!(d_value(rs, label, L.p) < top_d))
      fail(errc::check_failed, "support label (" + label.str() +
                                   ") is not strictly below the target depth");
  }
  report.residual = character;
  report.residual.add(top, Rat(Int(-1)));
  return report;
}

WallCrossDecomp refl_transwall_decompose(const Weight& nu, const Reflection& s,
                                         const Weight& lambda_star, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  ReduceResult rr;
  try {
    rr = reduce_to_C(rs, nu, L.p);
  } catch (const calc_error& e) {
    if (e.code() == errc::wall_point)
      fail(errc::not_regular, "(" + nu.str() + ") lies on a wall");
    throw;
  }
  if (!(rr.rep == lambda_star))
    fail(errc::wrong_block, "(" + nu.str() + ") is not linked to (" + lambda_star.str() + ")");
  if (!(orbit_rep(nu, L).rep == nu))
    fail(errc::not_in_ci, "(" + nu.str() + ") is not its own orbit representative");

  AffineElt w = rr.v;
  AffineElt s_elt = reflection_elt(rs, s, L.p);
  AffineElt conj = compose(rs, compose(rs, w, s_elt), inverse(rs, w));

  WallCrossDecomp out;
  if (in_WIp(rs, conj, L)) {
    out.tag = "double";
    out.parts = {nu, nu};
    return out;
  }
  std::optional<Reflection> cr = as_reflection(rs, conj);
  if (!cr) fail(errc::internal, "conjugate of a reflection is not a reflection");
  if (single_reflection_compare(rs, *cr, nu, L.p) == OrderRel::below) {
    // partner ws.lambda_star sits below: crossing down then up doubles
    out.tag = "double";
    out.parts = {nu, nu};
    return out;
  }
  Weight partner = orbit_rep(dot_action(rs, conj, nu), L).rep;
  out.tag = "one-plus-lower";
  out.parts = {partner};
  out.has_remainder = true;
  Int bound = d_value(rs, partner, L.p);
  if (!bound.small()) fail(errc::bound_exceeded, "depth overflows");
  out.remainder_d_bound = bound.as_ll();
  return out;
}

void validate_tilting_table(const TiltingTable& table, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  for (const auto& [label, gv] : table.entries) {
    if (gv.basis != Basis::zbar)
      fail(errc::wrong_basis, "table entry (" + label.str() + ") is not in the ZBAR basis");
    auto it = gv.terms.find(label);
    if (it == gv.terms.end() || it->second != Rat(Int(1)))
      fail(errc::check_failed, "table entry (" + label.str() + ") lacks coefficient 1 at itself");
    for (const auto& [xi, coeff] : gv.terms)
      if (!uparrow_leq(rs, xi, label, L.p))
        fail(errc::check_failed, "table entry (" + label.str() + ") has support (" + xi.str() +
                                     ") outside the downward order ideal");
  }
}

std::map<Weight, long long> greedy_peel(const GVector& character, const TiltingTable& table,
                                        const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  GVector rest = convert_basis(character, Basis::zbar, L);
  std::map<Weight, long long> mult;
  while (!rest.terms.empty()) {
    // deepest label first; lexicographic among equals for determinism
    const Weight* pick = nullptr;
    Int best_d;
    for (const auto& [label, coeff] : rest.terms) {
      Int d = d_value(rs, label, L.p);
      if (!pick || best_d < d) {
        pick = &label;
        best_d = d;
      }
    }
    Weight label = *pick;
    Rat coeff = rest.terms.at(label);
    if (coeff.sign() < 0 || !coeff.is_integer())
      fail(errc::peel_failed, "coefficient at (" + label.str() + ") is " + coeff.str());
    auto entry = table.entries.find(label);
    if (entry == table.entries.end())
      fail(errc::missing_entry, "no table entry for (" + label.str() + ")");
    for (const auto& [xi, c] : entry->second.terms) rest.add(xi, -(coeff * c));
    if (!coeff.num().small()) fail(errc::bound_exceeded, "multiplicity overflows");
    mult[label] = coeff.num().as_ll();
  }
  return mult;
}

std::pair<long long, long long> section_sizes_for_hom_bases(const Weight& nu, const GVector& M,
                                                            const LeviDatum& L) {
  return {hom_dim(HomKind::delta, nu, M, L), hom_dim(HomKind::deltabar, nu, M, L)};
}

} // namespace alcove
