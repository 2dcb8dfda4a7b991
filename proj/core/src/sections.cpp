#include "alcove/sections.hpp"

namespace alcove {

const char* section_kind_name(SectionKind k) {
  return k == SectionKind::deltabar ? "DELTABAR" : "DELTA";
}

SectionKind parse_section_kind(const std::string& s) {
  if (s == "DELTABAR" || s == "deltabar") return SectionKind::deltabar;
  if (s == "DELTA" || s == "delta") return SectionKind::delta;
  fail(errc::unknown_type, "unknown section kind '" + s + "'");
}

void SectionSkeleton::add(const Weight& label, long long n) {
  if (n == 0) return;
  auto it = sizes.find(label);
  if (it == sizes.end()) {
    sizes.emplace(label, n);
  } else {
    it->second += n;
    if (it->second == 0) sizes.erase(it);
  }
}

SectionSkeleton skeleton_from_char(const GVector& M, SectionKind kind, const LeviDatum& L) {
  for (const auto& [label, coeff] : M.terms)
    if (coeff.sign() < 0)
      fail(errc::negative_coefficient,
           "coefficient of (" + label.str() + ") is " + coeff.str());
  GVector conv =
      convert_basis(M, kind == SectionKind::deltabar ? Basis::nabla : Basis::zbar, L);
  SectionSkeleton sk;
  sk.kind = kind;
  for (const auto& [label, coeff] : conv.terms) {
    if (!coeff.is_integer() || coeff.sign() < 0)
      fail(errc::negative_coefficient, "multiplicity of (" + label.str() + ") is " +
                                           coeff.str() + ", not a nonnegative integer");
    if (!coeff.num().small()) fail(errc::bound_exceeded, "multiplicity overflows");
    sk.add(label, coeff.num().as_ll());
  }
  return sk;
}

namespace {

void require_deltabar(const SectionSkeleton& sk) {
  if (sk.kind != SectionKind::deltabar)
    fail(errc::wrong_basis, "only proper-standard (DELTABAR) skeletons cross the wall");
}

} // namespace

SectionSkeleton onto_wall_transform(const SectionSkeleton& sk, const WallSetup& setup,
                                    const LeviDatum& L) {
  require_deltabar(sk);
  const RootSystem& rs = *L.rs;
  AffineElt s_elt = reflection_elt(rs, setup.s, L.p);
  SectionSkeleton out;
  out.kind = SectionKind::deltabar;
  for (const auto& [xi, n] : sk.sizes) {
    ReduceResult rr;
    try {
      rr = reduce_to_C(rs, xi, L.p);
    } catch (const calc_error& e) {
      if (e.code() == errc::wall_point)
        fail(errc::wrong_block, "label (" + xi.str() + ") lies on a wall");
      throw;
    }
    if (!(rr.rep == setup.lambda_star))
      fail(errc::wrong_block, "label (" + xi.str() + ") is not in the block of (" +
                                  setup.lambda_star.str() + ")");
    AffineElt conj = compose(rs, compose(rs, rr.v, s_elt), inverse(rs, rr.v));
    Weight target = orbit_rep(dot_action(rs, rr.v, setup.mu), L).rep;
    out.add(target, in_WIp(rs, conj, L) ? 2 * n : n);
  }
  return out;
}

SectionSkeleton off_wall_transform(const SectionSkeleton& sk, const WallSetup& setup,
                                   const LeviDatum& L) {
  require_deltabar(sk);
  const RootSystem& rs = *L.rs;
  AffineElt s_elt = reflection_elt(rs, setup.s, L.p);
  SectionSkeleton out;
  out.kind = SectionKind::deltabar;
  for (const auto& [xi, n] : sk.sizes) {
    ReduceResult rr = reduce_by_walls(rs, L.p, xi, simple_reflections_Sp(rs, L.p));
    if (!(rr.rep == setup.mu))
      fail(errc::wrong_block, "label (" + xi.str() + ") is not in the wall block of (" +
                                  setup.mu.str() + ")");
    AffineElt conj = compose(rs, compose(rs, rr.v, s_elt), inverse(rs, rr.v));
    out.add(orbit_rep(dot_action(rs, rr.v, setup.lambda_star), L).rep, n);
    if (!in_WIp(rs, conj, L))
      out.add(orbit_rep(dot_action(rs, compose(rs, rr.v, s_elt), setup.lambda_star), L).rep, n);
  }
  return out;
}

SectionSkeleton deltabar_to_delta(const SectionSkeleton& sk, const LeviDatum& L) {
  if (sk.kind != SectionKind::deltabar)
    fail(errc::wrong_basis, "expected a DELTABAR skeleton");
  SectionSkeleton out;
  out.kind = SectionKind::delta;
  for (const auto& [label, n] : sk.sizes) out.add(label, n * N_I(label, L));
  return out;
}

SectionSkeleton delta_to_deltabar(const SectionSkeleton& sk, const LeviDatum& L) {
  if (sk.kind != SectionKind::delta)
    fail(errc::wrong_basis, "expected a DELTA skeleton");
  SectionSkeleton out;
  out.kind = SectionKind::deltabar;
  for (const auto& [label, n] : sk.sizes) {
    long long m = N_I(label, L);
    if (n % m != 0)
      fail(errc::not_divisible, "size " + std::to_string(n) + " at (" + label.str() +
                                    ") is not divisible by N_I = " + std::to_string(m));
    out.add(label, n / m);
  }
  return out;
}

} // namespace alcove
