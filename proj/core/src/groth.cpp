#include "alcove/groth.hpp"

#include <algorithm>

#include "alcove/alcoves.hpp"

namespace alcove {

const char* basis_name(Basis b) { return b == Basis::zbar ? "ZBAR" : "NABLA"; }

Basis parse_basis(const std::string& s) {
  if (s == "ZBAR" || s == "zbar") return Basis::zbar;
  if (s == "NABLA" || s == "nabla") return Basis::nabla;
  fail(errc::wrong_basis, "unknown basis tag '" + s + "'");
}

void GVector::add(const Weight& label, const Rat& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms.find(label);
  if (it == terms.end()) {
    terms.emplace(label, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

GVector scale(const GVector& v, const Rat& c) {
  GVector out;
  out.basis = v.basis;
  out.block = v.block;
  if (c.is_zero()) return out;
  for (const auto& [label, coeff] : v.terms) out.terms.emplace(label, coeff * c);
  return out;
}

GVector add(const GVector& a, const GVector& b) {
  if (a.basis != b.basis) fail(errc::wrong_basis, "cannot add vectors in different bases");
  if (!(a.block == b.block)) fail(errc::wrong_block, "cannot add vectors from different blocks");
  GVector out = a;
  for (const auto& [label, coeff] : b.terms) out.add(label, coeff);
  return out;
}

namespace {

void require_basis(const GVector& v, Basis want) {
  if (v.basis != want)
    fail(errc::wrong_basis, std::string("expected a ") + basis_name(want) +
                                "-basis vector, got " + basis_name(v.basis));
}

void require_rep(const Weight& label, const LeviDatum& L) {
  if (!(orbit_rep(label, L).rep == label))
    fail(errc::not_in_ci, "label (" + label.str() + ") is not the representative of its "
                          "W_{I,p} orbit");
}

// the unique W_p element carrying lambda_star to the regular label nu
AffineElt regular_witness(const Weight& nu, const Weight& lambda_star, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  ReduceResult rr;
  try {
    rr = reduce_to_C(rs, nu, L.p);
  } catch (const calc_error& e) {
    if (e.code() == errc::wall_point)
      fail(errc::wrong_block, "label (" + nu.str() + ") lies on a wall, not in the regular block");
    throw;
  }
  if (!(rr.rep == lambda_star))
    fail(errc::wrong_block, "label (" + nu.str() + ") reduces to (" + rr.rep.str() +
                                "), not to the block anchor (" + lambda_star.str() + ")");
  return rr.v;
}

// a W_p element carrying mu to the wall label xi (unique up to the wall
// stabilizer {1, s}, which every use below is insensitive to)
AffineElt wall_witness(const Weight& xi, const WallSetup& setup, const LeviDatum& L) {
  const RootSystem& rs = *L.rs;
  ReduceResult rr = reduce_by_walls(rs, L.p, xi, simple_reflections_Sp(rs, L.p));
  if (!(rr.rep == setup.mu))
    fail(errc::wrong_block, "label (" + xi.str() + ") reduces to (" + rr.rep.str() +
                                "), not to the wall weight (" + setup.mu.str() + ")");
  return rr.v;
}

void check_anchor(const GVector& v, const Weight& want) {
  if (!(v.block == want))
    fail(errc::wrong_block, "vector is anchored at (" + v.block.str() +
                                ") but the translation expects (" + want.str() + ")");
}

} // namespace

GVector convert_basis(const GVector& v, Basis target, const LeviDatum& L) {
  GVector out;
  out.basis = target;
  out.block = v.block;
  if (v.basis == target) {
    out.terms = v.terms;
    return out;
  }
  for (const auto& [label, coeff] : v.terms) {
    require_rep(label, L);
    Rat n(Int(N_I(label, L)), Int(1));
    out.add(label, target == Basis::zbar ? coeff * n : coeff / n);
  }
  return out;
}

GVector translate(const GVector& v, const TransSpec& spec) {
  const LeviDatum& L = spec.L;
  const RootSystem& rs = *L.rs;
  require_basis(v, Basis::zbar);
  AffineElt s_elt = reflection_elt(rs, spec.setup.s, L.p);
  GVector out;
  out.basis = Basis::zbar;
  if (spec.direction == Direction::onto_wall) {
    check_anchor(v, orbit_rep(spec.setup.lambda_star, L).rep);
    out.block = orbit_rep(spec.setup.mu, L).rep;
    for (const auto& [nu, coeff] : v.terms) {
      require_rep(nu, L);
      AffineElt w = regular_witness(nu, spec.setup.lambda_star, L);
      out.add(orbit_rep(dot_action(rs, w, spec.setup.mu), L).rep, coeff);
    }
  } else {
    check_anchor(v, orbit_rep(spec.setup.mu, L).rep);
    out.block = orbit_rep(spec.setup.lambda_star, L).rep;
    for (const auto& [xi, coeff] : v.terms) {
      require_rep(xi, L);
      AffineElt w = wall_witness(xi, spec.setup, L);
      out.add(orbit_rep(dot_action(rs, w, spec.setup.lambda_star), L).rep, coeff);
      out.add(orbit_rep(dot_action(rs, compose(rs, w, s_elt), spec.setup.lambda_star), L).rep,
              coeff);
    }
  }
  return out;
}

GVector theta_s(const GVector& v, const WallSetup& setup, const LeviDatum& L) {
  GVector onto = translate(v, {Direction::onto_wall, setup, L});
  return translate(onto, {Direction::off_wall, setup, L});
}

GVector translate_standard(const GVector& v, const TransSpec& spec) {
  const LeviDatum& L = spec.L;
  const RootSystem& rs = *L.rs;
  require_basis(v, Basis::nabla);
  AffineElt s_elt = reflection_elt(rs, spec.setup.s, L.p);
  GVector out;
  out.basis = Basis::nabla;
  if (spec.direction == Direction::onto_wall) {
    check_anchor(v, orbit_rep(spec.setup.lambda_star, L).rep);
    out.block = orbit_rep(spec.setup.mu, L).rep;
    for (const auto& [nu, coeff] : v.terms) {
      require_rep(nu, L);
      AffineElt w = regular_witness(nu, spec.setup.lambda_star, L);
      AffineElt conj = compose(rs, compose(rs, w, s_elt), inverse(rs, w));
      Rat mult = in_WIp(rs, conj, L) ? Rat(Int(2), Int(1)) : Rat(Int(1), Int(1));
      out.add(orbit_rep(dot_action(rs, w, spec.setup.mu), L).rep, coeff * mult);
    }
  } else {
    check_anchor(v, orbit_rep(spec.setup.mu, L).rep);
    out.block = orbit_rep(spec.setup.lambda_star, L).rep;
    for (const auto& [xi, coeff] : v.terms) {
      require_rep(xi, L);
      AffineElt w = wall_witness(xi, spec.setup, L);
      AffineElt conj = compose(rs, compose(rs, w, s_elt), inverse(rs, w));
      out.add(orbit_rep(dot_action(rs, w, spec.setup.lambda_star), L).rep, coeff);
      if (!in_WIp(rs, conj, L))
        out.add(orbit_rep(dot_action(rs, compose(rs, w, s_elt), spec.setup.lambda_star), L).rep,
                coeff);
    }
  }
  return out;
}

long long hom_dim(HomKind kind, const Weight& xi, const GVector& M, const LeviDatum& L) {
  for (const auto& [label, coeff] : M.terms)
    if (coeff.sign() < 0)
      fail(errc::negative_coefficient, "coefficient of (" + label.str() + ") is " + coeff.str());
  Basis want = kind == HomKind::deltabar ? Basis::nabla : Basis::zbar;
  GVector conv = convert_basis(M, want, L);
  auto it = conv.terms.find(xi);
  if (it == conv.terms.end()) return 0;
  if (!it->second.is_integer())
    fail(errc::check_failed, "multiplicity of (" + xi.str() + ") is the non-integer " +
                                 it->second.str() + "; the declared filtration cannot exist");
  Int n = it->second.num();
  if (!n.small()) fail(errc::bound_exceeded, "multiplicity overflows");
  return n.as_ll();
}

} // namespace alcove
