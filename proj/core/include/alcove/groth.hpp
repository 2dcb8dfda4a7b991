#pragma once

// Exact vectors in the Grothendieck group of a linkage class, in either the
// baby-Verma basis [Zbar(nu)] or the costandard basis [nabla(nu)], with the
// wall-translation and wall-crossing operators acting on them.

#include <map>

#include "alcove/levi.hpp"

namespace alcove {

enum class Basis { zbar, nabla };

const char* basis_name(Basis b);
Basis parse_basis(const std::string& s);

struct GVector {
  Basis basis = Basis::zbar;
  Weight block;                // orbit rep anchoring the linkage class
  std::map<Weight, Rat> terms; // orbit rep -> coefficient, zeros dropped

  void add(const Weight& label, const Rat& coeff);
  bool operator==(const GVector& o) const {
    return basis == o.basis && block == o.block && terms == o.terms;
  }
};

GVector scale(const GVector& v, const Rat& c);
GVector add(const GVector& a, const GVector& b);

enum class Direction { onto_wall, off_wall };

struct TransSpec {
  Direction direction;
  WallSetup setup;
  LeviDatum L;
};

// [nabla(nu)] = N_I(nu) * [Zbar(nu)] per label
GVector convert_basis(const GVector& v, Basis target, const LeviDatum& L);

// translation on the Zbar basis: onto_wall sends [Zbar(rep(w.lambda_star))]
// to [Zbar(rep(w.mu))]; off_wall sends [Zbar(rep(w.mu))] to the sum of
// [Zbar(rep(w.lambda_star))] and [Zbar(rep(ws.lambda_star))]
GVector translate(const GVector& v, const TransSpec& spec);

// wall-crossing Theta_s = off_wall . onto_wall
GVector theta_s(const GVector& v, const WallSetup& setup, const LeviDatum& L);

// translation on the nabla basis via the closed-form multiplicities: the
// count doubles (onto) or collapses to a single label (off) exactly when
// w s w^-1 lies in W_{I,p}
GVector translate_standard(const GVector& v, const TransSpec& spec);

enum class HomKind { delta, deltabar };

// filtration multiplicities read off as coefficients: (M : nabla(xi)) in the
// NABLA basis for Hom(deltabar, -), (M : zbar(xi)) in the ZBAR basis for
// Hom(delta, -)
long long hom_dim(HomKind kind, const Weight& xi, const GVector& M, const LeviDatum& L);

} // namespace alcove
