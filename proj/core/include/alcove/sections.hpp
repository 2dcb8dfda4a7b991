#pragma once

// Cardinality bookkeeping for the morphism families ("sections") that pick a
// basis of Hom(deltabar(xi), M) or Hom(delta(xi), M) out of a costandard
// flag, and how those counts move across a wall.

#include "alcove/groth.hpp"

namespace alcove {

enum class SectionKind { deltabar, delta };

const char* section_kind_name(SectionKind k);
SectionKind parse_section_kind(const std::string& s);

struct SectionSkeleton {
  SectionKind kind = SectionKind::deltabar;
  std::map<Weight, long long> sizes; // label -> family size, zeros dropped

  void add(const Weight& label, long long n);
  bool operator==(const SectionSkeleton& o) const {
    return kind == o.kind && sizes == o.sizes;
  }
};

// sizes[xi] = (M : nabla(xi)) for deltabar, (M : zbar(xi)) for delta
SectionSkeleton skeleton_from_char(const GVector& M, SectionKind kind, const LeviDatum& L);

// onto the wall: one copy at rep(w.mu), doubled when the conjugate
// w s w^-1 lands in W_{I,p}
SectionSkeleton onto_wall_transform(const SectionSkeleton& sk, const WallSetup& setup,
                                    const LeviDatum& L);

// off the wall: copies at rep(ws.lambda_star) and rep(w.lambda_star), merged
// into a single copy when the conjugate lands in W_{I,p}
SectionSkeleton off_wall_transform(const SectionSkeleton& sk, const WallSetup& setup,
                                   const LeviDatum& L);

// proper-standard sections refine into N_I(xi) standard ones per label
SectionSkeleton deltabar_to_delta(const SectionSkeleton& sk, const LeviDatum& L);

// inverse; NotDivisible when the counts cannot come from a character
SectionSkeleton delta_to_deltabar(const SectionSkeleton& sk, const LeviDatum& L);

} // namespace alcove
