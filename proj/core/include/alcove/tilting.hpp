#pragma once

// Certified descent words for dominant regular weights, wall-crossing
// products of tilting characters, and the triangular bookkeeping that peels
// a character into indecomposable tilting multiplicities.

#include "alcove/groth.hpp"

namespace alcove {

struct ReducedWord {
  Weight base;                       // the regular anchor lambda_star in C
  std::vector<Reflection> letters;   // s_1 ... s_n, all walls of C-bar
  std::vector<Weight> prefix_targets; // s_1...s_i . base for i = 1..n
  std::vector<bool> ascent_ok;       // prefix i-1 < prefix i in the arrow order
  std::vector<bool> regularity_ok;   // s_1..s_{i-1} s_i s_{i-1}..s_1 not in W_{I,p}
};

// descent construction: peel nu down to its alcove-order floor one facet at a
// time and conjugate the crossing reflections into walls of C-bar; the word
// multiplies to the unique w with w . base = nu and carries per-letter
// certificates
ReducedWord domexp_word(const Weight& nu, const LeviDatum& L);

// recompute both certificate families from the letters alone
void recheck_word(const ReducedWord& word, const LeviDatum& L);

// character of Theta_{s_n} ... Theta_{s_1} applied to N_I(base)*[Zbar(base)],
// with the wall weight for each letter chosen canonically
GVector theta_product_char(const ReducedWord& word, const LeviDatum& L);

struct TiltSummandReport {
  Weight top;          // the label whose coefficient must be exactly 1
  long long top_d = 0; // alcove depth of the top label
  GVector residual;    // NABLA-basis character minus the top term
};

// triangularity check on a descent word's Theta-product: coefficient 1 at
// the target, everything else at strictly smaller depth
TiltSummandReport tilt_summand_check(const ReducedWord& word, const LeviDatum& L);

struct WallCrossDecomp {
  std::string tag;               // "double" or "one-plus-lower"
  std::vector<Weight> parts;     // certain indecomposable summands, with multiplicity
  bool has_remainder = false;    // an undetermined lower tilting part exists
  long long remainder_d_bound = 0; // remainder labels u all have d(u) < bound
};

// closed cases of crossing the wall of s at the tilting labelled nu; unknown
// lower multiplicities stay symbolic
WallCrossDecomp refl_transwall_decompose(const Weight& nu, const Reflection& s,
                                         const Weight& lambda_star, const LeviDatum& L);

struct TiltingTable {
  std::map<Weight, GVector> entries; // label -> ZBAR-basis character
};

// table sanity: unitriangular against the arrow order
void validate_tilting_table(const TiltingTable& table, const LeviDatum& L);

// solve char = sum m_nu * table[nu] by peeling the deepest label first
std::map<Weight, long long> greedy_peel(const GVector& character, const TiltingTable& table,
                                        const LeviDatum& L);

// (dim Hom(delta(nu), M), dim Hom(deltabar(nu), M)) read off the two bases
std::pair<long long, long long> section_sizes_for_hom_bases(const Weight& nu, const GVector& M,
                                                            const LeviDatum& L);

} // namespace alcove
