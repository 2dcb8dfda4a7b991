// Alcove coordinates n_alpha (n_alpha p < <nu+rho, alpha-vee> < (n_alpha+1)p),
// the d-function d = sum n_alpha, facet data of an alcove, and the uparrow
// partial order decided by interval-restricted breadth-first search.
#ifndef ALCOVE_ALCOVES_HPP
#define ALCOVE_ALCOVES_HPP

#include <vector>

#include "alcove/affine.hpp"

namespace alcove {

struct AlcoveCoords {
  std::vector<Int> n; // indexed like positive_roots
  Int d;              // sum of n
};

enum class WallSide { down, up }; // down: reflecting across it decreases d

struct WallDatum {
  int root_index;
  long long n; // hyperplane <.+rho, beta-vee> = n p
  WallSide side;
};

enum class OrderRel { below, above };

// WallPoint if some pairing is divisible by p.
AlcoveCoords alcove_coords(const RootSystem& rs, const Weight& nu, long long p);
Int d_value(const RootSystem& rs, const Weight& nu, long long p);

// below iff d(t.nu) < d(nu), which decides t.nu strictly-uparrow nu;
// FixedPoint if t fixes nu.
OrderRel single_reflection_compare(const RootSystem& rs, const Reflection& t,
                                   const Weight& nu, long long p);

// mu uparrow-or-equal lambda.  Works for wall points as well.
bool uparrow_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda, long long p);

// The facets of the alcove containing nu: exactly rank+1 per irreducible
// component, computed by conjugating the walls of the fundamental alcove.
std::vector<WallDatum> walls_of_alcove(const RootSystem& rs, const Weight& nu, long long p);

// Reduce a regular weight into the fundamental alcove C, returning the word
// data; rep is the unique orbit point with all coordinates n_alpha = 0.
ReduceResult reduce_to_C(const RootSystem& rs, const Weight& nu, long long p);

} // namespace alcove

#endif
