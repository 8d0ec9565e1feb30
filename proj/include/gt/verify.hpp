#pragma once

#include <random>

#include "gt/labels.hpp"
#include "gt/report.hpp"

namespace gt {

// Every edge shifts the weight by the simple root of its color:
// wt(from) + e_k - e_{k+1} = wt(to).
ConditionReport check_structure(const GtLattice& lat);

// At every vertex and color, incoming products minus outgoing products equal
// the vertex m-value. Exact rational arithmetic, no tolerances.
ConditionReport check_crossing(const GtLattice& lat, const EdgeLabeling& lab);

// For every ordered pair of distinct same-rank vertices (s,t) and colors
// (i,j): sum over common upper covers u of c(s->u) d(t->u) equals sum over
// common lower covers r of d(r->s) c(r->t). The s = t, i = j instance is the
// crossing relation and is checked in that form. The default enumeration
// visits only pairs sharing a cover; `exhaustive` scans all same-rank pairs.
ConditionReport check_diamond(const GtLattice& lat, const EdgeLabeling& lab,
                              bool exhaustive = false);

ConditionReport verify_all(const GtLattice& lat, const EdgeLabeling& lab,
                           bool exhaustive_diamond = false);

// Instance of the rational function identity
//   sum_i y_i prod_{j != i} (1 + y_j/(x_j - x_i)) = sum_i y_i,
// the x_i pairwise distinct.
struct IdentityInstance {
  std::vector<Rat> x, y;
};

// Left-hand side above. Throws std::invalid_argument on duplicate x values.
Rat identity_lhs(const IdentityInstance& inst);
bool check_identity(const IdentityInstance& inst);

// Small random instance: 1 <= N <= max_n, numerators in [-20, 20],
// denominators in [1, 10], x resampled until pairwise distinct. Uses raw
// generator output so results are reproducible across platforms.
IdentityInstance random_identity_instance(std::mt19937_64& rng, int max_n);

}  // namespace gt
