
// Decompositions of complete graphs into perfect and near-perfect matchings,
// plus regular circulant graphs.  These are the raw material the witness
// constructions paint.

#pragma once

#include "ramsey/core.hpp"

namespace ramsey {

// Splits E(K_p), p even, into p-1 perfect matchings (round-robin rotation).
// Throws OddOrder for odd p.
MatchingDecomposition one_factorization(int p);

// Splits E(K_x), x odd, into x near-perfect matchings; class v misses
// exactly vertex v and holds the ordered edges (v+1,v-1), (v+2,v-2), ...
// taken mod x, so class v is {a,b : a+b == 2v (mod x)}.
// Throws EvenOrder for even x.
MatchingDecomposition near_one_factorization(int x);

// Edge set of the d-regular circulant on p vertices: offsets 1..d/2 in both
// directions, plus the antipodal offset p/2 when d is odd.  Throws
// ParityInfeasible when d*p is odd and ValidationError when d is not in
// 0..p-1.
std::vector<std::pair<int, int>> regular_circulant(int p, int d);

}  // namespace ramsey
