#pragma once

#include <vector>

#include "singgraph/graph.hpp"
#include "singgraph/rdp.hpp"

namespace sg {

// Path graph with the given self-intersections; ids c1, c2, ...
DualGraph gen_chain(const std::vector<long long>& weights);

// Resolution graph of the cyclic quotient singularity of type (n, q): the
// chain (-a1, ..., -ar) from the negative continued fraction
// n/q = a1 - 1/(a2 - 1/(...)), all ai >= 2. Requires n > q >= 1 and
// gcd(n, q) = 1.
DualGraph gen_cyclic(long long n, long long q);

// Instantiates a catalog row: the -2-core in canonical order (ids c1..cm)
// plus one fresh leaf per attached edge (ids a1..an) with the given
// self-intersections (each <= -3). The result is a candidate; rationality
// depends on the parameters and the attachment weights and is verified by
// the caller. Parameter sets that reproduce another row's graph verbatim
// (2-AR with a length-1 plateau, 1-DII with 4 vertices) are rejected so that
// classification round-trips.
DualGraph gen_catalog(const ConfigClass& cls, const std::vector<long long>& attachment_weights);

// Plain ADE graphs (every weight -2): the 0-configurations and the blowdown
// base cases. kind is 'A', 'D' (m >= 4) or 'E' (m in 6..8).
DualGraph gen_ade(char kind, long long m);

}  // namespace sg
