#pragma once

#include "plumbtop/plumbing.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plumbtop {

// First homology as free rank plus invariant factors (each >= 2, in
// divisibility order).
struct HomologyResult {
    int free_rank = 0;
    std::vector<mpz_class> torsion;

    bool operator==(const HomologyResult& rhs) const;
    mpz_class torsion_order() const; // product of the invariant factors
};

std::string to_string(const HomologyResult& h); // "Z^2 + Z/2 + Z/6", "0"

// H1 of the closed plumbed 3-manifold of g: free rank
// 2*sum(genus) + b1(graph) + nullity(intersection form), torsion the
// nontrivial invariant factors of the intersection form.
HomologyResult h1_of_plumbed(const PlumbingGraph& g);

// Closed form for the boundary of the Milnor fiber of z^m - x^k y^l,
// gcd(m, k, l) = 1, 1 <= k < l, m >= 2.  With d = gcd(k, l), kb = k/d,
// lb = l/d: free rank 2(m-1)(d-1), torsion (m-2) factors of kb*lb and one
// of m*kb*lb.
HomologyResult hirzebruch_h1(long m, long k, long l);

// Closed form for the boundary graphs of z^2 - (x^2 - y^3) y^l: cyclic of
// order 4l for odd l; for even l free rank 1 with torsion of total order
// l(l+3), the factor structure computed from the graph.
HomologyResult example_family_h1(int l);

} // namespace plumbtop
