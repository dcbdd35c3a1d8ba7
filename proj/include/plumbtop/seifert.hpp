#pragma once

#include "plumbtop/plumbing.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace plumbtop {

// Invariant of one exceptional leaf.  beta_star is the rotation numerator
// (0 < beta_star < alpha) and beta * beta_star = 1 (mod alpha).  beta is
// stored unnormalized; section changes trade beta <-> beta + alpha against
// the Euler number e.
struct SeifertPair {
    long alpha = 2;
    long beta = 1;
    long beta_star = 1;
};

// Makes the pair for alpha and beta, deriving beta_star.
SeifertPair seifert_pair(long alpha, long beta);

struct SeifertData {
    int base_genus = 0;
    int boundary_count = 0;
    std::vector<SeifertPair> pairs;
    // Euler number once sections are fixed.  Meaningful on closed data, or
    // on bounded data relative to the declared boundary sections.
    std::optional<long> euler;
};

// Orbit of the monodromy on the fiber's boundary circles.  return_rotation
// is the rotation of the first-return map on one circle of the orbit, as a
// fraction of a full turn in (-1, 0].
struct BoundaryOrbit {
    int size = 1;
    mpq_class return_rotation = 0;
};

// Finite-order orientation-preserving surface diffeomorphism, described by
// the data its mapping torus needs.
struct MonodromyData {
    int fiber_euler_char = 0;
    int fiber_boundary_circles = 0;
    long order = 1;
    std::vector<long> fixed_point_rotations; // classes mod order, coprime to it
    std::vector<BoundaryOrbit> boundary_orbits;
};

// Reduces a rotation class to a normalized Seifert pair: beta_star in
// (0, alpha), beta its inverse mod alpha in (0, alpha).
SeifertPair normalize_pair(long alpha, long rotation_class);

// e - sum(beta_i / alpha_i), exact.  Requires e present.
mpq_class e0(const SeifertData& s);

// Euler characteristic of the orbit surface of a finite cyclic action with
// the given number of genuine fixed points and free action elsewhere.
long quotient_euler_char(long chi_fiber, long order, long fixed_count);

// Seifert data of the mapping torus.  Closed fiber: e is the integer
// sum(beta_i/alpha_i), making e0 vanish exactly.  Bounded fiber: e is
// reported relative to the product sections on the boundary, which this
// toolkit fixes as e = boundary_count (the choice is pinned by the glued
// example-family graphs and the lens family).
SeifertData mapping_torus_seifert(const MonodromyData& m);

// Star-shaped plumbing graph of a Seifert space.  Central vertex carries
// the base genus and weight e - #pairs - boundary_count; each pair becomes
// a leg with weights -neg_cont_frac(alpha, alpha - beta) read from the
// center outward; boundary components become boundary legs on the center.
PlumbingGraph star_graph(const SeifertData& s);

// n/q = e1 - 1/(e2 - 1/(...)), all entries >= 2.  Requires n > q >= 1 and
// gcd(n, q) = 1.
std::vector<long> neg_cont_frac(long n, long q);

// Exact value of a negative continued fraction (roundtrip checks).
mpq_class eval_neg_cont_frac(const std::vector<long>& terms);

} // namespace plumbtop
