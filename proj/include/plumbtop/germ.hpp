#pragma once

#include "plumbtop/seifert.hpp"

#include <array>
#include <string>
#include <vector>

namespace plumbtop {

// One irreducible factor of g: its multiplicity in g and the Milnor number
// of the reduced branch (0 for a smooth branch).
struct BranchData {
    int multiplicity = 1;
    int milnor_number = 0;
};

// Combinatorial model of the germ z^m - g(x, y) with g non-reduced:
// exponent m, branch data, and pairwise intersection multiplicities at the
// origin.  Puiseux data and genericity of coordinates are the caller's
// responsibility; the theorems consume exactly these integers.
class GermData {
public:
    GermData(int m, std::vector<BranchData> branches,
             std::vector<std::array<int, 3>> intersection_triples);

    int exponent() const { return m_; }
    const std::vector<BranchData>& branches() const { return branches_; }
    int intersection(int i, int j) const;

private:
    int m_;
    std::vector<BranchData> branches_;
    std::vector<int> intersections_; // dense symmetric, diagonal unused
};

struct FiberInvariants {
    int euler_char = 1;
    int genus = 0;
    int boundary_circles = 1;
    bool operator==(const FiberInvariants&) const = default;
};

// Milnor fiber of the plane curve germ z^m - y^n.
FiberInvariants plane_fiber_invariants(int m, int n);

// Branch indices with multiplicity >= 2; one vanishing-zone component each.
std::vector<int> singular_branches(const GermData& g);

// Intersection multiplicity of branch i with the product of all the other
// factors (0 when the germ has a single branch).
long k_of_branch(const GermData& g, int branch);

// Vertical monodromy of the vanishing zone around branch i: finite of order
// n_i / gcd(n_i, k), with m fixed points of rotation class -k/d when the
// order is > 1.  Boundary circles are permuted by translation by k on
// Z/gcd(m, n_i).
MonodromyData vertical_monodromy(const GermData& g, int branch);

struct VanishingZoneData {
    int branch = 0;
    long k = 0;
    long d = 1;
    FiberInvariants fiber;
    MonodromyData monodromy;
    SeifertData seifert;
    // The boundary-orbit rule is pinned against the m = 2 families computed
    // in full (k <= 2); elsewhere it is derived but unverified.
    bool boundary_orbits_verified = false;
};

VanishingZoneData vanishing_zone(const GermData& g, int branch);

// degree * chi - (degree - 1) * branch_values, the Euler characteristic of
// a totally ramified cyclic cover.
long covering_euler_char(long chi_base, long degree, long branch_values);

enum class LensObstruction {
    None,
    NotIrreducible,
    ExponentAboveTwo,       // m > 2: m exceptional leaves or positive base genus
    ReducibleSingularLocus, // more than one singular branch
    TrunkNotSolidTorus,     // mu > 0 or k >= 2
    IdentityMonodromy,      // k = 0: identity monodromy on a positive-genus fiber
};

struct LensVerdict {
    bool is_lens = false;
    LensObstruction obstruction = LensObstruction::None;
    std::string detail;
};

// The boundary of the Milnor fiber is a lens space exactly for the germs
// equivalent to z^2 - x y^l.  Irreducibility of f cannot be read off the
// combinatorial data and is supplied by the caller.
LensVerdict is_lens_boundary(const GermData& g, bool f_irreducible);

// Built-in germ families.
GermData example_family_germ(int l);     // z^2 - (x^2 - y^3) y^l, l >= 2
GermData lens_family_germ(int l);        // z^2 - x y^l, l >= 2
GermData single_branch_germ(int m, int n); // z^m - y^n, n >= 2

} // namespace plumbtop
