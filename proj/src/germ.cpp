#include "plumbtop/germ.hpp"

#include "plumbtop/error.hpp"
#include "plumbtop/numeric.hpp"

#include <numeric>
#include <string>

namespace plumbtop {

GermData::GermData(int m, std::vector<BranchData> branches,
                   std::vector<std::array<int, 3>> intersection_triples)
    : m_(m), branches_(std::move(branches)) {
    if (m_ < 2)
        throw ValidationError("germ: exponent m must be >= 2");
    if (branches_.empty())
        throw ValidationError("germ: at least one branch required");
    bool non_reduced = false;
    for (std::size_t i = 0; i < branches_.size(); ++i) {
        if (branches_[i].multiplicity < 1)
            throw ValidationError("germ: branch " + std::to_string(i) + " has multiplicity < 1");
        if (branches_[i].milnor_number < 0)
            throw ValidationError("germ: branch " + std::to_string(i) + " has negative Milnor number");
        if (branches_[i].multiplicity >= 2)
            non_reduced = true;
    }
    if (!non_reduced)
        throw ValidationError("germ: g must be non-reduced (some branch multiplicity >= 2)");

    const int n = static_cast<int>(branches_.size());
    intersections_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const auto& t : intersection_triples) {
        int i = t[0], j = t[1], v = t[2];
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw ValidationError("germ: intersection entry refers to a missing branch");
        if (i == j)
            throw ValidationError("germ: intersection diagonal is unused");
        if (v < 1)
            throw ValidationError("germ: intersection multiplicities must be >= 1");
        std::size_t a = static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j);
        std::size_t b = static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i);
        if (intersections_[a] != 0 && intersections_[a] != v)
            throw ValidationError("germ: conflicting intersection entries for one branch pair");
        intersections_[a] = v;
        intersections_[b] = v;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersections_[static_cast<std::size_t>(i) * n + j] == 0)
                throw ValidationError("germ: missing intersection multiplicity for branches " +
                                      std::to_string(i) + ", " + std::to_string(j));
}

int GermData::intersection(int i, int j) const {
    const int n = static_cast<int>(branches_.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
        throw ValidationError("germ: invalid branch pair");
    return intersections_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
}

FiberInvariants plane_fiber_invariants(int m, int n) {
    if (m < 2 || n < 1)
        throw ValidationError("plane_fiber_invariants: need m >= 2, n >= 1");
    FiberInvariants f;
    f.euler_char = 1 - (m - 1) * (n - 1);
    f.boundary_circles = std::gcd(m, n);
    int genus2 = 2 - f.boundary_circles - f.euler_char;
    if (genus2 < 0 || genus2 % 2 != 0)
        throw ValidationError("plane_fiber_invariants: genus integrality failed"); // cannot happen
    f.genus = genus2 / 2;
    return f;
}

std::vector<int> singular_branches(const GermData& g) {
    std::vector<int> out;
    for (std::size_t i = 0; i < g.branches().size(); ++i)
        if (g.branches()[i].multiplicity >= 2)
            out.push_back(static_cast<int>(i));
    return out;
}

long k_of_branch(const GermData& g, int branch) {
    const int n = static_cast<int>(g.branches().size());
    if (branch < 0 || branch >= n)
        throw ValidationError("k_of_branch: no such branch");
    long k = 0;
    for (int j = 0; j < n; ++j)
        if (j != branch)
            k += static_cast<long>(g.branches()[static_cast<std::size_t>(j)].multiplicity) *
                 g.intersection(branch, j);
    return k;
}

MonodromyData vertical_monodromy(const GermData& g, int branch) {
    const int n_i = g.branches().at(static_cast<std::size_t>(branch)).multiplicity;
    if (n_i < 2)
        throw ValidationError("vertical_monodromy: branch has multiplicity < 2 (no vanishing zone)");

    const long k = k_of_branch(g, branch);
    const long d = std::gcd(static_cast<long>(n_i), k);
    const long order = n_i / d;
    const FiberInvariants fiber = plane_fiber_invariants(g.exponent(), n_i);

    MonodromyData m;
    m.fiber_euler_char = fiber.euler_char;
    m.fiber_boundary_circles = fiber.boundary_circles;
    m.order = order;
    if (order > 1) {
        long rotation = mod_norm(-(k / d), order);
        m.fixed_point_rotations.assign(static_cast<std::size_t>(g.exponent()), rotation);
    }

    // Boundary circles are indexed by Z/c, c = gcd(m, n_i); the first-return
    // map translates the index by k.
    const long c = fiber.boundary_circles;
    const long shift = mod_norm(k, c);
    const long orbit_count = shift == 0 ? c : std::gcd(c, shift);
    const long orbit_size = c / orbit_count;
    for (long i = 0; i < orbit_count; ++i) {
        BoundaryOrbit orbit;
        orbit.size = static_cast<int>(orbit_size);
        long num = mod_norm(-k * orbit_size, n_i);
        orbit.return_rotation = num == 0 ? mpq_class(0) : make_rational(num - n_i, n_i);
        m.boundary_orbits.push_back(orbit);
    }
    return m;
}

VanishingZoneData vanishing_zone(const GermData& g, int branch) {
    VanishingZoneData z;
    z.branch = branch;
    z.k = k_of_branch(g, branch);
    const int n_i = g.branches().at(static_cast<std::size_t>(branch)).multiplicity;
    z.d = std::gcd(static_cast<long>(n_i), z.k);
    z.fiber = plane_fiber_invariants(g.exponent(), n_i);
    z.monodromy = vertical_monodromy(g, branch);
    z.seifert = mapping_torus_seifert(z.monodromy);
    z.boundary_orbits_verified = g.exponent() == 2 && z.k <= 2;
    return z;
}

long covering_euler_char(long chi_base, long degree, long branch_values) {
    if (degree < 1)
        throw ValidationError("covering_euler_char: degree must be >= 1");
    if (branch_values < 0)
        throw ValidationError("covering_euler_char: branch value count must be >= 0");
    return degree * chi_base - (degree - 1) * branch_values;
}

LensVerdict is_lens_boundary(const GermData& g, bool f_irreducible) {
    if (!f_irreducible)
        return {false, LensObstruction::NotIrreducible,
                "f is reducible; the characterization applies to irreducible germs "
                "(z^2 - y^2 for instance bounds S^2 x S^1)"};
    if (g.exponent() > 2)
        return {false, LensObstruction::ExponentAboveTwo,
                "m > 2: every vanishing-zone component has m exceptional leaves or a "
                "positive-genus base, so it is not a solid-torus complement"};
    std::vector<int> singular = singular_branches(g);
    if (singular.size() >= 2)
        return {false, LensObstruction::ReducibleSingularLocus,
                "the singular locus has " + std::to_string(singular.size()) +
                    " components; a lens boundary forces an irreducible singular locus"};
    const int i = singular.front();
    if (g.branches()[static_cast<std::size_t>(i)].milnor_number > 0)
        return {false, LensObstruction::TrunkNotSolidTorus,
                "the singular branch is not smooth (mu > 0), so the trunk is not a solid torus"};
    const long k = k_of_branch(g, i);
    if (k == 0)
        return {false, LensObstruction::IdentityMonodromy,
                "identity monodromy on a positive-genus fiber (single-branch germ z^2 - y^l)"};
    if (k >= 2)
        return {false, LensObstruction::TrunkNotSolidTorus,
                "k = " + std::to_string(k) + " >= 2: the trunk fiber is not a union of discs"};
    return {true, LensObstruction::None, "germ is equivalent to z^2 - x y^l"};
}

GermData example_family_germ(int l) {
    if (l < 2)
        throw ValidationError("example family needs l >= 2");
    // z^2 - (x^2 - y^3) y^l: branch y with multiplicity l, smooth; branch
    // x^2 - y^3 reduced with Milnor number 2; intersection multiplicity 2.
    return GermData(2, {BranchData{l, 0}, BranchData{1, 2}}, {{{0, 1, 2}}});
}

GermData lens_family_germ(int l) {
    if (l < 2)
        throw ValidationError("lens family needs l >= 2");
    // z^2 - x y^l: branch y with multiplicity l, branch x reduced, m0 = 1.
    return GermData(2, {BranchData{l, 0}, BranchData{1, 0}}, {{{0, 1, 1}}});
}

GermData single_branch_germ(int m, int n) {
    if (n < 2)
        throw ValidationError("single-branch germ needs multiplicity >= 2");
    return GermData(m, {BranchData{n, 0}}, {});
}

} // namespace plumbtop
