#include "plumbtop/seifert.hpp"

#include "plumbtop/error.hpp"
#include "plumbtop/numeric.hpp"

#include <numeric>
#include <string>

namespace plumbtop {

SeifertPair seifert_pair(long alpha, long beta) {
    if (alpha < 2)
        throw ValidationError("Seifert pair needs alpha >= 2");
    long b = mod_norm(beta, alpha);
    if (b == 0 || std::gcd(alpha, b) != 1)
        throw ValidationError("Seifert pair needs gcd(alpha, beta) = 1");
    return SeifertPair{alpha, beta, mod_inverse(b, alpha)};
}

SeifertPair normalize_pair(long alpha, long rotation_class) {
    if (alpha < 2)
        throw ValidationError("normalize_pair: alpha must be >= 2");
    long beta_star = mod_norm(rotation_class, alpha);
    if (beta_star == 0)
        throw ValidationError("normalize_pair: rotation class is trivial mod alpha");
    if (std::gcd(alpha, beta_star) != 1)
        throw ValidationError("normalize_pair: rotation class not coprime to alpha");
    long beta = mod_inverse(beta_star, alpha);
    return SeifertPair{alpha, beta, beta_star};
}

mpq_class e0(const SeifertData& s) {
    if (!s.euler)
        throw ValidationError("e0 requires the Euler number to be present");
    mpq_class total(*s.euler);
    for (const auto& p : s.pairs)
        total -= make_rational(p.beta, p.alpha);
    return total;
}

long quotient_euler_char(long chi_fiber, long order, long fixed_count) {
    if (order < 1)
        throw ValidationError("quotient_euler_char: order must be >= 1");
    if (fixed_count < 0)
        throw ValidationError("quotient_euler_char: fixed point count must be >= 0");
    long num = chi_fiber + fixed_count * (order - 1);
    if (mod_norm(num, order) != 0)
        throw ValidationError("quotient_euler_char: inconsistent monodromy data (Riemann-Hurwitz fails)");
    return num / order;
}

SeifertData mapping_torus_seifert(const MonodromyData& m) {
    if (m.order < 1)
        throw ValidationError("mapping torus: order must be >= 1");
    if (m.order == 1 && !m.fixed_point_rotations.empty())
        throw ValidationError("mapping torus: identity monodromy cannot have fixed point data");
    int orbit_total = 0;
    for (const auto& orbit : m.boundary_orbits) {
        if (orbit.size < 1 || orbit.size > m.order || m.order % orbit.size != 0)
            throw ValidationError("mapping torus: boundary orbit size must divide the order");
        orbit_total += orbit.size;
    }
    if (orbit_total != m.fiber_boundary_circles)
        throw ValidationError("mapping torus: boundary orbits do not cover the fiber boundary");

    long chi_base = quotient_euler_char(m.fiber_euler_char, m.order,
                                        static_cast<long>(m.fixed_point_rotations.size()));
    int r = static_cast<int>(m.boundary_orbits.size());
    long genus2 = 2 - r - chi_base;
    if (genus2 < 0 || genus2 % 2 != 0)
        throw ValidationError("mapping torus: base surface genus is not a non-negative integer");

    SeifertData s;
    s.base_genus = static_cast<int>(genus2 / 2);
    s.boundary_count = r;
    for (long rot : m.fixed_point_rotations)
        s.pairs.push_back(normalize_pair(m.order, rot));

    if (r == 0) {
        mpq_class sum = 0;
        for (const auto& p : s.pairs)
            sum += make_rational(p.beta, p.alpha);
        if (sum.get_den() != 1)
            throw ValidationError("mapping torus: rotation data admits no integral Euler number");
        s.euler = static_cast<long>(sum.get_num().get_si());
    } else {
        s.euler = r; // product sections on the boundary
    }
    return s;
}

PlumbingGraph star_graph(const SeifertData& s) {
    if (!s.euler)
        throw ValidationError("star_graph requires the Euler number to be present");

    // Normalize every beta into (0, alpha); the discarded integer parts are
    // section changes and move into the Euler number.
    long euler = *s.euler;
    std::vector<std::pair<long, long>> legs; // (alpha, alpha - beta_norm)
    for (const auto& p : s.pairs) {
        if (p.alpha < 2)
            throw ValidationError("star_graph: pair with alpha < 2");
        long beta = mod_norm(p.beta, p.alpha);
        if (beta == 0 || std::gcd(p.alpha, beta) != 1)
            throw ValidationError("star_graph: pair with gcd(alpha, beta) != 1");
        euler -= (p.beta - beta) / p.alpha;
        legs.emplace_back(p.alpha, p.alpha - beta);
    }

    PlumbingGraph g;
    long center_weight = euler - static_cast<long>(s.pairs.size()) - s.boundary_count;
    int center = g.add_vertex(s.base_genus, static_cast<int>(center_weight));
    for (const auto& [alpha, omega] : legs) {
        std::vector<long> chain = neg_cont_frac(alpha, omega);
        int prev = center;
        for (long e : chain) {
            int v = g.add_vertex(0, static_cast<int>(-e));
            g.add_edge(prev, v);
            prev = v;
        }
    }
    for (int i = 0; i < s.boundary_count; ++i)
        g.add_leg(center);
    return g;
}

std::vector<long> neg_cont_frac(long n, long q) {
    if (q < 1 || n <= q)
        throw ValidationError("neg_cont_frac: need n > q >= 1");
    if (std::gcd(n, q) != 1)
        throw ValidationError("neg_cont_frac: need gcd(n, q) = 1");
    std::vector<long> terms;
    while (q > 0) {
        long e = (n + q - 1) / q; // ceil(n / q)
        terms.push_back(e);
        long next_q = e * q - n;
        n = q;
        q = next_q;
    }
    return terms;
}

mpq_class eval_neg_cont_frac(const std::vector<long>& terms) {
    if (terms.empty())
        throw ValidationError("eval_neg_cont_frac: empty term list");
    mpq_class value(terms.back());
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        if (value == 0)
            throw ValidationError("eval_neg_cont_frac: division by zero tail");
        value = mpq_class(terms[i]) - 1 / value;
    }
    return value;
}

} // namespace plumbtop
