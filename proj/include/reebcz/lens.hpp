#pragma once

#include <utility>

#include "reebcz/identity.hpp"
#include "reebcz/point.hpp"
#include "reebcz/ranks.hpp"

namespace reebcz {

// The order-(n+1) cyclic subgroup of SL(2,C) acting on C^2 by
// (u, v) -> (e^{2 pi i/(n+1)} u, e^{2 pi i n/(n+1)} v).
struct CyclicAction {
    int order = 2; // n + 1

    static CyclicAction for_n(int n);

    // Generator phases as exact rational multiples of pi.
    Angle phase_u() const { return Angle(Rational(2, order)); }
    Angle phase_v() const { return Angle(Rational(2 * (order - 1), order)); }

    std::pair<Complex, Complex> apply(Complex u, Complex v, int power = 1) const;

    // det(generator) = 1, decided in exact phase arithmetic.
    bool determinant_is_one() const;
};

// Invariant-monomial map (u,v) -> (uv, (i/sqrt2) u^{n+1}, (i/sqrt2) v^{n+1});
// its image lies in f_{A_n}^{-1}(0).
PointC3 phi_tilde(int n, Complex u, Complex v);

// Linear unitary change of coordinates from the A_n chart to the Brieskorn
// chart: w -> (w0, (sqrt2/2)(w1 + w2), (sqrt2/2)(-i w1 + i w2)).
PointC3 psi_coordinate_change(const PointC3& w);

struct LensOrbit {
    LensFamily which = LensFamily::gamma1;
    Rational a1, a2;
    long long N = 1;

    // Period 2 a_j pi N / (n+1) as an exact multiple of pi.
    Angle period(int n) const;
};

// Tally of gamma_1^N, gamma_2^N by Conley-Zehnder index, assembled exactly
// like the link-side table.
RankTable lens_orbit_table(int n, const Rational& a1, const Rational& a2, int degree_max);

// Evaluates 2|z0|^2 + 4^{1/(n+1)}|z1|^{4/(n+1)} + 4^{1/(n+1)}|z2|^{4/(n+1)} - 1
// at phi_tilde(u, v); requires |u|^2 + |v|^2 = 1.
IdentityCheck check_lens_hypersurface(int n, Complex u, Complex v, double tol = 1e-10);

// Empirical probe of the lens_space open question: the largest scanned
// delta = 1/k such that the table for (a1, a2) = (1, 1 + delta) matches the
// expected rank pattern at this degree window. Returns 0 if none matched.
Rational lens_admissible_delta(int n, int degree_max, int max_denominator = 64);

} // namespace reebcz
