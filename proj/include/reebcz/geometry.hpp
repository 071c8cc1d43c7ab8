#pragma once

#include <cstdint>
#include <vector>

#include "reebcz/params.hpp"
#include "reebcz/point.hpp"

namespace reebcz {

// Floating tolerances, centralized. Exact (rational) decisions never use
// these; they only grade the numerical verification sweeps.
struct Tolerances {
    double identity = 1e-9;  // identities evaluated through analytic formulas
    double on_link  = 1e-12; // link membership
    double fd       = 1e-7;  // identities routed through finite differences
    double volume   = 1e-6;  // contact-condition volume lower bound
    double ode      = 1e-6;  // integrator vs closed-form flow
};

// f_{A_n}(w) = w0^{n+1} + 2 w1 w2.
Complex eval_f(int n, const PointC3& p);
Complex eval_f(const LinkParams& params, const PointC3& p);

// The Brieskorn-side polynomial z0^{n+1} + z1^2 + z2^2.
Complex eval_f_brieskorn(int n, const PointC3& p);

// H(w) = |w|^2 + eps(|w1|^2 - |w2|^2).
double eval_H(const LinkParams& params, const PointC3& p);

// rho(w) = (|w|^2 - 1)/4.
double eval_rho(const PointC3& p);

bool on_link(const LinkParams& params, const PointC3& p, double tol = 1e-12);

// Weighted scaling (w0, w1, w2) -> (lambda^{2/(n+1)} w0, lambda w1, lambda w2),
// which maps f^{-1}(0) to itself: f(sigma_lambda(w)) = lambda^2 f(w).
PointC3 weighted_scale(int n, const PointC3& p, double lambda);

// Moves a nonzero point of f^{-1}(0) onto the unit sphere along its
// weighted ray (bisection on |sigma_lambda(p)|^2 = 1).
PointC3 rescale_to_sphere(int n, const PointC3& p);

// On-link point from (u, v) on S^3: invariant-monomial map followed by the
// weighted rescale.
PointC3 link_point_from_s3(int n, Complex u, Complex v);

// count seeded quasi-uniform points on the link; every returned point
// satisfies |f| < 1e-12 and ||p|^2 - 1| < 1e-12.
std::vector<PointC3> sample_link(const LinkParams& params, int count, std::uint64_t seed);

// Real gradients (as 6-vectors) of the three defining functions.
Vec6 grad_re_f(int n, const PointC3& p);
Vec6 grad_im_f(int n, const PointC3& p);
Vec6 grad_rho(const PointC3& p);

// Orthonormal basis of T_p L_{A_n} = ker d(Re f) cap ker d(Im f) cap ker d(rho).
struct TangentFrame {
    PointC3 base;
    std::array<Vec6, 3> vectors;
};

// Throws degenerate_point_error when the Jacobian of (Re f, Im f, rho)
// has rank < 3 at p.
TangentFrame tangent_frame(const LinkParams& params, const PointC3& p);

} // namespace reebcz
