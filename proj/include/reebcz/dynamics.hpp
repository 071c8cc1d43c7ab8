#pragma once

#include <array>
#include <string>
#include <vector>

#include "reebcz/cz.hpp"
#include "reebcz/geometry.hpp"
#include "reebcz/point.hpp"

namespace reebcz {

struct OrbitDescriptor {
    OrbitFamily family = OrbitFamily::plus;
    long long N        = 1;
    Angle period;          // exact coefficient of pi: N/(1 +- eps)
    PointC3 start;         // (0,1,0) for plus, (0,0,1) for minus
    int homotopy_class = 0; // N mod (n+1)
    bool contractible  = false;
    long long cz       = 0; // closed-form index

    double period_radians() const { return period.radians(); }
};

struct RejectedCandidate {
    PointC3 start;
    Complex f_value;
    std::string reason;
};

struct SimpleOrbits {
    std::vector<OrbitDescriptor> orbits; // gamma_plus, gamma_minus (N = 1)
    RejectedCandidate rejected;          // the w0-axis trajectory, off the link
};

// The diagonal unitary Reeb flow
// (w0, w1, w2) -> (e^{4it/(n+1)} w0, e^{2i(1+eps)t} w1, e^{2i(1-eps)t} w2).
PointC3 flow_closed_form(const LinkParams& params, const PointC3& p, double t);

// Classical RK4 integration of wdot = R_eps(w) with fixed step dt.
PointC3 flow_rk4(const LinkParams& params, const PointC3& p, double t, double dt);

// Flow of R_{alpha_1} = 2i z_j / a_j on a general Brieskorn chart.
PointC3 flow_brieskorn(const std::array<int, 3>& a, const PointC3& p, double t);

// Descriptor for gamma_{family}^N (requires nonresonance at (eps, N)).
OrbitDescriptor orbit_iterate(const LinkParams& params, OrbitFamily family, long long N);

// The two simple periodic orbits plus the rejected w0-axis candidate.
SimpleOrbits enumerate_simple_orbits(const LinkParams& params);

struct ReturnMapResult {
    std::array<Complex, 3> eigenvalues;    // of dphi_T on C^3
    std::array<Complex, 2> xi_eigenvalues; // excluding the orbit direction
    double min_xi_distance_to_one = 0.0;
    bool nondegenerate            = false; // decided exactly
};

// Eigenvalues of the linearized total return map of the orbit; throws
// degenerate_orbit_error when a xi-eigenvalue equals 1 (decided exactly).
ReturnMapResult return_map(const LinkParams& params, const OrbitDescriptor& orbit);

} // namespace reebcz
