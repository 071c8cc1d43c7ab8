#include "reebcz/dynamics.hpp"

#include <cmath>

#include "reebcz/errors.hpp"
#include "reebcz/forms.hpp"

namespace reebcz {

PointC3 flow_closed_form(const LinkParams& params, const PointC3& p, double t) {
    const double eps = params.eps_double();
    const Complex i{0.0, 1.0};
    return {std::exp(i * (4.0 * t / (params.n + 1))) * p.w[0],
            std::exp(i * (2.0 * (1.0 + eps) * t)) * p.w[1],
            std::exp(i * (2.0 * (1.0 - eps) * t)) * p.w[2]};
}

PointC3 flow_rk4(const LinkParams& params, const PointC3& p, double t, double dt) {
    if (dt <= 0.0) {
        throw domain_error("flow_rk4: dt must be positive");
    }
    const auto rhs = [&params](const PointC3& q) { return eval_reeb_eps(params, q); };
    const auto axpy = [](const PointC3& q, double s, const PointC3& d) {
        return PointC3{q.w[0] + s * d.w[0], q.w[1] + s * d.w[1], q.w[2] + s * d.w[2]};
    };

    PointC3 state    = p;
    double remaining = t;
    const double sgn = t >= 0.0 ? 1.0 : -1.0;
    remaining *= sgn;
    while (remaining > 0.0) {
        const double h  = sgn * std::min(dt, remaining);
        const PointC3 k1 = rhs(state);
        const PointC3 k2 = rhs(axpy(state, h / 2.0, k1));
        const PointC3 k3 = rhs(axpy(state, h / 2.0, k2));
        const PointC3 k4 = rhs(axpy(state, h, k3));
        for (int j = 0; j < 3; ++j) {
            state.w[j] += h / 6.0 * (k1.w[j] + 2.0 * k2.w[j] + 2.0 * k3.w[j] + k4.w[j]);
        }
        remaining -= std::abs(h);
    }
    return state;
}

PointC3 flow_brieskorn(const std::array<int, 3>& a, const PointC3& p, double t) {
    const Complex i{0.0, 1.0};
    return {std::exp(i * (2.0 * t / a[0])) * p.w[0], std::exp(i * (2.0 * t / a[1])) * p.w[1],
            std::exp(i * (2.0 * t / a[2])) * p.w[2]};
}

OrbitDescriptor orbit_iterate(const LinkParams& params, OrbitFamily family, long long N) {
    if (N < 1) {
        throw domain_error("orbit_iterate: N must be >= 1");
    }
    require_link_orbit_nonresonant(params.n, params.eps, family, N);

    OrbitDescriptor orbit;
    orbit.family = family;
    orbit.N      = N;
    const Rational denom = family == OrbitFamily::plus ? Rational(1) + params.eps
                                                       : Rational(1) - params.eps;
    orbit.period         = Angle(Rational(N) / denom);
    orbit.start          = family == OrbitFamily::plus ? PointC3{0.0, 1.0, 0.0}
                                                       : PointC3{0.0, 0.0, 1.0};
    orbit.homotopy_class = static_cast<int>(N % (params.n + 1));
    orbit.contractible   = orbit.homotopy_class == 0;
    orbit.cz             = cz_link_closed_form(params, family, N);
    return orbit;
}

SimpleOrbits enumerate_simple_orbits(const LinkParams& params) {
    SimpleOrbits result;
    result.orbits.push_back(orbit_iterate(params, OrbitFamily::plus, 1));
    result.orbits.push_back(orbit_iterate(params, OrbitFamily::minus, 1));

    // The third diagonal trajectory (e^{4it/(n+1)}, 0, 0) never lies on the
    // link: its start point is not a zero of f.
    const PointC3 candidate{1.0, 0.0, 0.0};
    result.rejected.start   = candidate;
    result.rejected.f_value = eval_f(params, candidate);
    result.rejected.reason  = "start point (1,0,0) satisfies f = 1 != 0, off the link";
    return result;
}

ReturnMapResult return_map(const LinkParams& params, const OrbitDescriptor& orbit) {
    // Exact eigenvalue-1 tests: block speeds times the period, as angles.
    const Rational tau = orbit.period.coeff; // T / pi
    const std::array<Rational, 3> speeds{Rational(4, params.n + 1),
                                         Rational(2) * (Rational(1) + params.eps),
                                         Rational(2) * (Rational(1) - params.eps)};
    const int orbit_axis = orbit.family == OrbitFamily::plus ? 1 : 2;

    bool nondegenerate = true;
    for (int j = 0; j < 3; ++j) {
        if (j == orbit_axis) {
            continue;
        }
        if (is_resonant(Angle(speeds[j] * tau))) {
            nondegenerate = false;
        }
    }
    if (!nondegenerate) {
        throw degenerate_orbit_error(
            std::string("return_map: xi-eigenvalue exactly 1 for gamma_") +
            family_name(orbit.family) + "^" + std::to_string(orbit.N));
    }

    ReturnMapResult result;
    result.nondegenerate = true;
    const double T       = orbit.period_radians();
    const Complex i{0.0, 1.0};
    result.eigenvalues = {std::exp(i * (4.0 * T / (params.n + 1))),
                          std::exp(i * (2.0 * (1.0 + params.eps_double()) * T)),
                          std::exp(i * (2.0 * (1.0 - params.eps_double()) * T))};

    int k = 0;
    for (int j = 0; j < 3; ++j) {
        if (j != orbit_axis) {
            result.xi_eigenvalues[k++] = result.eigenvalues[j];
        }
    }
    result.min_xi_distance_to_one = std::min(std::abs(result.xi_eigenvalues[0] - 1.0),
                                             std::abs(result.xi_eigenvalues[1] - 1.0));
    return result;
}

} // namespace reebcz
