#include "reebcz/lens.hpp"

#include <cmath>
#include <set>
#include <string>

#include "reebcz/errors.hpp"

namespace reebcz {

CyclicAction CyclicAction::for_n(int n) {
    if (n < 1) {
        throw domain_error("CyclicAction: n must be >= 1");
    }
    CyclicAction action;
    action.order = n + 1;
    return action;
}

std::pair<Complex, Complex> CyclicAction::apply(Complex u, Complex v, int power) const {
    const double tu = power * phase_u().radians();
    const double tv = power * phase_v().radians();
    const Complex i{0.0, 1.0};
    return {std::exp(i * tu) * u, std::exp(i * tv) * v};
}

bool CyclicAction::determinant_is_one() const {
    // det = e^{i(phase_u + phase_v)}; the phase sum is 2(order)/order * pi = 2 pi.
    return is_resonant(phase_u() + phase_v());
}

PointC3 phi_tilde(int n, Complex u, Complex v) {
    const Complex c = Complex{0.0, 1.0} / std::sqrt(2.0);
    return {u * v, c * std::pow(u, n + 1), c * std::pow(v, n + 1)};
}

PointC3 psi_coordinate_change(const PointC3& w) {
    const double r = std::sqrt(2.0) / 2.0;
    const Complex i{0.0, 1.0};
    return {w.w[0], r * (w.w[1] + w.w[2]), r * (-i * w.w[1] + i * w.w[2])};
}

Angle LensOrbit::period(int n) const {
    const Rational& a = which == LensFamily::gamma1 ? a1 : a2;
    return Angle(Rational(2) * a * N / Rational(n + 1));
}

RankTable lens_orbit_table(int n, const Rational& a1, const Rational& a2, int degree_max) {
    if (degree_max < 1) {
        throw domain_error("lens_orbit_table: degree_max must be >= 1");
    }
    if (a1 <= 0 || a2 <= 0) {
        throw domain_error("lens_orbit_table: a1, a2 must be positive");
    }
    RankTable table;
    table.degree_max = degree_max;

    for (const LensFamily family : {LensFamily::gamma1, LensFamily::gamma2}) {
        long long previous = 0;
        for (long long N = 1;; ++N) {
            const long long mu = cz_lens(n, a1, a2, family, N);
            if (mu < previous) {
                throw internal_error("lens_orbit_table: index not monotone at " +
                                     std::string(lens_family_name(family)) + "^" +
                                     std::to_string(N));
            }
            previous = mu;
            if (mu > degree_max) {
                break;
            }
            const int degree = static_cast<int>(mu);
            table.ranks[degree] += 1;
            table.generators[degree].push_back(Generator{lens_family_name(family), N});
            if (N % (n + 1) == 0) {
                if (table.contractible_min_index < 0 || mu < table.contractible_min_index) {
                    table.contractible_min_index = mu;
                }
            }
        }
    }

    std::set<int> degrees;
    for (const auto& [degree, rank] : table.ranks) {
        if (rank > 0) {
            degrees.insert(degree);
        }
    }
    table.lacunary = true;
    for (const int d : degrees) {
        if (degrees.count(d + 1)) {
            table.lacunary = false;
            break;
        }
    }
    return table;
}

IdentityCheck check_lens_hypersurface(int n, Complex u, Complex v, double tol) {
    if (std::abs(std::norm(u) + std::norm(v) - 1.0) > 1e-12) {
        throw precondition_error("check_lens_hypersurface: (u, v) must lie on S^3");
    }
    const PointC3 z  = phi_tilde(n, u, v);
    const double e   = 4.0 / (n + 1);
    const double c   = std::pow(4.0, 1.0 / (n + 1));
    const double lhs = 2.0 * std::norm(z.w[0]) + c * std::pow(std::abs(z.w[1]), e) +
                       c * std::pow(std::abs(z.w[2]), e);
    return make_check("lens_hypersurface", z, std::abs(lhs - 1.0), tol);
}

Rational lens_admissible_delta(int n, int degree_max, int max_denominator) {
    for (int k = 2; k <= max_denominator; ++k) {
        try {
            const RankTable table =
                lens_orbit_table(n, Rational(1), Rational(1) + Rational(1, k), degree_max);
            if (check_thm_pattern(table, n)) {
                return Rational(1, k);
            }
        } catch (const degenerate_orbit_error&) {
            // resonant ratio, try the next one
        }
    }
    return Rational(0);
}

} // namespace reebcz
