#include "reebcz/cz.hpp"

#include <string>

#include "reebcz/errors.hpp"

namespace reebcz {

namespace {

std::string orbit_label(OrbitFamily family, long long N) {
    return std::string("gamma_") + (family == OrbitFamily::plus ? "plus" : "minus") + "^" +
           std::to_string(N);
}

// (1 + eps) for plus, (1 - eps) for minus.
Rational one_pm(const Rational& eps, OrbitFamily family) {
    return family == OrbitFamily::plus ? Rational(1) + eps : Rational(1) - eps;
}

// The opposite factor: (1 - eps) for plus, (1 + eps) for minus.
Rational one_mp(const Rational& eps, OrbitFamily family) {
    return family == OrbitFamily::plus ? Rational(1) - eps : Rational(1) + eps;
}

} // namespace

bool in_sigma_star(const RotationPath& path) {
    for (const auto& block : path.blocks) {
        if (block.speed == 0) {
            return false; // constant block, eigenvalue 1 throughout
        }
        if (is_resonant(Angle(block.speed * path.duration.coeff))) {
            return false;
        }
    }
    return true;
}

long long cz_rotation(const RotationBlock& block, const Angle& T) {
    if (block.speed == 0) {
        throw domain_error("cz_rotation: constant block (speed 0) is not in Sigma*");
    }
    if (block.speed < 0) {
        return -cz_rotation(RotationBlock{-block.speed}, T);
    }
    const Rational q = block.speed * T.coeff; // total rotation / pi
    if (is_even_integer(q)) {
        return to_long_checked(rational_num(q)); // the T/pi branch
    }
    return 2 * to_long_checked(floor_div(q, Rational(2))) + 1;
}

long long cz_path(const RotationPath& path) {
    long long sum = 0;
    for (const auto& block : path.blocks) {
        sum += cz_rotation(block, path.duration);
    }
    return sum;
}

std::array<Rational, 3> link_floor_args(int n, const Rational& eps, OrbitFamily family,
                                        long long N) {
    const Rational pm = one_pm(eps, family);
    const Rational mp = one_mp(eps, family);
    const Rational twoN(2 * N);
    return {twoN / (Rational(n + 1) * pm), Rational(N) * mp / pm, twoN / pm};
}

bool is_link_orbit_resonant(int n, const Rational& eps, OrbitFamily family, long long N) {
    for (const auto& arg : link_floor_args(n, eps, family, N)) {
        if (is_integer(arg)) {
            return true;
        }
    }
    return false;
}

void require_link_orbit_nonresonant(int n, const Rational& eps, OrbitFamily family, long long N) {
    if (is_link_orbit_resonant(n, eps, family, N)) {
        throw degenerate_orbit_error("resonant parameters: eps = " + format_rational(eps) +
                                     " degenerates " + orbit_label(family, N) + " at n = " +
                                     std::to_string(n));
    }
}

bool is_link_orbit_nondegenerate(int n, const Rational& eps, OrbitFamily family, long long N) {
    const auto args = link_floor_args(n, eps, family, N);
    // args[0], args[1] integral <=> a xi-eigenvalue of the return map is 1.
    return !is_integer(args[0]) && !is_integer(args[1]);
}

long long cz_link_via_crossing(int n, const Rational& eps, OrbitFamily family, long long N) {
    require_link_orbit_nonresonant(n, eps, family, N);
    const Angle T(Rational(N) / one_pm(eps, family)); // N*pi/(1 +- eps)

    RotationPath full;
    full.duration = T;
    full.blocks   = {RotationBlock{Rational(4, n + 1)},
                     RotationBlock{Rational(2) * (Rational(1) + eps)},
                     RotationBlock{Rational(2) * (Rational(1) - eps)}};

    // Normal-bundle path diag(e^{4it}, 1): the constant factor is the orbit
    // direction pair already accounted for on the full-path side and
    // contributes 0 here.
    RotationPath normal;
    normal.duration = T;
    normal.blocks   = {RotationBlock{Rational(4)}};

    return cz_path(full) - cz_path(normal);
}

long long cz_link_via_crossing(const LinkParams& params, OrbitFamily family, long long N) {
    return cz_link_via_crossing(params.n, params.eps, family, N);
}

long long cz_link_closed_form(int n, const Rational& eps, OrbitFamily family, long long N) {
    require_link_orbit_nonresonant(n, eps, family, N);
    const auto args = link_floor_args(n, eps, family, N);
    const Integer floors =
        floor_rational(args[0]) + floor_rational(args[1]) - floor_rational(args[2]);
    return 2 * to_long_checked(floors) + 2 * N + 1;
}

long long cz_link_closed_form(const LinkParams& params, OrbitFamily family, long long N) {
    return cz_link_closed_form(params.n, params.eps, family, N);
}

long long cz_link_simplified(int n, const Rational& eps, OrbitFamily family, long long N) {
    if (eps >= Rational(1, N)) {
        throw regime_error("cz_link_simplified: requires eps < 1/N, got eps = " +
                           format_rational(eps) + ", N = " + std::to_string(N));
    }
    require_link_orbit_nonresonant(n, eps, family, N);
    const Rational arg = Rational(2 * N) / (Rational(n + 1) * one_pm(eps, family));
    return 2 * to_long_checked(floor_rational(arg)) + 1;
}

long long cz_link_simplified(const LinkParams& params, OrbitFamily family, long long N) {
    return cz_link_simplified(params.n, params.eps, family, N);
}

const char* family_name(OrbitFamily f) {
    return f == OrbitFamily::plus ? "plus" : "minus";
}

const char* lens_family_name(LensFamily f) {
    return f == LensFamily::gamma1 ? "gamma1" : "gamma2";
}

namespace {

Rational lens_floor_arg(int n, const Rational& a1, const Rational& a2, LensFamily which,
                        long long N) {
    const Rational& num = which == LensFamily::gamma1 ? a1 : a2;
    const Rational& den = which == LensFamily::gamma1 ? a2 : a1;
    return (Rational(N) + Rational(N) * num / den) / Rational(n + 1);
}

} // namespace

bool is_lens_orbit_resonant(int n, const Rational& a1, const Rational& a2, LensFamily which,
                            long long N) {
    return is_integer(lens_floor_arg(n, a1, a2, which, N));
}

long long cz_lens(int n, const Rational& a1, const Rational& a2, LensFamily which, long long N) {
    if (a1 <= 0 || a2 <= 0) {
        throw domain_error("cz_lens: a1, a2 must be positive");
    }
    const Rational arg = lens_floor_arg(n, a1, a2, which, N);
    if (is_integer(arg)) {
        throw degenerate_orbit_error(std::string("resonant lens parameters: a1 = ") +
                                     format_rational(a1) + ", a2 = " + format_rational(a2) +
                                     " degenerate " + lens_family_name(which) + "^" +
                                     std::to_string(N) + " at n = " + std::to_string(n));
    }
    return 2 * to_long_checked(floor_rational(arg)) + 1;
}

std::vector<CzTableRow> build_cz_table(const LinkParams& params, long long n_max) {
    if (n_max < 1) {
        throw domain_error("build_cz_table: n_max must be >= 1");
    }
    std::vector<CzTableRow> rows;
    rows.reserve(2 * n_max);
    for (const OrbitFamily family : {OrbitFamily::minus, OrbitFamily::plus}) {
        for (long long N = 1; N <= n_max; ++N) {
            CzTableRow row;
            row.family      = family;
            row.N           = N;
            row.mu_crossing = cz_link_via_crossing(params, family, N);
            row.mu_closed   = cz_link_closed_form(params, family, N);
            if (params.eps < Rational(1, N)) {
                row.has_simplified = true;
                row.mu_simplified  = cz_link_simplified(params, family, N);
            }
            row.homotopy_class = static_cast<int>(N % (params.n + 1));
            row.contractible   = row.homotopy_class == 0;
            rows.push_back(row);
        }
    }
    return rows;
}

Rational choose_eps(int n, long long n_max) {
    if (n_max < 1) {
        throw domain_error("choose_eps: n_max must be >= 1");
    }
    const Integer bound = Integer(10) * n_max;
    for (Integer q = bound + 1;; ++q) {
        // p/q < 1/(10*n_max)  <=>  p*10*n_max < q
        for (Integer p = 1; p * bound < q; ++p) {
            if (boost::multiprecision::gcd(p, q) != 1) {
                continue;
            }
            const Rational eps(p, q);
            bool ok = true;
            for (long long N = 1; N <= n_max && ok; ++N) {
                ok = !is_link_orbit_resonant(n, eps, OrbitFamily::plus, N) &&
                     !is_link_orbit_resonant(n, eps, OrbitFamily::minus, N);
            }
            if (ok) {
                return eps;
            }
        }
    }
}

} // namespace reebcz
