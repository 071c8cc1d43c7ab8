#include "reebcz/params.hpp"

#include <string>

#include "reebcz/cz.hpp"
#include "reebcz/errors.hpp"

namespace reebcz {

LinkParams::LinkParams(int n_, Rational eps_, long long n_max_)
    : n(n_), eps(std::move(eps_)), n_max(n_max_) {
    if (n < 1) {
        throw domain_error("LinkParams: n must be >= 1");
    }
    if (n_max < 1) {
        throw domain_error("LinkParams: n_max must be >= 1");
    }
    if (!(eps > 0 && eps < 1)) {
        throw degenerate_orbit_error("LinkParams: eps must lie in (0,1), got " +
                                     format_rational(eps));
    }
    for (long long N = 1; N <= n_max; ++N) {
        require_link_orbit_nonresonant(n, eps, OrbitFamily::plus, N);
        require_link_orbit_nonresonant(n, eps, OrbitFamily::minus, N);
    }
}

} // namespace reebcz
