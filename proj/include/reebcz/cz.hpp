#pragma once

#include <array>
#include <vector>

#include "reebcz/params.hpp"
#include "reebcz/rational.hpp"

namespace reebcz {

// One circle-rotation factor t |-> e^{i*speed*t} of a diagonal unitary path.
// Negative speeds are allowed; zero speed marks a constant block, which has
// eigenvalue 1 and therefore never lies in Sigma*.
struct RotationBlock {
    Rational speed;
};

// A direct sum of rotation blocks, all running over t in [0, duration].
struct RotationPath {
    std::vector<RotationBlock> blocks;
    Angle duration;
};

// Endpoint admissibility: no nonconstant block ends at eigenvalue 1 and no
// block is constant. Decided exactly.
bool in_sigma_star(const RotationPath& path);

// Conley-Zehnder index of a single rotation block over [0, T].
//
// With q = speed * T / pi (exact rational):
//   q an even integer -> q            (the boundary value T/pi)
//   otherwise         -> 2*floor(q/2) + 1
// and the sign-reflected value for negative speeds. Zero speed throws.
long long cz_rotation(const RotationBlock& block, const Angle& T);

// Sum of the per-block indices (index additivity under direct sums).
long long cz_path(const RotationPath& path);

// The three floor arguments of the closed-form index for gamma_{family}^N:
//   { 2N/((n+1)(1 +- eps)),  N(1 -+ eps)/(1 +- eps),  2N/(1 +- eps) }.
// Any of them being an exact integer is the resonance condition shared by
// every index route.
std::array<Rational, 3> link_floor_args(int n, const Rational& eps, OrbitFamily family, long long N);

bool is_link_orbit_resonant(int n, const Rational& eps, OrbitFamily family, long long N);

// Throws degenerate_orbit_error when resonant, naming (family, N).
void require_link_orbit_nonresonant(int n, const Rational& eps, OrbitFamily family, long long N);

// Exact nondegeneracy of the orbit itself: both eigenvalues of the return
// map restricted to the contact structure differ from 1. This is the
// subset of the resonance conditions coming from the first two floor
// arguments (the third one guards the normal-bundle path decomposition).
bool is_link_orbit_nondegenerate(int n, const Rational& eps, OrbitFamily family, long long N);

// Index of gamma_{family}^N via the crossing-form engine: the full
// linearized flow diag(e^{4it/(n+1)}, e^{2i(1+eps)t}, e^{2i(1-eps)t}) is
// indexed blockwise over [0, N*pi/(1 +- eps)], the normal-bundle path
// (one block e^{4it}; its constant partner contributes 0) is subtracted.
long long cz_link_via_crossing(const LinkParams& params, OrbitFamily family, long long N);
long long cz_link_via_crossing(int n, const Rational& eps, OrbitFamily family, long long N);

// Same index from the closed-form floor expression
//   2*( floor(2N/((n+1)(1 +- eps))) + floor(N(1 -+ eps)/(1 +- eps))
//       - floor(2N/(1 +- eps)) ) + 2N + 1.
long long cz_link_closed_form(const LinkParams& params, OrbitFamily family, long long N);
long long cz_link_closed_form(int n, const Rational& eps, OrbitFamily family, long long N);

// Small-eps simplification 2*floor(2N/((n+1)(1 -+ eps))) + 1 (minus family
// pairs with 1-eps, plus with 1+eps). Enforces eps < 1/N.
long long cz_link_simplified(const LinkParams& params, OrbitFamily family, long long N);
long long cz_link_simplified(int n, const Rational& eps, OrbitFamily family, long long N);

enum class LensFamily { gamma1, gamma2 };

const char* lens_family_name(LensFamily f);

// Index of the lens-space orbit gamma_1^N (gamma_2 swaps a1 and a2):
//   2 * floor( N/(n+1) + N*a1/((n+1)*a2) ) + 1.
// Resonance (the floor argument an exact integer) throws.
long long cz_lens(int n, const Rational& a1, const Rational& a2, LensFamily which, long long N);

bool is_lens_orbit_resonant(int n, const Rational& a1, const Rational& a2, LensFamily which,
                            long long N);

// Smallest-denominator rational eps in (0, 1/(10*n_max)) that is
// nonresonant for every N <= n_max and both families.
Rational choose_eps(int n, long long n_max);

// One row of the index table: both computation routes plus the simplified
// formula where its eps < 1/N regime applies.
struct CzTableRow {
    OrbitFamily family      = OrbitFamily::minus;
    long long N             = 1;
    long long mu_crossing   = 0;
    long long mu_closed     = 0;
    bool has_simplified     = false;
    long long mu_simplified = 0;
    int homotopy_class      = 0;
    bool contractible       = false;
};

// Rows for gamma_minus^1..n_max then gamma_plus^1..n_max.
std::vector<CzTableRow> build_cz_table(const LinkParams& params, long long n_max);

} // namespace reebcz
