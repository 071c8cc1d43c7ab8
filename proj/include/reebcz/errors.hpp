#pragma once

#include <stdexcept>
#include <string>

namespace reebcz {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument to an exact operation (e.g. nonpositive divisor).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A floor argument is an exact integer or a return-map eigenvalue is
// exactly 1; the requested index/orbit is degenerate at these parameters.
struct degenerate_orbit_error : error {
    explicit degenerate_orbit_error(const std::string& msg) : error(msg) {}
};

// Jacobian rank collapse at a point (singular point of the variety).
struct degenerate_point_error : error {
    explicit degenerate_point_error(const std::string& msg) : error(msg) {}
};

// A caller-supplied point violates a documented precondition (e.g. off-link).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

// Parameters outside the validity regime of a formula.
struct regime_error : error {
    explicit regime_error(const std::string& msg) : error(msg) {}
};

// Point sampling / root bracketing failed to converge.
struct sampling_error : error {
    explicit sampling_error(const std::string& msg) : error(msg) {}
};

// A rank table is used as homology without its lacunarity certificate.
struct certificate_error : error {
    explicit certificate_error(const std::string& msg) : error(msg) {}
};

// An internal consistency assumption (e.g. index monotonicity) was violated.
struct internal_error : error {
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace reebcz
