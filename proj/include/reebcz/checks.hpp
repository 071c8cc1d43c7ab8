#pragma once

#include <array>
#include <vector>

#include "reebcz/forms.hpp"
#include "reebcz/geometry.hpp"
#include "reebcz/identity.hpp"

namespace reebcz {

// Defining equations of the Reeb field at an on-link point: alpha_eps(R) = 1,
// d alpha_eps(R, v) = 0 on the tangent frame, and tangency to the link.
// Off-link points throw precondition_error.
std::vector<IdentityCheck> check_reeb_defining(const LinkParams& params, const PointC3& p,
                                               const Tolerances& tol = {});

// L_X omega = omega through the Cartan formula with a finite-difference
// exterior derivative of iota_X omega; residual in max norm on coordinate
// 2-vectors. The form must be closed (all forms here have constant
// coefficients).
IdentityCheck check_liouville(const VectorField& field, const TwoForm& omega,
                              const Eigen::VectorXd& p, double tol = 1e-7, double h = 1e-5);

// omega_1(-R, .) = dH(.) compared coefficientwise.
IdentityCheck check_hamiltonian_identity(const LinkParams& params, const PointC3& p,
                                         double tol = 1e-9);

enum class ContactFormTag { alpha0, alpha_eps };

// alpha ^ d alpha evaluated on the tangent frame must have magnitude above
// tol.volume, and d alpha must be nondegenerate on xi_p.
std::vector<IdentityCheck> check_contact_condition(const LinkParams& params, const PointC3& p,
                                                   ContactFormTag tag,
                                                   const Tolerances& tol = {});

// Orthonormal basis of xi_p = ker((Psi^* alpha_1)/2) intersected with T_p L.
std::array<Vec6, 2> xi_basis(const LinkParams& params, const PointC3& p);

// Symplectic Gram-Schmidt on (X1, Y1, X2, Y2) = ((w0bar^n, w1bar, w2bar),
// i X1, R_eps, w); the resulting omega_1-Gram matrix should be the standard
// antisymmetric block form.
struct SymplecticBasisResult {
    Eigen::Matrix4d gram = Eigen::Matrix4d::Zero();
    double gram_error    = 0.0; // max deviation from the standard blocks
    double xi_span_residual = 0.0; // scale-free pairing against xi (report-only)
    bool normalization_ok   = true;
};

SymplecticBasisResult check_symplectic_basis(const LinkParams& params, const PointC3& p);

// The explicit alpha_eps display against the honest pullback route
// (alpha_1 pulled through Psi, divided by 2H), compared coefficientwise.
IdentityCheck check_alpha_eps_pullback(const LinkParams& params, const PointC3& p,
                                       double tol = 1e-10);

// ker alpha_eps = ker (Psi^* alpha_1) on the link: vectors cut out by one
// route annihilate the form from the other route.
IdentityCheck check_kernel_equality(const LinkParams& params, const PointC3& p,
                                    double tol = 1e-9);

// H is constant along Reeb trajectories: |dH(R)| at p.
IdentityCheck check_dH_along_reeb(const LinkParams& params, const PointC3& p, double tol = 1e-9);

// df(R_eps) = 4i f at arbitrary points of C^3.
IdentityCheck check_f_reeb_derivative(const LinkParams& params, const PointC3& p,
                                      double tol = 1e-9);

// Finite-difference exterior derivative of alpha_eps against its analytic
// formula.
IdentityCheck check_dalpha_eps_fd(const LinkParams& params, const PointC3& p, double tol = 1e-7);

// df(Y) for the radial Liouville field Y = grad(rho) at a point of
// f^{-1}(0). On the hypersurface this equals (1 - n) w1 w2, so it vanishes
// identically only for n = 1: the radial field is not tangent to the
// hypersurface for n > 1. Recorded, never asserted to vanish.
struct RadialTangency {
    Complex df_y;
    Complex predicted; // (1 - n) w1 w2
    double magnitude         = 0.0;
    double prediction_error  = 0.0;
};

RadialTangency radial_y_tangency(int n, const PointC3& p);

} // namespace reebcz
