#pragma once

#include <array>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "reebcz/params.hpp"
#include "reebcz/point.hpp"

namespace reebcz {

// A 1-form on R^dim given by its coefficient vector: alpha = sum c_i dx^i.
struct OneForm {
    std::string name;
    int dim = 6;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> coeff;
    // Analytic exterior derivative (antisymmetric matrix), when available.
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> d_coeff;

    double operator()(const Eigen::VectorXd& p, const Eigen::VectorXd& v) const {
        return coeff(p).dot(v);
    }
};

// A 2-form via its antisymmetric coefficient matrix: omega(u,v) = u^T M v.
struct TwoForm {
    std::string name;
    int dim = 6;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> coeff;

    double operator()(const Eigen::VectorXd& p, const Eigen::VectorXd& u,
                      const Eigen::VectorXd& v) const {
        return u.dot(coeff(p) * v);
    }
};

struct VectorField {
    std::string name;
    int dim = 6;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> at;
};

// (d alpha)_{ij} = d_i c_j - d_j c_i by central differences with step h.
Eigen::MatrixXd exterior_derivative_fd(const OneForm& alpha, const Eigen::VectorXd& p,
                                       double h = 1e-5);

// L_X omega for a closed 2-form, via the Cartan formula L_X omega =
// d(iota_X omega) with a finite-difference exterior derivative.
Eigen::MatrixXd lie_derivative_fd(const VectorField& X, const TwoForm& omega,
                                  const Eigen::VectorXd& p, double h = 1e-5);

// All complex coordinate displays are translated to real coordinates here,
// and only here, through the standard identification w_j = x_j + i y_j:
//   (i c)(w dwbar - wbar dw) = 2c (x dy - y dx)
//   (i c) dw ^ dwbar         = 2c dx ^ dy
namespace forms {

// Canonical 1-form (i/4) sum (w dwbar - wbar dw) on C^3.
OneForm alpha0_c3();

// alpha_1 = (i/4) sum a_j (z dzbar - zbar dz) for Brieskorn exponents a.
OneForm alpha1_brieskorn(const std::array<int, 3>& a);

// The interpolating family alpha_t = (i/4) sum (z dzbar - zbar dz)/(1 - t + t/a_j).
OneForm alpha_t_brieskorn(const std::array<int, 3>& a, double t);

// (Psi^* alpha_1)/2 written out explicitly in the A_n chart.
OneForm half_pullback_alpha1(const LinkParams& params);

// The same form computed as an honest pullback through the linear map Psi;
// used to cross-check the display above.
OneForm half_pullback_alpha1_via_psi(const LinkParams& params);

// alpha_eps = (Psi^* alpha_1)/(2H), with analytic exterior derivative.
OneForm alpha_eps(const LinkParams& params);

// omega_1 = d(Psi^* alpha_1)/2 (constant coefficients).
TwoForm omega1(const LinkParams& params);

// Standard symplectic form (i/2) sum dz ^ dzbar on C^3.
TwoForm omega_c3();

// omega_{C^2} = d lambda_{C^2} with lambda_{C^2} = (i/2) sum (z dzbar - zbar dz).
TwoForm omega_c2();

// Coefficient vector of dH at p.
Eigen::VectorXd dH(const LinkParams& params, const Eigen::VectorXd& p);

// Real 6x6 matrix of the coordinate change Psi.
Mat6 psi_matrix();

} // namespace forms

namespace fields {

// Reeb field of alpha_eps: (4i/(n+1) w0, 2i(1+eps) w1, 2i(1-eps) w2).
VectorField reeb_eps(const LinkParams& params);

// Reeb field of alpha_1 on a general Brieskorn chart: 2i z_j / a_j.
VectorField reeb_alpha1_brieskorn(const std::array<int, 3>& a);

// Liouville field w/2 on C^3 (paired with omega_1).
VectorField liouville_x_c3();

// Radial Liouville field on C^2 \ {0}; evaluation at 0 throws.
VectorField y0_c2();

// grad(rho) = radial field / 2 on C^3.
VectorField y_radial_c3();

} // namespace fields

// Reeb field value as a complex triple.
PointC3 eval_reeb_eps(const LinkParams& params, const PointC3& p);

} // namespace reebcz
