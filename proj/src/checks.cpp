#include "reebcz/checks.hpp"

#include <cmath>

#include <Eigen/SVD>

#include "reebcz/errors.hpp"

namespace reebcz {

namespace {

Complex df_complex(int n, const PointC3& p, const Vec6& v) {
    return {grad_re_f(n, p).dot(v), grad_im_f(n, p).dot(v)};
}

void require_on_link(const LinkParams& params, const PointC3& p, double tol) {
    if (!on_link(params, p, tol)) {
        throw precondition_error("point is not on the link to tolerance");
    }
}

} // namespace

std::vector<IdentityCheck> check_reeb_defining(const LinkParams& params, const PointC3& p,
                                               const Tolerances& tol) {
    require_on_link(params, p, tol.on_link);

    const Vec6 pv          = p.to_vec();
    const Vec6 r           = eval_reeb_eps(params, p).to_vec();
    const OneForm alpha    = forms::alpha_eps(params);
    const TangentFrame frm = tangent_frame(params, p);

    std::vector<IdentityCheck> out;
    out.push_back(make_check("reeb_alpha_eps_value", p, std::abs(alpha(pv, r) - 1.0),
                             tol.identity));

    const Eigen::MatrixXd dalpha = alpha.d_coeff(pv);
    double kernel_residual       = 0.0;
    for (const Vec6& v : frm.vectors) {
        kernel_residual = std::max(kernel_residual, std::abs(r.dot(dalpha * v)));
    }
    out.push_back(make_check("reeb_dalpha_eps_kernel", p, kernel_residual, tol.identity));

    const Complex df  = df_complex(params.n, p, r);
    double tangency   = std::max({std::abs(df.real()), std::abs(df.imag()),
                                  std::abs(grad_rho(p).dot(r))});
    out.push_back(make_check("reeb_tangency", p, tangency, tol.identity));
    return out;
}

IdentityCheck check_liouville(const VectorField& field, const TwoForm& omega,
                              const Eigen::VectorXd& p, double tol, double h) {
    if (field.dim != omega.dim || p.size() != field.dim) {
        throw domain_error("check_liouville: dimension mismatch between field, form and point");
    }
    field.at(p); // enforce the field's domain at the base point
    const Eigen::MatrixXd lie = lie_derivative_fd(field, omega, p, h);
    const double residual     = (lie - omega.coeff(p)).cwiseAbs().maxCoeff();

    PointC3 record;
    for (int j = 0; j < field.dim / 2; ++j) {
        record.w[j] = {p[2 * j], p[2 * j + 1]};
    }
    return make_check("liouville_" + field.name + "_" + omega.name, record, residual, tol);
}

IdentityCheck check_hamiltonian_identity(const LinkParams& params, const PointC3& p,
                                         double tol) {
    const Vec6 pv               = p.to_vec();
    const Eigen::MatrixXd om    = forms::omega1(params).coeff(pv);
    const Eigen::VectorXd minus_r = -eval_reeb_eps(params, p).to_vec();
    // omega_1(-R, e_j) as a coefficient vector, against dH.
    const Eigen::VectorXd lhs = om.transpose() * minus_r;
    const double residual     = (lhs - forms::dH(params, pv)).cwiseAbs().maxCoeff();
    return make_check("hamiltonian_identity", p, residual, tol);
}

std::array<Vec6, 2> xi_basis(const LinkParams& params, const PointC3& p) {
    const TangentFrame frm = tangent_frame(params, p);
    const OneForm beta     = forms::half_pullback_alpha1(params);
    const Vec6 pv          = p.to_vec();

    Eigen::Matrix<double, 1, 3> row;
    for (int k = 0; k < 3; ++k) {
        row(0, k) = beta(pv, frm.vectors[k]);
    }
    if (row.norm() < 1e-13) {
        throw internal_error("xi_basis: contact form vanishes on the whole tangent space");
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(row, Eigen::ComputeFullV);
    std::array<Vec6, 2> basis;
    for (int k = 0; k < 2; ++k) {
        const Eigen::Vector3d c = svd.matrixV().col(1 + k);
        basis[k] = c[0] * frm.vectors[0] + c[1] * frm.vectors[1] + c[2] * frm.vectors[2];
    }
    return basis;
}

std::vector<IdentityCheck> check_contact_condition(const LinkParams& params, const PointC3& p,
                                                   ContactFormTag tag, const Tolerances& tol) {
    require_on_link(params, p, tol.on_link);
    const OneForm alpha =
        tag == ContactFormTag::alpha0 ? forms::alpha0_c3() : forms::alpha_eps(params);
    const std::string suffix = tag == ContactFormTag::alpha0 ? "alpha0" : "alpha_eps";

    const TangentFrame frm = tangent_frame(params, p);
    const Vec6 pv          = p.to_vec();
    const Eigen::MatrixXd d = alpha.d_coeff(pv);
    const auto dpair        = [&](const Vec6& u, const Vec6& v) { return u.dot(d * v); };
    const auto& t           = frm.vectors;

    const double volume = alpha(pv, t[0]) * dpair(t[1], t[2]) -
                          alpha(pv, t[1]) * dpair(t[0], t[2]) +
                          alpha(pv, t[2]) * dpair(t[0], t[1]);

    std::vector<IdentityCheck> out;
    out.push_back(make_check("contact_volume_" + suffix, p, std::abs(volume), tol.volume,
                             CheckMode::magnitude_above));

    const auto xi = xi_basis(params, p);
    out.push_back(make_check("dalpha_nondeg_on_xi_" + suffix, p,
                             std::abs(dpair(xi[0], xi[1])), tol.volume,
                             CheckMode::magnitude_above));
    return out;
}

SymplecticBasisResult check_symplectic_basis(const LinkParams& params, const PointC3& p) {
    SymplecticBasisResult result;
    const Vec6 pv            = p.to_vec();
    const Eigen::MatrixXd om = forms::omega1(params).coeff(pv);
    const auto pair          = [&](const Vec6& u, const Vec6& v) { return u.dot(om * v); };

    const Complex i{0.0, 1.0};
    const PointC3 x1c{std::pow(std::conj(p.w[0]), params.n), std::conj(p.w[1]),
                      std::conj(p.w[2])};
    const PointC3 y1c{i * x1c.w[0], i * x1c.w[1], i * x1c.w[2]};

    std::array<Vec6, 4> basis{x1c.to_vec(), y1c.to_vec(), eval_reeb_eps(params, p).to_vec(),
                              pv};

    const double s2 = pair(basis[0], basis[1]);
    if (s2 <= 0.0) {
        result.normalization_ok = false;
        return result;
    }
    const double s = std::sqrt(s2);
    basis[0] /= s;
    basis[1] /= s;

    // Project the second pair off span(X1, Y1) symplectically.
    const auto project_off = [&](const Vec6& v) -> Vec6 {
        return v - pair(v, basis[1]) * basis[0] + pair(v, basis[0]) * basis[1];
    };
    basis[2] = project_off(basis[2]);
    basis[3] = project_off(basis[3]);

    const double c = pair(basis[2], basis[3]);
    if (std::abs(c) < 1e-12) {
        result.normalization_ok = false;
        return result;
    }
    basis[3] /= c;

    Eigen::Matrix4d gram;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            gram(a, b) = pair(basis[a], basis[b]);
        }
    }
    result.gram = gram;

    Eigen::Matrix4d standard = Eigen::Matrix4d::Zero();
    standard(0, 1)           = 1.0;
    standard(1, 0)           = -1.0;
    standard(2, 3)           = 1.0;
    standard(3, 2)           = -1.0;
    result.gram_error = (gram - standard).cwiseAbs().maxCoeff();

    const auto xi = xi_basis(params, p);
    double worst  = 0.0;
    for (const Vec6& b : basis) {
        for (const Vec6& e : xi) {
            worst = std::max(worst, std::abs(pair(b, e)) / (b.norm() * e.norm()));
        }
    }
    result.xi_span_residual = worst;
    return result;
}

IdentityCheck check_alpha_eps_pullback(const LinkParams& params, const PointC3& p, double tol) {
    const Vec6 pv                = p.to_vec();
    const Eigen::VectorXd direct = forms::alpha_eps(params).coeff(pv);
    const Eigen::VectorXd viapsi =
        forms::half_pullback_alpha1_via_psi(params).coeff(pv) / eval_H(params, p);
    return make_check("alpha_eps_pullback", p, (direct - viapsi).cwiseAbs().maxCoeff(), tol);
}

IdentityCheck check_kernel_equality(const LinkParams& params, const PointC3& p, double tol) {
    const Vec6 pv             = p.to_vec();
    const OneForm alpha       = forms::alpha_eps(params);
    const OneForm beta_psi    = forms::half_pullback_alpha1_via_psi(params);
    const auto xi             = xi_basis(params, p); // built from the display route
    double residual           = 0.0;
    for (const Vec6& v : xi) {
        residual = std::max(residual, std::abs(beta_psi(pv, v)));
        residual = std::max(residual, std::abs(alpha(pv, v)));
    }
    return make_check("kernel_equality", p, residual, tol);
}

IdentityCheck check_dH_along_reeb(const LinkParams& params, const PointC3& p, double tol) {
    const Vec6 pv = p.to_vec();
    const double residual =
        std::abs(forms::dH(params, pv).dot(eval_reeb_eps(params, p).to_vec()));
    return make_check("dH_along_reeb", p, residual, tol);
}

IdentityCheck check_f_reeb_derivative(const LinkParams& params, const PointC3& p, double tol) {
    const Vec6 r     = eval_reeb_eps(params, p).to_vec();
    const Complex df = df_complex(params.n, p, r);
    const Complex rhs = Complex{0.0, 4.0} * eval_f(params, p);
    return make_check("f_reeb_derivative", p, std::abs(df - rhs), tol);
}

IdentityCheck check_dalpha_eps_fd(const LinkParams& params, const PointC3& p, double tol) {
    const OneForm alpha = forms::alpha_eps(params);
    const Vec6 pv       = p.to_vec();
    const double residual =
        (exterior_derivative_fd(alpha, pv) - alpha.d_coeff(pv)).cwiseAbs().maxCoeff();
    return make_check("dalpha_eps_fd_agreement", p, residual, tol);
}

RadialTangency radial_y_tangency(int n, const PointC3& p) {
    RadialTangency out;
    // df(Y) with Y = (1/2) sum (w d/dw + conj): ((n+1)/2) w0^{n+1} + 2 w1 w2.
    out.df_y = 0.5 * static_cast<double>(n + 1) * std::pow(p.w[0], n + 1) +
               2.0 * p.w[1] * p.w[2];
    out.predicted        = static_cast<double>(1 - n) * p.w[1] * p.w[2];
    out.magnitude        = std::abs(out.df_y);
    out.prediction_error = std::abs(out.df_y - out.predicted);
    return out;
}

} // namespace reebcz
