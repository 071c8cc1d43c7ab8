#include "reebcz/forms.hpp"

#include <cmath>

#include "reebcz/errors.hpp"
#include "reebcz/geometry.hpp"
#include "reebcz/lens.hpp"

namespace reebcz {

Eigen::MatrixXd exterior_derivative_fd(const OneForm& alpha, const Eigen::VectorXd& p, double h) {
    const int dim = alpha.dim;
    Eigen::MatrixXd jac(dim, dim); // jac(i, j) = d_i c_j
    Eigen::VectorXd q = p;
    for (int i = 0; i < dim; ++i) {
        q[i]                      = p[i] + h;
        const Eigen::VectorXd cp  = alpha.coeff(q);
        q[i]                      = p[i] - h;
        const Eigen::VectorXd cm  = alpha.coeff(q);
        q[i]                      = p[i];
        jac.row(i)                = ((cp - cm) / (2.0 * h)).transpose();
    }
    return jac - jac.transpose();
}

Eigen::MatrixXd lie_derivative_fd(const VectorField& X, const TwoForm& omega,
                                  const Eigen::VectorXd& p, double h) {
    OneForm contraction;
    contraction.name  = "iota_" + X.name + "_" + omega.name;
    contraction.dim   = omega.dim;
    contraction.coeff = [&X, &omega](const Eigen::VectorXd& q) -> Eigen::VectorXd {
        // (iota_X omega)_j = omega(X, e_j) = X^T M e_j
        return omega.coeff(q).transpose() * X.at(q);
    };
    return exterior_derivative_fd(contraction, p, h);
}

namespace {

// c (x_j dy_j - y_j dx_j) as a coefficient contribution.
void add_circulation(Eigen::VectorXd& c, const Eigen::VectorXd& p, double scale, int j) {
    c[2 * j] += -scale * p[2 * j + 1];
    c[2 * j + 1] += scale * p[2 * j];
}

// c dx_j ^ dy_j as a matrix contribution.
void add_area(Eigen::MatrixXd& m, double scale, int j) {
    m(2 * j, 2 * j + 1) += scale;
    m(2 * j + 1, 2 * j) -= scale;
}

OneForm circulation_form(std::string name, int dim, std::array<double, 3> scales) {
    OneForm alpha;
    alpha.name  = std::move(name);
    alpha.dim   = dim;
    alpha.coeff = [scales, dim](const Eigen::VectorXd& p) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
        for (int j = 0; j < dim / 2; ++j) {
            add_circulation(c, p, scales[j], j);
        }
        return c;
    };
    alpha.d_coeff = [scales, dim](const Eigen::VectorXd&) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for (int j = 0; j < dim / 2; ++j) {
            add_area(m, 2.0 * scales[j], j);
        }
        return m;
    };
    return alpha;
}

TwoForm constant_area_form(std::string name, int dim, std::array<double, 3> scales) {
    TwoForm omega;
    omega.name  = std::move(name);
    omega.dim   = dim;
    omega.coeff = [scales, dim](const Eigen::VectorXd&) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
        for (int j = 0; j < dim / 2; ++j) {
            add_area(m, scales[j], j);
        }
        return m;
    };
    return omega;
}

double half_weight(int n, int j) {
    // coefficients of (Psi^* alpha_1)/2: (i(n+1)/8, i/4, i/4) -> real scales.
    return j == 0 ? (n + 1) / 4.0 : 0.5;
}

} // namespace

namespace forms {

OneForm alpha0_c3() {
    // (i/4)(w dwbar - wbar dw) -> (1/2)(x dy - y dx) per coordinate.
    return circulation_form("alpha0", 6, {0.5, 0.5, 0.5});
}

OneForm alpha1_brieskorn(const std::array<int, 3>& a) {
    return circulation_form("alpha1", 6, {a[0] / 2.0, a[1] / 2.0, a[2] / 2.0});
}

OneForm alpha_t_brieskorn(const std::array<int, 3>& a, double t) {
    std::array<double, 3> scales{};
    for (int j = 0; j < 3; ++j) {
        scales[j] = 0.5 / (1.0 - t + t / a[j]);
    }
    return circulation_form("alpha_t", 6, scales);
}

OneForm half_pullback_alpha1(const LinkParams& params) {
    return circulation_form("half_pullback_alpha1", 6,
                            {half_weight(params.n, 0), half_weight(params.n, 1),
                             half_weight(params.n, 2)});
}

Mat6 psi_matrix() {
    // Real embedding of the complex linear map Psi: each complex entry
    // a + ib becomes the 2x2 block [[a, -b], [b, a]].
    const double r = std::sqrt(2.0) / 2.0;
    Mat6 m         = Mat6::Zero();
    const auto put = [&m](int row, int col, Complex entry) {
        m(2 * row, 2 * col)         = entry.real();
        m(2 * row, 2 * col + 1)     = -entry.imag();
        m(2 * row + 1, 2 * col)     = entry.imag();
        m(2 * row + 1, 2 * col + 1) = entry.real();
    };
    put(0, 0, {1.0, 0.0});
    put(1, 1, {r, 0.0});
    put(1, 2, {r, 0.0});
    put(2, 1, {0.0, -r});
    put(2, 2, {0.0, r});
    return m;
}

OneForm half_pullback_alpha1_via_psi(const LinkParams& params) {
    const std::array<int, 3> a{params.n + 1, 2, 2};
    OneForm alpha;
    alpha.name  = "half_pullback_alpha1_via_psi";
    alpha.dim   = 6;
    alpha.coeff = [alpha1 = alpha1_brieskorn(a), m = psi_matrix()](const Eigen::VectorXd& p) {
        // (Psi^* alpha)(p) = M^T alpha(M p), then the global factor 1/2.
        return Eigen::VectorXd(0.5 * (m.transpose() * alpha1.coeff(m * p)));
    };
    return alpha;
}

Eigen::VectorXd dH(const LinkParams& params, const Eigen::VectorXd& p) {
    const double eps = params.eps_double();
    Eigen::VectorXd c(6);
    c << 2.0 * p[0], 2.0 * p[1], 2.0 * (1.0 + eps) * p[2], 2.0 * (1.0 + eps) * p[3],
        2.0 * (1.0 - eps) * p[4], 2.0 * (1.0 - eps) * p[5];
    return c;
}

OneForm alpha_eps(const LinkParams& params) {
    OneForm alpha;
    alpha.name = "alpha_eps";
    alpha.dim  = 6;

    const OneForm beta = half_pullback_alpha1(params);
    const auto H       = [params](const Eigen::VectorXd& p) {
        return eval_H(params, PointC3::from_vec(p));
    };

    alpha.coeff = [beta, H](const Eigen::VectorXd& p) {
        return Eigen::VectorXd(beta.coeff(p) / H(p));
    };
    // d(beta/H) = -(dH ^ beta)/H^2 + omega_1/H.
    alpha.d_coeff = [params, beta, H](const Eigen::VectorXd& p) {
        const double h          = H(p);
        const Eigen::VectorXd b = beta.coeff(p);
        const Eigen::VectorXd g = dH(params, p);
        const Eigen::MatrixXd wedge = g * b.transpose() - b * g.transpose();
        return Eigen::MatrixXd(-wedge / (h * h) + beta.d_coeff(p) / h);
    };
    return alpha;
}

TwoForm omega1(const LinkParams& params) {
    return constant_area_form("omega1", 6, {(params.n + 1) / 2.0, 1.0, 1.0});
}

TwoForm omega_c3() {
    return constant_area_form("omega_c3", 6, {1.0, 1.0, 1.0});
}

TwoForm omega_c2() {
    return constant_area_form("omega_c2", 4, {2.0, 2.0, 0.0});
}

} // namespace forms

namespace fields {

VectorField reeb_eps(const LinkParams& params) {
    VectorField field;
    field.name = "reeb_eps";
    field.dim  = 6;
    field.at   = [params](const Eigen::VectorXd& p) {
        return eval_reeb_eps(params, PointC3::from_vec(p)).to_vec();
    };
    return field;
}

VectorField reeb_alpha1_brieskorn(const std::array<int, 3>& a) {
    VectorField field;
    field.name = "reeb_alpha1";
    field.dim  = 6;
    field.at   = [a](const Eigen::VectorXd& p) {
        Eigen::VectorXd r(6);
        for (int j = 0; j < 3; ++j) {
            // 2i z_j / a_j: multiplication by i sends (x, y) to (-y, x).
            r[2 * j]     = -2.0 * p[2 * j + 1] / a[j];
            r[2 * j + 1] = 2.0 * p[2 * j] / a[j];
        }
        return r;
    };
    return field;
}

VectorField liouville_x_c3() {
    VectorField field;
    field.name = "X";
    field.dim  = 6;
    field.at   = [](const Eigen::VectorXd& p) { return Eigen::VectorXd(0.5 * p); };
    return field;
}

VectorField y0_c2() {
    VectorField field;
    field.name = "Y0";
    field.dim  = 4;
    field.at   = [](const Eigen::VectorXd& p) {
        if (p.norm() < 1e-14) {
            throw domain_error("y0_c2: the field is only defined away from the origin");
        }
        return Eigen::VectorXd(0.5 * p);
    };
    return field;
}

VectorField y_radial_c3() {
    VectorField field;
    field.name = "Y_radial";
    field.dim  = 6;
    field.at   = [](const Eigen::VectorXd& p) { return Eigen::VectorXd(0.5 * p); };
    return field;
}

} // namespace fields

PointC3 eval_reeb_eps(const LinkParams& params, const PointC3& p) {
    const double eps = params.eps_double();
    const Complex i{0.0, 1.0};
    return {4.0 * i / static_cast<double>(params.n + 1) * p.w[0],
            2.0 * i * (1.0 + eps) * p.w[1], 2.0 * i * (1.0 - eps) * p.w[2]};
}

} // namespace reebcz
