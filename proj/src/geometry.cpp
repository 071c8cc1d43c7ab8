#include "reebcz/geometry.hpp"

#include <cmath>
#include <string>

#include <Eigen/SVD>

#include "reebcz/errors.hpp"
#include "reebcz/lens.hpp"
#include "reebcz/util.hpp"

namespace reebcz {

Complex eval_f(int n, const PointC3& p) {
    return std::pow(p.w[0], n + 1) + 2.0 * p.w[1] * p.w[2];
}

Complex eval_f(const LinkParams& params, const PointC3& p) {
    return eval_f(params.n, p);
}

Complex eval_f_brieskorn(int n, const PointC3& p) {
    return std::pow(p.w[0], n + 1) + p.w[1] * p.w[1] + p.w[2] * p.w[2];
}

double eval_H(const LinkParams& params, const PointC3& p) {
    return p.norm_sq() + params.eps_double() * (std::norm(p.w[1]) - std::norm(p.w[2]));
}

double eval_rho(const PointC3& p) {
    return (p.norm_sq() - 1.0) / 4.0;
}

bool on_link(const LinkParams& params, const PointC3& p, double tol) {
    return std::abs(eval_f(params, p)) < tol && std::abs(p.norm_sq() - 1.0) < tol;
}

PointC3 weighted_scale(int n, const PointC3& p, double lambda) {
    const double s0 = std::pow(lambda, 2.0 / (n + 1));
    return {s0 * p.w[0], lambda * p.w[1], lambda * p.w[2]};
}

PointC3 rescale_to_sphere(int n, const PointC3& p) {
    const double a = std::norm(p.w[0]);
    const double b = std::norm(p.w[1]) + std::norm(p.w[2]);
    if (a + b == 0.0) {
        throw sampling_error("rescale_to_sphere: zero point has no weighted ray");
    }
    // |sigma_lambda(p)|^2 = lambda^{4/(n+1)} a + lambda^2 b is strictly
    // increasing in lambda, so a sign-bracketing bisection converges.
    const auto g = [&](double lambda) {
        return std::pow(lambda, 4.0 / (n + 1)) * a + lambda * lambda * b - 1.0;
    };
    double lo = 0.0;
    double hi = 1.0;
    int guard = 0;
    while (g(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 200) {
            throw sampling_error("rescale_to_sphere: bracketing failed");
        }
    }
    for (int it = 0; it < 200 && (hi - lo) > 1e-17 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    const double lambda = 0.5 * (lo + hi);
    PointC3 q           = weighted_scale(n, p, lambda);
    if (std::abs(q.norm_sq() - 1.0) > 1e-13) {
        throw sampling_error("rescale_to_sphere: bisection did not converge, |q|^2 = " +
                             std::to_string(q.norm_sq()));
    }
    return q;
}

PointC3 link_point_from_s3(int n, Complex u, Complex v) {
    return rescale_to_sphere(n, phi_tilde(n, u, v));
}

std::vector<PointC3> sample_link(const LinkParams& params, int count, std::uint64_t seed) {
    if (count <= 0) {
        throw domain_error("sample_link: count must be positive");
    }
    SeededRng rng(seed);
    std::vector<PointC3> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        const auto [u, v] = rng.unit_s3();
        points.push_back(link_point_from_s3(params.n, u, v));
    }
    return points;
}

// d(Re g) and d(Im g) for the holomorphic monomial terms, written directly
// in interleaved real coordinates.
Vec6 grad_re_f(int n, const PointC3& p) {
    // d f = (n+1) w0^n dw0 + 2 w2 dw1 + 2 w1 dw2; for a holomorphic
    // coefficient c = a + ib, Re(c dw) = a dx - b dy.
    const Complex c0 = static_cast<double>(n + 1) * std::pow(p.w[0], n);
    const Complex c1 = 2.0 * p.w[2];
    const Complex c2 = 2.0 * p.w[1];
    Vec6 g;
    g << c0.real(), -c0.imag(), c1.real(), -c1.imag(), c2.real(), -c2.imag();
    return g;
}

Vec6 grad_im_f(int n, const PointC3& p) {
    // Im(c dw) = b dx + a dy.
    const Complex c0 = static_cast<double>(n + 1) * std::pow(p.w[0], n);
    const Complex c1 = 2.0 * p.w[2];
    const Complex c2 = 2.0 * p.w[1];
    Vec6 g;
    g << c0.imag(), c0.real(), c1.imag(), c1.real(), c2.imag(), c2.real();
    return g;
}

Vec6 grad_rho(const PointC3& p) {
    return 0.5 * p.to_vec();
}

TangentFrame tangent_frame(const LinkParams& params, const PointC3& p) {
    Eigen::Matrix<double, 3, 6> jac;
    jac.row(0) = grad_re_f(params.n, p).transpose();
    jac.row(1) = grad_im_f(params.n, p).transpose();
    jac.row(2) = grad_rho(p).transpose();

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeFullV);
    const auto& sv          = svd.singularValues();
    const double rank_floor = 1e-10 * std::max(1.0, sv[0]);
    if (sv[2] < rank_floor) {
        throw degenerate_point_error("tangent_frame: Jacobian rank < 3 (singular point)");
    }

    TangentFrame frame;
    frame.base = p;
    for (int k = 0; k < 3; ++k) {
        frame.vectors[k] = svd.matrixV().col(3 + k);
    }
    return frame;
}

} // namespace reebcz
