#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "reebcz/checks.hpp"
#include "reebcz/errors.hpp"
#include "reebcz/forms.hpp"
#include "reebcz/geometry.hpp"
#include "reebcz/lens.hpp"
#include "reebcz/util.hpp"

using namespace reebcz;

namespace {

const LinkParams params2(2, Rational(1, 1000), 20);
const Complex I{0.0, 1.0};

Eigen::VectorXd random_vec(SeededRng& rng, int dim) {
    Eigen::VectorXd p(dim);
    for (int k = 0; k < dim; ++k) {
        p[k] = rng.gaussian();
    }
    return p;
}

} // namespace

TEST_CASE("Reeb field values") {
    const double eps = params2.eps_double();
    const PointC3 r1 = eval_reeb_eps(params2, PointC3{0.0, 1.0, 0.0});
    CHECK(std::abs(r1.w[0]) == 0.0);
    CHECK(std::abs(r1.w[1] - 2.0 * I * (1.0 + eps)) < 1e-15);
    CHECK(std::abs(r1.w[2]) == 0.0);

    const LinkParams params1(1, Rational(1, 1000), 5);
    const PointC3 r2 = eval_reeb_eps(params1, PointC3{1.0, 0.0, 0.0});
    CHECK(std::abs(r2.w[0] - 2.0 * I) < 1e-15);

    const PointC3 r0 = eval_reeb_eps(params2, PointC3{0.0, 0.0, 0.0});
    CHECK(r0.norm_sq() == 0.0);
}

TEST_CASE("Reeb defining equations hold on the link") {
    const PointC3 orbit_point{0.0, I, 0.0};
    const auto checks = check_reeb_defining(params2, orbit_point);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].residual < 1e-12); // alpha_eps(R) = 1 at the orbit point
    for (const auto& c : checks) {
        CHECK(c.pass);
    }

    for (const auto& p : sample_link(params2, 200, 3)) {
        for (const auto& c : check_reeb_defining(params2, p)) {
            CHECK(c.residual < 1e-9);
        }
    }

    CHECK_THROWS_AS(check_reeb_defining(params2, PointC3{2.0, 0.0, 0.0}),
                    precondition_error);
}

TEST_CASE("finite differences agree with the analytic d(alpha_eps)") {
    for (const auto& p : sample_link(params2, 100, 5)) {
        CHECK(check_dalpha_eps_fd(params2, p).residual < 1e-7);
    }
}

TEST_CASE("Liouville identities via the Cartan formula") {
    SeededRng rng(41);
    const VectorField x  = fields::liouville_x_c3();
    const VectorField y  = fields::y_radial_c3();
    const VectorField y0 = fields::y0_c2();
    const TwoForm om1    = forms::omega1(params2);
    const TwoForm omc3   = forms::omega_c3();
    const TwoForm omc2   = forms::omega_c2();

    for (int i = 0; i < 200; ++i) {
        CHECK(check_liouville(x, om1, random_vec(rng, 6)).residual < 1e-7);
        CHECK(check_liouville(y, omc3, random_vec(rng, 6)).residual < 1e-7);
        Eigen::VectorXd p4 = random_vec(rng, 4);
        while (p4.norm() < 0.05) {
            p4 = random_vec(rng, 4);
        }
        CHECK(check_liouville(y0, omc2, p4).residual < 1e-7);
    }

    CHECK_THROWS_AS(check_liouville(y0, omc2, Eigen::VectorXd::Zero(4)), domain_error);
    CHECK_THROWS_AS(check_liouville(x, omc2, Eigen::VectorXd::Zero(6)), domain_error);
}

TEST_CASE("Hamiltonian identity omega_1(-R, .) = dH") {
    SeededRng rng(43);
    for (int i = 0; i < 200; ++i) {
        const PointC3 p = PointC3::from_vec(random_vec(rng, 6));
        CHECK(check_hamiltonian_identity(params2, p).residual < 1e-9);
    }
    CHECK(check_hamiltonian_identity(params2, PointC3{0.0, 0.0, 0.0}).residual == 0.0);

    // The dwbar_1 coefficient of dH at (0,1,0) is (1+eps) w_1. For a real
    // 1-form c_x dx + c_y dy the dwbar coefficient is (c_x + i c_y)/2.
    const Eigen::VectorXd dh = forms::dH(params2, PointC3{0.0, 1.0, 0.0}.to_vec());
    const Complex dwbar1     = (Complex{dh[2], dh[3]}) / 2.0;
    CHECK(std::abs(dwbar1 - (1.0 + params2.eps_double())) < 1e-15);
}

TEST_CASE("contact condition for alpha_0 and alpha_eps") {
    const PointC3 orbit_point{0.0, I, 0.0};
    for (const auto& c : check_contact_condition(params2, orbit_point,
                                                 ContactFormTag::alpha_eps)) {
        CHECK(c.pass);
    }

    for (const auto& p : sample_link(params2, 100, 11)) {
        for (const auto tag : {ContactFormTag::alpha0, ContactFormTag::alpha_eps}) {
            for (const auto& c : check_contact_condition(params2, p, tag)) {
                CHECK(c.pass);
                CHECK(c.residual > 1e-6);
            }
        }
    }

    CHECK_THROWS_AS(
        check_contact_condition(params2, PointC3{2.0, 0.0, 0.0}, ContactFormTag::alpha0),
        precondition_error);
}

TEST_CASE("symplectic Gram-Schmidt lands on the standard antisymmetric blocks") {
    double worst_span = 0.0;
    for (const auto& p : sample_link(params2, 100, 13)) {
        const SymplecticBasisResult r = check_symplectic_basis(params2, p);
        REQUIRE(r.normalization_ok);
        CHECK(r.gram_error < 1e-8);
        CHECK(std::abs(r.gram(0, 1) - 1.0) < 1e-8);  // omega(X1~, Y1~) = 1
        CHECK(std::abs(r.gram(2, 3) - 1.0) < 1e-8);  // omega(X2~, Y2~) = 1
        CHECK(std::abs(r.gram(0, 2)) < 1e-8);        // cross pairings vanish
        CHECK(std::abs(r.gram(0, 3)) < 1e-8);
        worst_span = std::max(worst_span, r.xi_span_residual);
    }
    // The xi-pairing residual is recorded only: the printed span claim does
    // not hold numerically in these coordinates.
    MESSAGE("largest normalized xi-pairing residual: ", worst_span);
    CHECK(worst_span >= 0.0);
}

TEST_CASE("alpha_eps display equals the pullback route") {
    SeededRng rng(47);
    for (const auto& p : sample_link(params2, 100, 17)) {
        CHECK(check_alpha_eps_pullback(params2, p).residual < 1e-10);
        CHECK(check_kernel_equality(params2, p).residual < 1e-9);
    }
    // The display/pullback agreement is a polynomial identity, valid off the
    // link as well.
    for (int i = 0; i < 100; ++i) {
        const PointC3 p = PointC3::from_vec(random_vec(rng, 6));
        CHECK(check_alpha_eps_pullback(params2, p).residual < 1e-10);
    }
}

TEST_CASE("H is constant along the Reeb field and f is an eigenfunction") {
    SeededRng rng(53);
    for (int i = 0; i < 200; ++i) {
        const PointC3 p = PointC3::from_vec(random_vec(rng, 6));
        CHECK(check_dH_along_reeb(params2, p).residual < 1e-9);
        CHECK(check_f_reeb_derivative(params2, p).residual < 1e-9);
    }
}

TEST_CASE("radial-field tangency defect equals (1-n) w1 w2 on the hypersurface") {
    for (int n : {1, 2, 3}) {
        const LinkParams params(n, Rational(1, 1000), 5);
        for (const auto& p : sample_link(params, 50, 19)) {
            const RadialTangency t = radial_y_tangency(n, p);
            CHECK(t.prediction_error < 1e-12);
            if (n == 1) {
                CHECK(t.magnitude < 1e-12);
            }
        }
    }
    // Nonvanishing for n >= 2 at a concrete hypersurface point with
    // w1 w2 != 0.
    const PointC3 q = link_point_from_s3(2, std::sqrt(0.5), std::sqrt(0.5));
    CHECK(radial_y_tangency(2, q).magnitude > 1e-3);
    const PointC3 q3 = link_point_from_s3(3, std::sqrt(0.5), std::sqrt(0.5));
    CHECK(radial_y_tangency(3, q3).magnitude > 1e-3);
}

TEST_CASE("general Brieskorn chart: alpha_1 Reeb identities on Sigma(a)") {
    // Points of Sigma(p, 2, 2) through the unitary change of coordinates.
    for (int a0 : {2, 3, 6}) {
        const std::array<int, 3> a{a0, 2, 2};
        const LinkParams params(a0 - 1, Rational(1, 1000), 5);
        const OneForm alpha1   = forms::alpha1_brieskorn(a);
        const VectorField reeb = fields::reeb_alpha1_brieskorn(a);
        const Mat6 psi         = forms::psi_matrix();
        for (const auto& w : sample_link(params, 50, 23)) {
            const PointC3 z          = psi_coordinate_change(w);
            const Eigen::VectorXd zv = z.to_vec();
            CHECK(std::abs(eval_f_brieskorn(params.n, z)) < 1e-12);
            CHECK(std::abs(alpha1(zv, reeb.at(zv)) - 1.0) < 1e-12);

            // d(alpha_1)(R, v) vanishes on T_z Sigma; the frame transports
            // through the unitary Psi.
            const TangentFrame frame  = tangent_frame(params, w);
            const Eigen::MatrixXd dal = alpha1.d_coeff(zv);
            for (const auto& v : frame.vectors) {
                const Eigen::VectorXd zt = psi * v;
                CHECK(std::abs(reeb.at(zv).dot(dal * zt)) < 1e-9);
            }
        }
    }
}

TEST_CASE("the interpolating forms alpha_t stay contact on Sigma(a)") {
    const std::array<int, 3> a{3, 2, 2};
    const LinkParams params(2, Rational(1, 1000), 5);
    const Mat6 psi = forms::psi_matrix();
    for (const double t : {0.0, 0.5, 1.0}) {
        const OneForm alpha = forms::alpha_t_brieskorn(a, t);
        for (const auto& w : sample_link(params, 50, 29)) {
            const PointC3 z          = psi_coordinate_change(w);
            const Eigen::VectorXd zv = z.to_vec();
            const TangentFrame frame = tangent_frame(params, w);
            std::array<Eigen::VectorXd, 3> zf;
            for (int k = 0; k < 3; ++k) {
                zf[k] = psi * frame.vectors[k];
            }
            const Eigen::MatrixXd d = alpha.d_coeff(zv);
            const auto dp = [&](int i, int j) { return zf[i].dot(d * zf[j]); };
            const double volume = alpha(zv, zf[0]) * dp(1, 2) - alpha(zv, zf[1]) * dp(0, 2) +
                                  alpha(zv, zf[2]) * dp(0, 1);
            CHECK(std::abs(volume) > 1e-6);
        }
    }
}
