#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace reebcz {

using Complex = std::complex<double>;
using Vec6    = Eigen::Matrix<double, 6, 1>;
using Mat6    = Eigen::Matrix<double, 6, 6>;

// A point of C^3 identified with R^6. The real layout interleaves
// (x0, y0, x1, y1, x2, y2) with w_j = x_j + i y_j.
struct PointC3 {
    std::array<Complex, 3> w{};

    PointC3() = default;
    PointC3(Complex w0, Complex w1, Complex w2) : w{w0, w1, w2} {}

    static PointC3 from_vec(const Vec6& v) {
        return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
    }

    Vec6 to_vec() const {
        Vec6 v;
        v << w[0].real(), w[0].imag(), w[1].real(), w[1].imag(), w[2].real(), w[2].imag();
        return v;
    }

    double norm_sq() const {
        return std::norm(w[0]) + std::norm(w[1]) + std::norm(w[2]);
    }
};

inline PointC3 operator*(double s, const PointC3& p) {
    return {s * p.w[0], s * p.w[1], s * p.w[2]};
}

} // namespace reebcz
