#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>

namespace reebcz {

// Deterministic random stream. mt19937_64 is fully specified by the
// standard; the uniform/gaussian transforms below are spelled out by hand
// so that a given seed produces identical samples on every platform
// (std::normal_distribution is implementation-defined).
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        const double u2 = uniform();
        const double r  = std::sqrt(-2.0 * std::log(u1));
        const double a  = 6.283185307179586476925286766559 * u2;
        spare_          = r * std::sin(a);
        have_spare_     = true;
        return r * std::cos(a);
    }

    std::complex<double> gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    // Uniform point on the unit sphere S^3 in C^2.
    std::pair<std::complex<double>, std::complex<double>> unit_s3() {
        std::complex<double> u = gaussian_complex();
        std::complex<double> v = gaussian_complex();
        double norm = std::sqrt(std::norm(u) + std::norm(v));
        while (norm < 1e-6) {
            u    = gaussian_complex();
            v    = gaussian_complex();
            norm = std::sqrt(std::norm(u) + std::norm(v));
        }
        return {u / norm, v / norm};
    }

    std::uint64_t next_raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_    = 0.0;
};

// Number of worker threads: hardware concurrency capped by the
// REEBCZ_THREADS environment variable (a value of 1 disables threading).
int thread_budget();

// Runs fn(i) for i in [0, count). Work is split into contiguous chunks so
// results written by index are deterministic regardless of thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace reebcz
