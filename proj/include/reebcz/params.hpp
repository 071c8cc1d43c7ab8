#pragma once

#include "reebcz/rational.hpp"

namespace reebcz {

enum class OrbitFamily { plus, minus };

const char* family_name(OrbitFamily f);

// Problem instance for the A_n link: the Brieskorn exponents are fixed at
// (n+1, 2, 2). eps is an exact rational perturbation parameter; the
// constructor certifies that no orbit with iterate N <= n_max is resonant
// at this eps (so every index computed downstream is well defined).
struct LinkParams {
    int n = 2;
    Rational eps{1, 1000};
    long long n_max = 100;

    LinkParams(int n_, Rational eps_, long long n_max_);

    double eps_double() const { return static_cast<double>(eps); }
};

} // namespace reebcz
