#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "reebcz/errors.hpp"

namespace reebcz {

// Exact arithmetic substrate. All index computations run on these types;
// doubles only ever appear in the numerical cross-checks.
//
// cpp_rational keeps the canonical form we rely on: lowest terms,
// denominator > 0.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer rational_num(const Rational& r);
Integer rational_den(const Rational& r);

// Exact floor of a rational.
Integer floor_rational(const Rational& r);

// Exact ceiling of a rational.
Integer ceil_rational(const Rational& r);

// floor(a / b) computed exactly. Requires b > 0.
Integer floor_div(const Rational& a, const Rational& b);

bool is_integer(const Rational& r);
bool is_even_integer(const Rational& r);

// Canonical "p/q" string (q >= 1, reduced).
std::string format_rational(const Rational& r);

// Accepts "p/q" or a bare integer "p". Throws domain_error on garbage
// or zero denominator.
Rational parse_rational(const std::string& text);

// Converts to long long, throwing internal_error on overflow. Index
// values in this project are tiny, so overflow means a logic bug.
long long to_long_checked(const Integer& v);

// An angle stored exactly as coeff * pi radians. This is the currency of
// every index computation: branch decisions ("is this an integer multiple
// of 2*pi?") are exact rational tests, never float comparisons.
struct Angle {
    Rational coeff; // angle = coeff * pi

    Angle() = default;
    explicit Angle(Rational c) : coeff(std::move(c)) {}

    static Angle pi_multiple(const Rational& c) { return Angle(c); }

    double radians() const;

    Angle operator+(const Angle& o) const { return Angle(coeff + o.coeff); }
    Angle operator-(const Angle& o) const { return Angle(coeff - o.coeff); }
    Angle scaled(const Rational& s) const { return Angle(coeff * s); }

    bool operator==(const Angle& o) const { return coeff == o.coeff; }
};

// True iff the angle is an integer multiple of 2*pi, i.e. e^{i*angle} = 1.
// This is the exact resonance test: a rotation block ending here has
// eigenvalue 1.
bool is_resonant(const Angle& angle);

} // namespace reebcz
