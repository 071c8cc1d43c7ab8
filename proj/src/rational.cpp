#include "reebcz/rational.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace reebcz {

Integer rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer floor_rational(const Rational& r) {
    Integer num = rational_num(r);
    Integer den = rational_den(r); // > 0 by canonical form
    Integer q   = num / den;       // truncates toward zero
    if (num < 0 && q * den != num) {
        --q;
    }
    return q;
}

Integer ceil_rational(const Rational& r) {
    return -floor_rational(-r);
}

Integer floor_div(const Rational& a, const Rational& b) {
    if (b <= 0) {
        throw domain_error("floor_div: divisor must be positive, got " + format_rational(b));
    }
    return floor_rational(a / b);
}

bool is_integer(const Rational& r) {
    return rational_den(r) == 1;
}

bool is_even_integer(const Rational& r) {
    return is_integer(r) && rational_num(r) % 2 == 0;
}

std::string format_rational(const Rational& r) {
    return rational_num(r).str() + "/" + rational_den(r).str();
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw domain_error("parse_rational: zero denominator in \"" + text + "\"");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw domain_error("parse_rational: cannot parse \"" + text + "\"");
    }
}

long long to_long_checked(const Integer& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
        throw internal_error("integer does not fit in long long: " + v.str());
    }
    return static_cast<long long>(v);
}

double Angle::radians() const {
    return static_cast<double>(coeff) * std::numbers::pi;
}

bool is_resonant(const Angle& angle) {
    return is_even_integer(angle.coeff);
}

} // namespace reebcz
