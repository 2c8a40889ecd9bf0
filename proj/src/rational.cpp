#include "nilbu/rational.hpp"

namespace nilbu {

using namespace arith;

Rational::Rational(Int numerator, Int denominator) {
    if (denominator == 0)
        throw Error("rational with zero denominator");
    if (denominator < 0) {
        numerator = neg(numerator);
        denominator = neg(denominator);
    }
    const Int g = gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational Rational::operator-() const { return {neg(num_), den_}; }

Rational operator+(const Rational& x, const Rational& y) {
    const Int g = gcd(x.den_, y.den_);
    const Int l = mul(x.den_ / g, y.den_);
    return {add(mul(x.num_, l / x.den_), mul(y.num_, l / y.den_)), l};
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
    // cross-cancel before multiplying to keep intermediates small
    const Int g1 = gcd(x.num_, y.den_);
    const Int g2 = gcd(y.num_, x.den_);
    return {mul(x.num_ / g1, y.num_ / g2), mul(x.den_ / g2, y.den_ / g1)};
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0)
        throw Error("division by zero rational");
    return x * Rational(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return mul(x.num_, y.den_) <=> mul(y.num_, x.den_);
}

std::string Rational::to_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

} // namespace nilbu
