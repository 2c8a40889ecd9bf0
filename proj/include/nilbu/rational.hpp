#pragma once

#include "nilbu/arith.hpp"

#include <compare>
#include <ostream>
#include <string>

namespace nilbu {

/// Exact rational with a positive, reduced denominator.
class Rational {
public:
    using Int = arith::Int;

    constexpr Rational() = default;
    Rational(Int numerator, Int denominator = 1);

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x, const Rational& y);
    friend Rational operator*(const Rational& x, const Rational& y);
    friend Rational operator/(const Rational& x, const Rational& y);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

    std::string to_string() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace nilbu
