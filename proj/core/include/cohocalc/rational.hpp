#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace cohocalc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Values are kept in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. No floating point is used anywhere.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// x^n for n >= 0; negative n inverts (x must be nonzero).
    Rational pow(long long n) const;

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    /// "p/q" in lowest terms, plain "p" when q = 1.
    std::string str() const;

private:
    boost::multiprecision::cpp_rational v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace cohocalc
