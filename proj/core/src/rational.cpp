#include "cohocalc/rational.hpp"

#include "cohocalc/errors.hpp"

#include <ostream>

namespace cohocalc {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero())
        throw Error("rational with zero denominator");
    // Normalizes sign and gcd regardless of the input form.
    v_ = boost::multiprecision::cpp_rational(num) / boost::multiprecision::cpp_rational(den);
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(long long n) const {
    if (n < 0) {
        if (is_zero())
            throw Error("zero to a negative power");
        return (Rational(1) / *this).pow(-n);
    }
    Rational result(1);
    Rational base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer())
        s += "/" + denominator().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

} // namespace cohocalc
