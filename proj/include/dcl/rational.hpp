#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcl {

using Int = boost::multiprecision::mpz_int;

// Exact rational scalar, always canonical: gcd(|num|, den) = 1, den > 0,
// zero stored as 0/1.  Equality is structural on that form.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}
    Rational(const Int& v) : q_(v) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        q_ = Q(num) / Q(den);
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    // Accepts "p", "-p", "p/q" (sign allowed on either part).
    static Rational parse(std::string_view text);

    Int numerator() const { return Int(boost::multiprecision::numerator(q_)); }
    Int denominator() const { return Int(boost::multiprecision::denominator(q_)); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_negative() const { return q_ < 0; }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.q_ == 0)
            throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    // "p/q" with q > 0, or just "p" when q = 1.
    std::string str() const { return q_.str(); }

private:
    using Q = boost::multiprecision::mpq_rational;
    Q q_;
};

Rational rat_pow(const Rational& base, int exponent);

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace dcl
