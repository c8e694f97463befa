#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wavemaps {

/// Arbitrary-precision exact rational scalar. Always stored in lowest terms
/// with positive denominator (GMP canonical form); the only scalar type
/// allowed on certification paths.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(int num) : v_(static_cast<long>(num)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_), tag{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

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

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned e) const {
        Rational base = *this, out = Rational(1);
        while (e) {
            if (e & 1u) out *= base;
            base *= base;
            e >>= 1u;
        }
        return out;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }

    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

private:
    struct tag {};
    Rational(mpq_class q, tag) : v_(std::move(q)) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace wavemaps
