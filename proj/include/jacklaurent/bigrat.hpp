#pragma once

#include <gmpxx.h>

#include <string>

#include "jacklaurent/error.hpp"

namespace jl {

/// Arbitrary-precision rational, always canonical: gcd(|num|, den) = 1, den > 0.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}
    BigRat(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("zero denominator");
        v_.canonicalize();
    }
    explicit BigRat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit BigRat(const std::string& s) : v_(s) {
        if (v_.get_den() == 0) throw Error("zero denominator");
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw Error("zero denominator");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }

    BigRat abs() const { return BigRat(mpq_class(::abs(v_))); }
    BigRat inv() const {
        if (is_zero()) throw Error("zero denominator");
        return BigRat(mpq_class(1) / v_);
    }
    BigRat pow(unsigned e) const;

    BigRat numerator() const { return BigRat(mpq_class(v_.get_num())); }
    BigRat denominator() const { return BigRat(mpq_class(v_.get_den())); }

    const mpq_class& raw() const { return v_; }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// gcd of two integer BigRats (nonnegative result); inputs must be integers.
BigRat int_gcd(const BigRat& a, const BigRat& b);
/// lcm of two positive integer BigRats.
BigRat int_lcm(const BigRat& a, const BigRat& b);

}  // namespace jl
