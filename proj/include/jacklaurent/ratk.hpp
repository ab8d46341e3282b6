#pragma once

#include "jacklaurent/unipoly.hpp"

namespace jl {

/// Rational function of k over Q, canonical: num/den coprime integer
/// polynomials with joint content 1 and positive leading den coefficient.
class RatK {
public:
    RatK() : num_(), den_(BigRat(1)) {}
    RatK(long c) : RatK(BigRat(c)) {}
    RatK(const BigRat& c);
    RatK(const UniPoly& num);
    RatK(UniPoly num, UniPoly den);

    static RatK k() { return RatK(UniPoly::x()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    RatK operator-() const;
    RatK inv() const;
    friend RatK operator+(const RatK& a, const RatK& b);
    friend RatK operator-(const RatK& a, const RatK& b);
    friend RatK operator*(const RatK& a, const RatK& b);
    friend RatK operator/(const RatK& a, const RatK& b);
    RatK& operator+=(const RatK& o) { return *this = *this + o; }
    RatK& operator-=(const RatK& o) { return *this = *this - o; }
    RatK& operator*=(const RatK& o) { return *this = *this * o; }
    RatK& operator/=(const RatK& o) { return *this = *this / o; }

    friend bool operator==(const RatK& a, const RatK& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatK& a, const RatK& b) { return !(a == b); }
    friend bool operator<(const RatK& a, const RatK& b);

    BigRat eval(const BigRat& x) const;  // throws on pole

private:
    void normalize();
    UniPoly num_, den_;
};

}  // namespace jl
