#pragma once

#include <vector>

#include "jacklaurent/bigrat.hpp"

namespace jl {

/// Dense univariate polynomial over BigRat. Coefficient i belongs to x^i;
/// trailing zeros are trimmed, the zero polynomial has empty storage.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const BigRat& c) { if (!c.is_zero()) c_.push_back(c); }
    UniPoly(long c) : UniPoly(BigRat(c)) {}
    explicit UniPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly x() { return UniPoly(std::vector<BigRat>{BigRat(0), BigRat(1)}); }
    static UniPoly monomial(int deg, const BigRat& c);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const BigRat& leading() const;
    BigRat coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigRat(0);
    }
    const std::vector<BigRat>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly scaled(const BigRat& c) const;
    UniPoly pow(unsigned e) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
    friend bool operator<(const UniPoly& a, const UniPoly& b);  // for map keys

    /// Quotient and remainder over Q (den must be nonzero).
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    /// Exact division; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& b) const;

    BigRat eval(const BigRat& x) const;

    /// Positive rational c such that (*this)/c has integer coefficients with
    /// gcd 1. Content of zero is 1.
    BigRat rational_content() const;
    /// this / rational_content(): integer-primitive, leading sign preserved.
    UniPoly primitive_part() const;

private:
    void trim();
    std::vector<BigRat> c_;
};

/// Normalized gcd over Q[x]: integer-primitive with positive leading
/// coefficient; gcd(0,0) = 0.
UniPoly uni_gcd(UniPoly a, UniPoly b);

/// Sound one-sided coprimality certificate: true guarantees gcd(a, b) is a
/// constant (a nonzero modular specialization of the resultant); false is
/// inconclusive and the caller must fall back to the exact routine.
bool uni_coprime_cert(const UniPoly& a, const UniPoly& b);

}  // namespace jl
