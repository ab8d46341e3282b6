#pragma once

#include <optional>

#include "jacklaurent/polykp.hpp"
#include "jacklaurent/ratk.hpp"

namespace jl {

/// The special parameter value p0* = n + m/k. The irreducible factor of the
/// locus is phi = k*p0 - k*n - m and the local parameter is h = m + k*n - k*p0 = -phi.
struct SpecialPoint {
    int n = 1;
    int m = 1;
    SpecialPoint() = default;
    SpecialPoint(int n_, int m_);

    PolyKP phi() const;  // k*p0 - k*n - m
    PolyKP h() const;    // m + k*n - k*p0
    RatK p0_star() const;  // n + m/k as an element of Q(k)

    friend bool operator==(const SpecialPoint&, const SpecialPoint&) = default;
};

/// Rational function in k and p0, canonical: num/den coprime integer
/// polynomials with joint content 1 and positive leading den coefficient
/// (graded lex, p0 > k). Equality is identity of normal forms.
class RatKP {
public:
    RatKP() : num_(), den_(1) {}
    RatKP(long c) : RatKP(PolyKP(c)) {}
    RatKP(const BigRat& c) : RatKP(PolyKP(c)) {}
    RatKP(const PolyKP& num) : num_(num), den_(1) { normalize(); }
    RatKP(PolyKP num, PolyKP den);

    static RatKP k() { return RatKP(PolyKP::var_k()); }
    static RatKP p0() { return RatKP(PolyKP::var_p0()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const PolyKP& num() const { return num_; }
    const PolyKP& den() const { return den_; }

    RatKP operator-() const;
    RatKP inv() const;
    friend RatKP operator+(const RatKP& a, const RatKP& b);
    friend RatKP operator-(const RatKP& a, const RatKP& b);
    friend RatKP operator*(const RatKP& a, const RatKP& b);
    friend RatKP operator/(const RatKP& a, const RatKP& b);
    RatKP& operator+=(const RatKP& o) { return *this = *this + o; }
    RatKP& operator-=(const RatKP& o) { return *this = *this - o; }
    RatKP& operator*=(const RatKP& o) { return *this = *this * o; }
    RatKP& operator/=(const RatKP& o) { return *this = *this / o; }
    RatKP pow(int e) const;

    friend bool operator==(const RatKP& a, const RatKP& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatKP& a, const RatKP& b) { return !(a == b); }
    friend bool operator<(const RatKP& a, const RatKP& b);

private:
    void normalize();
    PolyKP num_, den_;
};

/// Order of zero (positive) or pole (negative) at p0 = n + m/k, i.e. the
/// multiplicity of phi in num minus its multiplicity in den. Throws on zero.
int valuation(const RatKP& f, const SpecialPoint& pt);

/// lim_{h->0} h^{-v} f with v = valuation(f, pt): writing f = phi^v * g with g
/// regular nonzero at the point, returns (-1)^v * g(p0*). Throws on zero.
RatK leading_coeff_at(const RatKP& f, const SpecialPoint& pt);

/// Exact substitution p0 -> v; throws "evaluation at pole" if den vanishes.
RatK eval_p0(const RatKP& f, const RatK& v);

/// Substitute k -> q (probe mode); throws if the denominator collapses to zero.
RatKP substitute_k(const RatKP& f, const BigRat& q);

/// Probe-mode context: when k_probe is set, leaf coefficient constructors
/// specialize k immediately. Exact mode is authoritative; probe is advisory.
struct EvalContext {
    std::optional<BigRat> k_probe;
    RatKP norm(const RatKP& f) const { return k_probe ? substitute_k(f, *k_probe) : f; }
    bool exact() const { return !k_probe.has_value(); }
    /// The locus factor and local parameter in force (specialized under probe).
    PolyKP phi(const SpecialPoint& pt) const {
        return k_probe ? pt.phi().substitute_k(*k_probe) : pt.phi();
    }
    PolyKP h(const SpecialPoint& pt) const {
        return k_probe ? pt.h().substitute_k(*k_probe) : pt.h();
    }
    RatK p0_star(const SpecialPoint& pt) const;
};

/// Context-aware orders: multiplicity of the (possibly specialized) phi.
int valuation(const RatKP& f, const SpecialPoint& pt, const EvalContext& ctx);

}  // namespace jl
