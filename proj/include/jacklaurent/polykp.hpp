#pragma once

#include <map>
#include <optional>
#include <vector>

#include "jacklaurent/unipoly.hpp"

namespace jl {

/// Exponent pair of a monomial k^k_deg * p0^p_deg.
struct Mono {
    int k = 0;
    int p = 0;
    friend bool operator==(const Mono&, const Mono&) = default;
};

/// Graded lexicographic order with p0 > k (ascending; leading term is the map's last).
struct MonoLess {
    bool operator()(const Mono& a, const Mono& b) const {
        int ta = a.k + a.p, tb = b.k + b.p;
        if (ta != tb) return ta < tb;
        return a.p < b.p;
    }
};

/// Sparse bivariate polynomial in k and p0 over BigRat; zero coefficients absent.
class PolyKP {
public:
    using Terms = std::map<Mono, BigRat, MonoLess>;

    PolyKP() = default;
    PolyKP(long c) : PolyKP(BigRat(c)) {}
    PolyKP(const BigRat& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

    static PolyKP var_k() { return monomial({1, 0}, BigRat(1)); }
    static PolyKP var_p0() { return monomial({0, 1}, BigRat(1)); }
    static PolyKP monomial(Mono m, const BigRat& c);
    static PolyKP from_unipoly_in_k(const UniPoly& u);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    int deg_p0() const;
    int deg_k() const;
    int total_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.k + terms_.rbegin()->first.p; }
    Mono leading_mono() const;
    const BigRat& leading_coeff() const;
    BigRat coeff(Mono m) const;
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    PolyKP operator-() const;
    PolyKP& operator+=(const PolyKP& o);
    PolyKP& operator-=(const PolyKP& o);
    friend PolyKP operator+(PolyKP a, const PolyKP& b) { return a += b; }
    friend PolyKP operator-(PolyKP a, const PolyKP& b) { return a -= b; }
    friend PolyKP operator*(const PolyKP& a, const PolyKP& b);
    PolyKP& operator*=(const PolyKP& o) { return *this = *this * o; }
    PolyKP scaled(const BigRat& c) const;
    PolyKP pow(unsigned e) const;

    friend bool operator==(const PolyKP& a, const PolyKP& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyKP& a, const PolyKP& b) { return !(a == b); }
    friend bool operator<(const PolyKP& a, const PolyKP& b);  // arbitrary total order for maps

    /// Exact multivariate division; nullopt if b does not divide *this.
    std::optional<PolyKP> try_divide(const PolyKP& b) const;
    /// Exact division; throws on failure.
    PolyKP divexact(const PolyKP& b) const;

    /// Coefficients as polynomials in k, indexed by p0-degree (size deg_p0()+1; empty for 0).
    std::vector<UniPoly> p0_coeffs() const;
    static PolyKP from_p0_coeffs(const std::vector<UniPoly>& cs);

    /// Positive rational c with (*this)/c integer-primitive (content of zero is 1).
    BigRat rational_content() const;
    /// Substitute k -> q, leaving a polynomial in p0 only.
    PolyKP substitute_k(const BigRat& q) const;

private:
    Terms terms_;
};

/// Normalized gcd over Q[k,p0] via primitive PRS in p0 over Q[k]:
/// integer-primitive, positive leading coefficient in graded lex; gcd(0,0) = 0.
PolyKP poly_gcd(const PolyKP& a, const PolyKP& b);

}  // namespace jl
