#include "jacklaurent/ratkp.hpp"

namespace jl {

SpecialPoint::SpecialPoint(int n_, int m_) : n(n_), m(m_) {
    if (n < 1 || m < 1) throw Error("special point requires n >= 1 and m >= 1");
}

PolyKP SpecialPoint::phi() const {
    PolyKP p = PolyKP::monomial({1, 1}, BigRat(1));  // k*p0
    p += PolyKP::monomial({1, 0}, BigRat(-n));
    p += PolyKP(BigRat(-m));
    return p;
}

PolyKP SpecialPoint::h() const { return -phi(); }

RatK SpecialPoint::p0_star() const {
    // (k*n + m)/k
    UniPoly num(std::vector<BigRat>{BigRat(m), BigRat(n)});
    return RatK(num, UniPoly::x());
}

RatKP::RatKP(PolyKP num, PolyKP den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("zero denominator");
    normalize();
}

void RatKP::normalize() {
    if (den_.is_zero()) throw Error("zero denominator");
    if (num_.is_zero()) {
        den_ = PolyKP(1);
        return;
    }
    PolyKP g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    BigRat cn = num_.rational_content(), cd = den_.rational_content();
    BigRat ratio = cn / cd;
    num_ = num_.scaled(cn.inv()).scaled(ratio.numerator());
    den_ = den_.scaled(cd.inv()).scaled(ratio.denominator());
    if (den_.leading_coeff().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatKP RatKP::operator-() const {
    RatKP r(*this);
    r.num_ = -r.num_;
    return r;
}

RatKP RatKP::inv() const {
    if (is_zero()) throw Error("zero denominator");
    return RatKP(den_, num_);
}

namespace {

// divide out a common factor ahead of multiplication to keep the final
// normalization gcd on (nearly) coprime products
void cross_cancel(PolyKP& num, PolyKP& den) {
    PolyKP g = poly_gcd(num, den);
    if (!g.is_one() && !g.is_zero()) {
        num = num.divexact(g);
        den = den.divexact(g);
    }
}

}  // namespace

RatKP operator+(const RatKP& a, const RatKP& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    PolyKP g = poly_gcd(a.den_, b.den_);
    if (g.is_one()) return RatKP(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    PolyKP da = a.den_.divexact(g), db = b.den_.divexact(g);
    return RatKP(a.num_ * db + b.num_ * da, a.den_ * db);
}
RatKP operator-(const RatKP& a, const RatKP& b) {
    if (b.is_zero()) return a;
    return a + (-b);
}
RatKP operator*(const RatKP& a, const RatKP& b) {
    if (a.is_zero() || b.is_zero()) return RatKP();
    PolyKP an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    cross_cancel(an, bd);
    cross_cancel(bn, ad);
    return RatKP(an * bn, ad * bd);
}
RatKP operator/(const RatKP& a, const RatKP& b) {
    if (b.is_zero()) throw Error("zero denominator");
    if (a.is_zero()) return RatKP();
    PolyKP an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
    cross_cancel(an, bn);
    cross_cancel(bd, ad);
    return RatKP(an * bd, ad * bn);
}

RatKP RatKP::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    RatKP r(1), base(*this);
    unsigned u = static_cast<unsigned>(e);
    while (u) {
        if (u & 1) r *= base;
        base *= base;
        u >>= 1;
    }
    return r;
}

bool operator<(const RatKP& a, const RatKP& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

namespace {

// Multiplicity of phi in p, with the phi-free quotient left in p.
int strip_phi(PolyKP& p, const PolyKP& phi) {
    int mult = 0;
    for (;;) {
        auto q = p.try_divide(phi);
        if (!q) return mult;
        p = std::move(*q);
        ++mult;
    }
}

// Exact value of a polynomial at p0 = (k*n + m)/k, as an element of Q(k).
RatK eval_poly_at_star(const PolyKP& p, const SpecialPoint& pt) {
    if (p.is_zero()) return RatK(0);
    UniPoly knm(std::vector<BigRat>{BigRat(pt.m), BigRat(pt.n)});  // k*n + m
    auto cs = p.p0_coeffs();
    int d = static_cast<int>(cs.size()) - 1;
    UniPoly acc;
    for (int i = 0; i <= d; ++i) {
        // coefficient of p0^i times (kn+m)^i * k^(d-i)
        if (cs[i].is_zero()) continue;
        acc += cs[i] * knm.pow(i) * UniPoly::monomial(d - i, BigRat(1));
    }
    return RatK(acc, UniPoly::monomial(d, BigRat(1)));
}

}  // namespace

int valuation(const RatKP& f, const SpecialPoint& pt) {
    if (f.is_zero()) throw Error("valuation of zero undefined");
    PolyKP phi = pt.phi();
    PolyKP n = f.num(), d = f.den();
    return strip_phi(n, phi) - strip_phi(d, phi);
}

RatK EvalContext::p0_star(const SpecialPoint& pt) const {
    if (!k_probe) return pt.p0_star();
    return RatK(BigRat(pt.n) + BigRat(pt.m) / *k_probe);
}

int valuation(const RatKP& f, const SpecialPoint& pt, const EvalContext& ctx) {
    if (ctx.exact()) return valuation(f, pt);
    if (f.is_zero()) throw Error("valuation of zero undefined");
    PolyKP phi = ctx.phi(pt);
    PolyKP n = f.num(), d = f.den();
    return strip_phi(n, phi) - strip_phi(d, phi);
}

RatK leading_coeff_at(const RatKP& f, const SpecialPoint& pt) {
    if (f.is_zero()) throw Error("leading coefficient of zero undefined");
    PolyKP phi = pt.phi();
    PolyKP n = f.num(), d = f.den();
    int v = strip_phi(n, phi) - strip_phi(d, phi);
    RatK g = eval_poly_at_star(n, pt) / eval_poly_at_star(d, pt);
    return (v % 2 == 0) ? g : -g;
}

RatK eval_p0(const RatKP& f, const RatK& v) {
    auto horner = [&v](const PolyKP& p) {
        RatK acc(0);
        auto cs = p.p0_coeffs();
        for (std::size_t i = cs.size(); i-- > 0;) {
            acc = acc * v + RatK(cs[i]);
        }
        return acc;
    };
    RatK d = horner(f.den());
    if (d.is_zero()) throw Error("evaluation at pole");
    return horner(f.num()) / d;
}

RatKP substitute_k(const RatKP& f, const BigRat& q) {
    PolyKP d = f.den().substitute_k(q);
    if (d.is_zero()) throw Error("probe substitution hit a denominator zero");
    return RatKP(f.num().substitute_k(q), d);
}

}  // namespace jl
