#include "jacklaurent/ratk.hpp"

namespace jl {

RatK::RatK(const BigRat& c) : num_(c), den_(BigRat(1)) { normalize(); }
RatK::RatK(const UniPoly& num) : num_(num), den_(BigRat(1)) { normalize(); }
RatK::RatK(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("zero denominator");
    normalize();
}

void RatK::normalize() {
    if (den_.is_zero()) throw Error("zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly(BigRat(1));
        return;
    }
    UniPoly g = uni_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    BigRat cn = num_.rational_content(), cd = den_.rational_content();
    BigRat ratio = cn / cd;  // positive
    num_ = num_.scaled(cn.inv()).scaled(ratio.numerator());
    den_ = den_.scaled(cd.inv()).scaled(ratio.denominator());
    if (den_.leading().sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatK RatK::operator-() const {
    RatK r(*this);
    r.num_ = -r.num_;
    return r;
}

RatK RatK::inv() const {
    if (is_zero()) throw Error("zero denominator");
    return RatK(den_, num_);
}

RatK operator+(const RatK& a, const RatK& b) {
    return RatK(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatK operator-(const RatK& a, const RatK& b) {
    return RatK(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatK operator*(const RatK& a, const RatK& b) { return RatK(a.num_ * b.num_, a.den_ * b.den_); }
RatK operator/(const RatK& a, const RatK& b) {
    if (b.is_zero()) throw Error("zero denominator");
    return RatK(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator<(const RatK& a, const RatK& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

BigRat RatK::eval(const BigRat& x) const {
    BigRat d = den_.eval(x);
    if (d.is_zero()) throw Error("evaluation at pole");
    return num_.eval(x) / d;
}

}  // namespace jl
