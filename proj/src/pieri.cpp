#include "jacklaurent/pieri.hpp"

#include <algorithm>

namespace jl {

namespace {

PolyKP kvar() { return PolyKP::var_k(); }
PolyKP kp0() { return PolyKP::monomial({1, 1}, BigRat(1)); }

PolyKP product_of(const std::vector<PolyKP>& fs) {
    PolyKP r(1);
    for (const auto& f : fs) r *= f;
    return r;
}

RatKP ratio_checked(const std::vector<PolyKP>& num, const std::vector<PolyKP>& den) {
    for (const auto& f : den)
        if (f.is_zero()) throw CheckError("degenerate coefficient");
    return RatKP(product_of(num), product_of(den));
}

}  // namespace

PolyKP c_lambda(const Partition& p, int j, int r, const PolyKP& a) {
    Partition conj = p.conjugate();
    PolyKP v(BigRat(p.part(r) - j));
    v += PolyKP::monomial({1, 0}, BigRat(-(conj.part(j) - r)));
    v += a;
    return v;
}

PolyKP c_alpha(const Bipartition& alpha, int j, int r, const PolyKP& a) {
    Partition muc = alpha.mu.conjugate();
    PolyKP v(BigRat(alpha.lambda.part(r) + j));
    v += PolyKP::monomial({1, 0}, BigRat(muc.part(j) + r));
    v += a;
    return v;
}

UFactorization u_factors(Box x, const Bipartition& alpha) {
    const int i = x.i, j = x.j;
    const Partition& lam = alpha.lambda;
    const Partition& mu = alpha.mu;
    const int llam = lam.length(), lmu = mu.length();
    const int mucj = mu.conjugate().part(j);
    UFactorization F;

    for (int r = i + 1; r <= lmu; ++r) {
        F.u1_num.push_back(c_lambda(mu, j, r, PolyKP(1) + kvar()));
        F.u1_num.push_back(c_lambda(mu, j, r, -kvar()));
        F.u1_den.push_back(c_lambda(mu, j, r, PolyKP(1)));
        F.u1_den.push_back(c_lambda(mu, j, r, PolyKP()));
    }

    // shifts: -1-k(p0+2) = -1-2k-kp0,  -kp0,  -1-k(p0+1) = -1-k-kp0,  -k(p0+1) = -k-kp0
    PolyKP s_num1 = PolyKP(-1) - kvar().scaled(BigRat(2)) - kp0();
    PolyKP s_num2 = -kp0();
    PolyKP s_den1 = PolyKP(-1) - kvar() - kp0();
    PolyKP s_den2 = -kvar() - kp0();
    for (int r = 1; r <= llam; ++r) {
        F.u2_num.push_back(c_alpha(alpha, j, r, s_num1));
        F.u2_num.push_back(c_alpha(alpha, j, r, s_num2));
        F.u2_den.push_back(c_alpha(alpha, j, r, s_den1));
        F.u2_den.push_back(c_alpha(alpha, j, r, s_den2));
    }

    // U3 = (j-1+k(l(lam)+mu'_j-p0-1)) (j+k(mu'_j-l(mu)))
    //    / (j+k(l(lam)+mu'_j-p0)) (j-1+k(mu'_j-l(mu)-1))
    PolyKP n1 = PolyKP(j - 1) + kvar().scaled(BigRat(llam + mucj - 1)) - kp0();
    PolyKP n2 = PolyKP(j) + kvar().scaled(BigRat(mucj - lmu));
    PolyKP d1 = PolyKP(j) + kvar().scaled(BigRat(llam + mucj)) - kp0();
    PolyKP d2 = PolyKP(j - 1) + kvar().scaled(BigRat(mucj - lmu - 1));
    F.u3_num = {n1, n2};
    F.u3_den = {d1, d2};
    return F;
}

PolyKP UFactorization::num_product() const {
    return product_of(u1_num) * product_of(u2_num) * product_of(u3_num);
}

PolyKP UFactorization::den_product() const {
    return product_of(u1_den) * product_of(u2_den) * product_of(u3_den);
}

CoeffFactors U_coeff(Box x, const Bipartition& alpha) {
    UFactorization F = u_factors(x, alpha);
    CoeffFactors c;
    c.u1 = ratio_checked(F.u1_num, F.u1_den);
    c.u2 = ratio_checked(F.u2_num, F.u2_den);
    c.u3 = ratio_checked(F.u3_num, F.u3_den);
    c.product = c.u1 * c.u2 * c.u3;
    return c;
}

RatKP V_coeff(Box x, const Bipartition& alpha) {
    const int i = x.i, j = x.j;
    const Partition& lam = alpha.lambda;
    if (lam.part(i) != j - 1 || (i > 1 && lam.part(i - 1) < j))
        throw Error("V_coeff: box is not addable to lambda");
    // product over the column-j boxes above x; shifts 1, -2k / 1-k, -k
    PolyKP one(1), k = kvar();
    std::vector<PolyKP> num, den;
    for (int r = 1; r <= i - 1; ++r) {
        num.push_back(c_lambda(lam, j, r, one));
        num.push_back(c_lambda(lam, j, r, -k.scaled(BigRat(2))));
        den.push_back(c_lambda(lam, j, r, one - k));
        den.push_back(c_lambda(lam, j, r, -k));
    }
    return ratio_checked(num, den);
}

std::vector<Bipartition> S_lower(Box x, const Bipartition& alpha, const Rectangle& rect) {
    if (!rect.contains(x)) throw Error("box outside the rectangle");
    std::vector<Bipartition> out;
    BoxSet lam = alpha.lambda.boxes();
    if (!lam.count(x)) {
        lam.insert(x);
        if (is_young(lam)) out.push_back({partition_from_boxes(lam), alpha.mu});
    }
    Box tx = theta(x, rect);
    BoxSet mu = alpha.mu.boxes();
    if (mu.count(tx)) {
        mu.erase(tx);
        if (is_young(mu)) out.push_back({alpha.lambda, partition_from_boxes(mu)});
    }
    return out;
}

std::vector<Bipartition> S_upper(Box x, const Bipartition& alpha, const Rectangle& rect) {
    if (!rect.contains(x)) throw Error("box outside the rectangle");
    std::vector<Bipartition> out;
    BoxSet lam = alpha.lambda.boxes();
    if (lam.count(x)) {
        lam.erase(x);
        if (is_young(lam)) out.push_back({partition_from_boxes(lam), alpha.mu});
    }
    Box tx = theta(x, rect);
    BoxSet mu = alpha.mu.boxes();
    if (!mu.count(tx)) {
        mu.insert(tx);
        if (is_young(mu)) out.push_back({alpha.lambda, partition_from_boxes(mu)});
    }
    return out;
}

EquivClass class_shift(const EquivClass& E, Box x, ShiftDir dir, const SpecialPoint& pt) {
    std::vector<Bipartition> images;
    for (const Bipartition& alpha : E.members) {
        auto s = (dir == ShiftDir::down) ? S_lower(x, alpha, E.rect) : S_upper(x, alpha, E.rect);
        images.insert(images.end(), s.begin(), s.end());
    }
    if (images.empty()) throw Error("no shifted class");
    EquivClass F = equivalence_class(images.front(), pt);
    for (const Bipartition& im : images)
        if (!F.contains(im)) throw CheckError("Prop 3.2 violated");
    return F;
}

Bipartition psi(const Bipartition& alpha, Box x, const BoxSet& nu, const Rectangle& rect) {
    if (!nu.count(x)) throw Error("psi: box not in the component");
    BoxSet lam = alpha.lambda.boxes();
    BoxSet inter = box_intersect(nu, lam);
    if (inter.size() == nu.size()) {
        lam.erase(x);
        if (!is_young(lam)) throw Error("psi: lambda minus the box is not a diagram");
        return {partition_from_boxes(lam), alpha.mu};
    }
    if (inter.empty()) {
        BoxSet mu = alpha.mu.boxes();
        mu.insert(theta(x, rect));
        if (!is_young(mu)) throw Error("psi: mu plus the box is not a diagram");
        return {alpha.lambda, partition_from_boxes(mu)};
    }
    throw Error("psi: component neither inside nor disjoint from lambda");
}

OrderReport lemma34_orders(Box x, const Bipartition& alpha, const Rectangle& rect) {
    const int i = x.i, j = x.j;
    Box tx = theta(x, rect);
    BoxSet mu = alpha.mu.boxes();
    if (!mu.count(tx)) throw Error("theta(x) is not removable from mu");
    mu.erase(tx);
    if (!is_young(mu)) throw Error("theta(x) is not removable from mu");

    const Partition& lam = alpha.lambda;
    const int llam = lam.length();
    OrderReport rep;
    // conditions hold only where the corresponding product factor exists
    if (i - 1 >= 1 && i - 1 <= llam && lam.part(i - 1) == j - 1) {
        rep.numerator_zero_order = 1;
        rep.triggered_conditions.push_back("lambda[i-1]=j-1");
    }
    if (i + 1 <= llam && lam.part(i + 1) == j) {
        rep.numerator_zero_order += 1;
        rep.triggered_conditions.push_back("lambda[i+1]=j");
    }
    if (i <= llam && lam.part(i) == j) {
        rep.denominator_zero_order = 1;
        rep.triggered_conditions.push_back("lambda[i]=j");
    }
    if (i <= llam && lam.part(i) == j - 1) {
        rep.denominator_zero_order += 1;
        rep.triggered_conditions.push_back("lambda[i]=j-1");
    }
    if (j == 1 && i == llam + 1) {
        rep.denominator_zero_order += 1;
        rep.triggered_conditions.push_back("j=1,i=l(lambda)+1");
    }
    if (rep.numerator_zero_order > 1 || rep.denominator_zero_order > 1)
        throw CheckError("Lemma 3.4 conditions are not exclusive");
    return rep;
}

DCoeff d_coeff(Box x, const Bipartition& alpha, const EquivClass& E) {
    const PairedComponent* comp = nullptr;
    for (const auto& c : E.components)
        if (c.nu.count(x)) comp = &c;
    if (!comp) throw Error("box is not inside a paired component");
    if (!E.contains(alpha)) throw Error("bipartition is not a member of the class");

    BoxSet rest = comp->nu;
    rest.erase(x);
    DCoeff d;
    if (rest.empty()) d.case_tag = 3;
    else d.case_tag = connected_components(rest).size() == 1 ? 1 : 2;

    BoxSet lam = alpha.lambda.boxes();
    bool nu_in_lambda = box_intersect(comp->nu, lam).size() == comp->nu.size();
    Bipartition pa = psi(alpha, x, comp->nu, E.rect);
    if (nu_in_lambda) {
        d.value = V_coeff(x, pa);
        d.expected_valuation = 0;
    } else {
        d.value = U_coeff(theta(x, E.rect), pa).product;
        d.expected_valuation = (d.case_tag == 2) ? 1 : (d.case_tag == 3 ? -1 : 0);
    }
    return d;
}

}  // namespace jl
