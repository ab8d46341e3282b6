#pragma once

#include <vector>

#include "jacklaurent/spectrum.hpp"

namespace jl {

/// c_lambda(j, r, a) = lambda_r - j - k(lambda'_j - r) + a  (parts 0 out of range).
PolyKP c_lambda(const Partition& p, int j, int r, const PolyKP& a);
/// c_alpha(j, r, a) = lambda_r + j + k(mu'_j + r) + a.
PolyKP c_alpha(const Bipartition& alpha, int j, int r, const PolyKP& a);

/// The raw factor lists of U(x, alpha; p0) = U1 * U2 * U3, kept unreduced so
/// zero/pole orders can be counted before any cancellation.
struct UFactorization {
    std::vector<PolyKP> u1_num, u1_den;
    std::vector<PolyKP> u2_num, u2_den;
    std::vector<PolyKP> u3_num, u3_den;
    PolyKP num_product() const;
    PolyKP den_product() const;
};
UFactorization u_factors(Box x, const Bipartition& alpha);

struct CoeffFactors {
    RatKP u1, u2, u3;
    RatKP product;
};
/// Throws Error("degenerate coefficient") if a denominator factor is the zero polynomial.
CoeffFactors U_coeff(Box x, const Bipartition& alpha);
/// Coefficient of P_{lambda∪x, mu} in p1 * P_{lambda,mu}: the p0-free product
/// over the column boxes above x = (i,j),
///   prod_{r<i} c_lambda(jr,1) c_lambda(jr,-2k) / (c_lambda(jr,1-k) c_lambda(jr,-k));
/// requires x addable to lambda, never vanishes or degenerates.
RatKP V_coeff(Box x, const Bipartition& alpha);

/// S_x(alpha) = {(lambda ∪ x, mu), (lambda, mu \ theta(x))}, keeping only diagrams.
std::vector<Bipartition> S_lower(Box x, const Bipartition& alpha, const Rectangle& rect);
/// S^x(alpha) = {(lambda \ x, mu), (lambda, mu ∪ theta(x))}, keeping only diagrams.
std::vector<Bipartition> S_upper(Box x, const Bipartition& alpha, const Rectangle& rect);

enum class ShiftDir { down, up };  // down = S_x (class E_x), up = S^x (class E^x)

/// The unique neighbouring class containing all S-images of all members.
/// Throws "no shifted class" when every image set is empty and aborts with
/// "Prop 3.2 violated" if the images split across classes.
EquivClass class_shift(const EquivClass& E, Box x, ShiftDir dir, const SpecialPoint& pt);

/// psi(alpha) = (lambda \ x, mu) when nu ⊆ lambda, (lambda, mu ∪ theta(x)) when nu ∩ lambda = ∅.
Bipartition psi(const Bipartition& alpha, Box x, const BoxSet& nu, const Rectangle& rect);

struct OrderReport {
    int numerator_zero_order = 0;    // 0 or 1
    int denominator_zero_order = 0;  // 0 or 1
    std::vector<std::string> triggered_conditions;
};
/// Geometric zero/pole predicate for U(theta(x), alpha; p0), x = (i,j);
/// requires theta(x) removable from mu.
OrderReport lemma34_orders(Box x, const Bipartition& alpha, const Rectangle& rect);

struct DCoeff {
    RatKP value;
    int case_tag = 0;           // 1 connected, 2 split, 3 single box
    int expected_valuation = 0; // +1 zero, -1 pole, 0 regular
};
/// Coefficient d with F_x(P_psi(alpha)) ∋ d * P_alpha, for x in a paired
/// component nu of E with lambda_max \ x a diagram.
DCoeff d_coeff(Box x, const Bipartition& alpha, const EquivClass& E);

}  // namespace jl
