#pragma once

#include "jacklaurent/regbasis.hpp"

namespace jl {

using MatK = Mat<RatK>;

/// g_s(nu) = sum_{x in nu} c(x,0)^{s-1}, a polynomial in k.
UniPoly g_s(const BoxSet& nu, int s);

/// g~_s(nu) = sum_{x in nu} c(x,0)^{s-1} + (-1)^s sum_{x in theta(nu)} c(x,1+k-kp0)^{s-1}.
PolyKP g_tilde_s(const BoxSet& nu, int s, const Rectangle& rect);

/// det(g_s(nu_i))_{s,i=1..r}; throws "Lemma 4.2 violated" if zero.
UniPoly vandermonde_delta(const std::vector<BoxSet>& components);

/// eps~_i = sum over chains beta ⊆ gamma ⊆ alpha with rho_i ⊆ gamma \ beta of
/// ainv_{beta gamma} a_{gamma alpha} E_{beta alpha}.
MatKP epsilon_tilde(const TransitionMatrix& A, const MatKP& ainv, int i);

/// eps_i = lim_{h->0} h * eps~_i; throws "limit does not exist" on a residual pole.
MatK epsilon_matrix(const MatKP& eps_tilde, const SpecialPoint& pt,
                    const EvalContext& ctx = {});

/// Diagonal of b_s values over the class members (symbolic in p0).
MatKP eigenvalue_diagonal(const EquivClass& E, int s);

struct SystemReport {
    bool bs_identity = true;        // B(s) = sum g~_s(nu) eps~_nu exactly, s <= r+1
    bool b_matrix_regular = true;   // h*B(s) regular at h = 0 (valuations >= -1)
    bool limit_system = true;       // s * sum g_s(nu_i) eps_i = lim B(s+1), s = 1..r
    std::vector<std::string> failures;
};
SystemReport verify_system(const TransitionMatrix& A, const MatKP& ainv,
                           const std::vector<MatKP>& eps_tilde,
                           const std::vector<MatK>& eps, const EvalContext& ctx = {});

struct RelationReport {
    bool squares_zero = true;
    bool commute = true;
    bool products_independent = true;
    bool witness_found = true;
    std::vector<std::string> failures;
};

struct EpsilonAlgebra {
    int r = 0;
    std::vector<MatK> epsilon;
    std::vector<MatK> subset_products;  // indexed by subset mask
    int witness_index = -1;             // class-basis vector with eps_1..eps_r v != 0
    RelationReport relations;
};

/// Verifies the dual-number relations, 2^r-dimensional span, and the regular
/// representation witness; failures are reported, not masked.
EpsilonAlgebra verify_dual_numbers(const EquivClass& E, const std::vector<MatK>& eps);

}  // namespace jl
