#pragma once

#include <map>
#include <mutex>

#include "jacklaurent/matrix.hpp"
#include "jacklaurent/pieri.hpp"

namespace jl {

using MatKP = Mat<RatKP>;

/// Transition matrix A = (a_beta_alpha) from the P-basis to the regular
/// Q-basis of a class: Q_alpha = sum_beta a_beta_alpha P_beta; unitriangular
/// in the member order, supported on beta ⊆ alpha.
struct TransitionMatrix {
    EquivClass cls;
    SpecialPoint pt;
    MatKP a;  // a.at(beta_index, alpha_index)
    EvalContext ctx;  // orders are measured against ctx.phi(pt)
};

/// Column map for a single member: member -> coefficient (absent = 0).
using Column = std::map<Bipartition, RatKP>;

/// Memoizing engine for the translation-functor recursion. Safe to share
/// between workers: the memo store is locked and inserts are idempotent.
class TransitionBuilder {
public:
    explicit TransitionBuilder(const SpecialPoint& pt, EvalContext ctx = {})
        : pt_(pt), ctx_(std::move(ctx)) {}

    const SpecialPoint& point() const { return pt_; }

    /// Coefficients of Q_alpha over the members of E(alpha).
    Column q_column(const Bipartition& alpha);

    TransitionMatrix transition_matrix(const EquivClass& E);

    /// Diagnostic: recompute the matrix choosing the alternative admissible
    /// box (smallest instead of largest) and report whether A changes.
    bool box_choice_invariant(const EquivClass& E);

private:
    Column q_column_impl(const Bipartition& alpha, int depth_left, bool alt_choice);
    Column column_via(const EquivClass& E, const Bipartition& alpha, Box x, const BoxSet& nu,
                      int depth_left, bool alt_choice);

    SpecialPoint pt_;
    EvalContext ctx_;
    std::map<std::pair<bool, Bipartition>, Column> memo_;
    std::mutex mu_;
};

/// Exact inverse by back-substitution on the unitriangular order.
MatKP inverse_transition(const TransitionMatrix& A);

struct PoleEntryReport {
    int beta_index, alpha_index;
    int neg_valuation;
    int component_count;
    bool pass;
};
struct PoleReport {
    std::vector<PoleEntryReport> entries;
    bool all_pass = true;
};
/// Checks -valuation(a_beta_alpha) = number of connected components of
/// (alpha \ beta) on the lambda side (= the paired-component count).
PoleReport verify_pole_orders(const TransitionMatrix& A);

/// Pole order of P_alpha: max over beta of -valuation(ainv_beta_alpha).
int p_pole_order(const MatKP& ainv, const TransitionMatrix& A, int alpha_index);

}  // namespace jl
