#pragma once

#include <optional>
#include <vector>

#include "jacklaurent/diagrams.hpp"
#include "jacklaurent/ratkp.hpp"

namespace jl {

/// Content polynomial c(x, a) = (j-1) + k(i-1) + a.
PolyKP content_poly(Box x, const PolyKP& shift);
/// The shift used for mu-boxes: 1 + k - k*p0.
PolyKP mu_shift();

/// CMS eigenvalue b_r = sum_{x in lambda} c(x,0)^{r-1} + (-1)^r sum_{x in mu} c(x,1+k-kp0)^{r-1}.
PolyKP b_r(const Bipartition& alpha, int r);

/// Content-multiset oracle for E-equivalence. With a point, substitutes
/// k*p0 = k*n + m; without, keeps k*p0 symbolic (equivalence is then equality).
/// `bound` caps a secondary power-sum cross-check (<= 0 disables it).
bool is_E_equivalent_oracle(const Bipartition& a, const Bipartition& b,
                            const std::optional<SpecialPoint>& pt, int bound = 0);

/// Geometric characterization: alpha \ pi agrees and theta maps the lambda
/// differences onto the mu differences.
bool is_E_equivalent_geometric(const Bipartition& a, const Bipartition& b,
                               const SpecialPoint& pt);

/// lambda∩mu and lambda∪mu agree as box sets.
bool is_R_equivalent(const Bipartition& a, const Bipartition& b);

struct PairedComponent {
    BoxSet nu;   // lambda-side boxes
    BoxSet tau;  // theta(nu), mu-side boxes
};

/// A resolved equivalence class: 2^r members generated from alpha_min by
/// toggling the paired components, all carrying the same outside part.
struct EquivClass {
    Rectangle rect;
    std::pair<BoxSet, BoxSet> outside;  // alpha \ pi (lambda-side, mu-side)
    Bipartition alpha_min, alpha_max;
    std::vector<PairedComponent> components;
    std::vector<Bipartition> members;     // ordered by box count, then indicator lex
    std::vector<unsigned> member_masks;   // bit t <=> components[t] present

    int r() const { return static_cast<int>(components.size()); }
    int size() const { return static_cast<int>(members.size()); }
    int index_of(const Bipartition& a) const;  // -1 if absent
    bool contains(const Bipartition& a) const { return index_of(a) >= 0; }
    unsigned mask_of(const Bipartition& a) const;  // throws if absent
};

/// Resolve the class of any bipartition (outside part carried through).
EquivClass equivalence_class(const Bipartition& a, const SpecialPoint& pt);

/// Pole order of P_alpha: the number of paired components of E(alpha) present
/// in alpha (on P_{n,m} this equals the component count of lambda ∩ theta(mu)).
int pole_order_prediction(const Bipartition& a, const SpecialPoint& pt);

/// All partitions fitting in max_rows x max_cols, in lexicographic order.
std::vector<Partition> partitions_inside(int max_rows, int max_cols);

}  // namespace jl
