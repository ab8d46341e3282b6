#include "jacklaurent/regbasis.hpp"

#include <algorithm>
#include <bit>

namespace jl {

namespace {

// Boxes x in nu with lambda \ x and lambda_max \ x both diagrams.
std::vector<Box> admissible_boxes(const BoxSet& nu, const Partition& lambda,
                                  const Partition& lambda_max) {
    std::vector<Box> out;
    for (const Box& x : nu) {
        BoxSet l = lambda.boxes();
        if (!l.count(x)) continue;
        l.erase(x);
        if (!is_young(l)) continue;
        BoxSet lm = lambda_max.boxes();
        lm.erase(x);
        if (!is_young(lm)) continue;
        out.push_back(x);
    }
    return out;
}

}  // namespace

Column TransitionBuilder::q_column(const Bipartition& alpha) {
    return q_column_impl(alpha, alpha.lambda.box_count() + 1, false);
}

Column TransitionBuilder::q_column_impl(const Bipartition& alpha, int depth_left, bool alt) {
    if (depth_left < 0) throw CheckError("recursion failure");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find({alt, alpha});
        if (it != memo_.end()) return it->second;
    }
    EquivClass E = equivalence_class(alpha, pt_);
    Column col;
    if (alpha == E.alpha_min) {
        col[alpha] = RatKP(1);
    } else {
        unsigned mask = E.mask_of(alpha);
        int comp_index = -1;
        for (int t = 0; t < E.r(); ++t) {
            if (mask >> t & 1) {
                comp_index = t;
                break;
            }
        }
        if (comp_index < 0) throw CheckError("recursion failure");
        const BoxSet& nu = E.components[comp_index].nu;
        auto boxes = admissible_boxes(nu, alpha.lambda, E.alpha_max.lambda);
        if (boxes.empty()) throw CheckError("recursion failure");
        std::sort(boxes.begin(), boxes.end());
        Box x = alt ? boxes.front() : boxes.back();  // canonical: largest (i, j)
        col = column_via(E, alpha, x, nu, depth_left, alt);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(std::pair<bool, Bipartition>{alt, alpha}, col);
    return it->second;
}

Column TransitionBuilder::column_via(const EquivClass& E, const Bipartition& alpha, Box x,
                                     const BoxSet& nu, int depth_left, bool alt) {
    Bipartition pa = psi(alpha, x, nu, E.rect);
    Column sub = q_column_impl(pa, depth_left - 1, alt);
    Box tx = theta(x, E.rect);
    Column acc;
    for (const auto& [beta, coeff] : sub) {
        if (coeff.is_zero()) continue;
        // V-branch: add x to lambda
        BoxSet l = beta.lambda.boxes();
        if (!l.count(x)) {
            l.insert(x);
            if (is_young(l)) {
                Bipartition tgt{partition_from_boxes(l), beta.mu};
                if (!E.contains(tgt)) throw CheckError("Prop 3.2 violated");
                acc[tgt] += coeff * ctx_.norm(V_coeff(x, beta));
            }
        }
        // U-branch: remove theta(x) from mu
        BoxSet mset = beta.mu.boxes();
        if (mset.count(tx)) {
            mset.erase(tx);
            if (is_young(mset)) {
                Bipartition tgt{beta.lambda, partition_from_boxes(mset)};
                if (!E.contains(tgt)) throw CheckError("Prop 3.2 violated");
                acc[tgt] += coeff * ctx_.norm(U_coeff(tx, beta).product);
            }
        }
    }
    RatKP d = ctx_.norm(d_coeff(x, alpha, E).value);
    if (d.is_zero()) throw CheckError("degenerate coefficient");
    Column col;
    for (auto& [beta, coeff] : acc) {
        if (coeff.is_zero()) continue;
        col[beta] = coeff / d;
    }
    auto self = col.find(alpha);
    if (self == col.end() || !self->second.is_one()) throw CheckError("class structure violated");
    return col;
}

TransitionMatrix TransitionBuilder::transition_matrix(const EquivClass& E) {
    const int n = E.size();
    TransitionMatrix T{E, pt_, MatKP(n, n), ctx_};
    for (int j = 0; j < n; ++j) {
        Column col = q_column(E.members[j]);
        for (const auto& [beta, coeff] : col) {
            int i = E.index_of(beta);
            if (i < 0) throw CheckError("class structure violated");
            if (!subset_of(E.members[i], E.members[j]) && !coeff.is_zero())
                throw CheckError("class structure violated");
            T.a.at(i, j) = coeff;
        }
        if (!T.a.at(j, j).is_one()) throw CheckError("class structure violated");
    }
    return T;
}

bool TransitionBuilder::box_choice_invariant(const EquivClass& E) {
    TransitionMatrix canonical = transition_matrix(E);
    const int n = E.size();
    MatKP other(n, n);
    for (int j = 0; j < n; ++j) {
        Column col = q_column_impl(E.members[j], E.members[j].lambda.box_count() + 1, true);
        for (const auto& [beta, coeff] : col) other.at(E.index_of(beta), j) = coeff;
    }
    return canonical.a == other;
}

MatKP inverse_transition(const TransitionMatrix& A) {
    const int n = A.a.rows();
    MatKP inv = MatKP::identity(n);
    // A is upper unitriangular in the member order
    for (int j = 0; j < n; ++j) {
        for (int i = j - 1; i >= 0; --i) {
            RatKP s;
            for (int t = i + 1; t <= j; ++t) {
                if (!A.a.at(i, t).is_zero() && !inv.at(t, j).is_zero())
                    s += A.a.at(i, t) * inv.at(t, j);
            }
            inv.at(i, j) = -s;
        }
    }
    return inv;
}

PoleReport verify_pole_orders(const TransitionMatrix& A) {
    PoleReport rep;
    const EquivClass& E = A.cls;
    for (int j = 0; j < E.size(); ++j) {
        for (int i = 0; i < E.size(); ++i) {
            if (i == j || A.a.at(i, j).is_zero()) continue;
            int neg_val = -valuation(A.a.at(i, j), A.pt, A.ctx);
            BoxSet lam_diff = box_diff(E.members[j].lambda.boxes(), E.members[i].lambda.boxes());
            int comps = static_cast<int>(connected_components(lam_diff).size());
            int paired = std::popcount(E.member_masks[j] & ~E.member_masks[i]);
            bool pass = (neg_val == comps) && (comps == paired);
            rep.entries.push_back({i, j, neg_val, comps, pass});
            rep.all_pass = rep.all_pass && pass;
        }
    }
    return rep;
}

int p_pole_order(const MatKP& ainv, const TransitionMatrix& A, int alpha_index) {
    int order = 0;
    for (int i = 0; i < ainv.rows(); ++i) {
        const RatKP& v = ainv.at(i, alpha_index);
        if (v.is_zero()) continue;
        order = std::max(order, -valuation(v, A.pt, A.ctx));
    }
    return order;
}

}  // namespace jl
