#include "jacklaurent/epsalgebra.hpp"

#include <bit>

namespace jl {

UniPoly g_s(const BoxSet& nu, int s) {
    if (s < 1) throw Error("g_s requires s >= 1");
    UniPoly sum;
    for (const Box& x : nu) {
        UniPoly c(std::vector<BigRat>{BigRat(x.j - 1), BigRat(x.i - 1)});
        sum += c.pow(static_cast<unsigned>(s - 1));
    }
    return sum;
}

PolyKP g_tilde_s(const BoxSet& nu, int s, const Rectangle& rect) {
    if (s < 1) throw Error("g_tilde_s requires s >= 1");
    PolyKP zero_shift;
    PolyKP shift = mu_shift();
    PolyKP sum;
    for (const Box& x : nu) sum += content_poly(x, zero_shift).pow(static_cast<unsigned>(s - 1));
    PolyKP tsum;
    for (const Box& x : theta(nu, rect)) tsum += content_poly(x, shift).pow(static_cast<unsigned>(s - 1));
    if (s % 2 == 0) sum += tsum;
    else sum -= tsum;
    return sum;
}

UniPoly vandermonde_delta(const std::vector<BoxSet>& components) {
    const int r = static_cast<int>(components.size());
    if (r == 0) return UniPoly(BigRat(1));
    Mat<RatK> m(r, r);
    for (int s = 1; s <= r; ++s)
        for (int i = 0; i < r; ++i) m.at(s - 1, i) = RatK(g_s(components[i], s));
    // cofactor expansion; r stays small
    auto det = [](auto&& self, const Mat<RatK>& mm) -> RatK {
        const int n = mm.rows();
        if (n == 1) return mm.at(0, 0);
        RatK acc;
        for (int j = 0; j < n; ++j) {
            if (mm.at(0, j).is_zero()) continue;
            Mat<RatK> minor(n - 1, n - 1);
            for (int i = 1; i < n; ++i) {
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(i - 1, cc++) = mm.at(i, c);
                }
            }
            RatK term = mm.at(0, j) * self(self, minor);
            if (j % 2 == 0) acc += term;
            else acc -= term;
        }
        return acc;
    };
    RatK d = det(det, m);
    if (d.is_zero()) throw CheckError("Lemma 4.2 violated");
    if (!d.den().is_one()) throw CheckError("Lemma 4.2 violated");  // entries are polynomials
    return d.num();
}

MatKP epsilon_tilde(const TransitionMatrix& A, const MatKP& ainv, int i) {
    const EquivClass& E = A.cls;
    const int n = E.size();
    MatKP eps(n, n);
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) {
            unsigned mb = E.member_masks[b], ma = E.member_masks[a];
            if ((mb & ~ma) != 0) continue;  // beta must be ⊆ alpha
            RatKP sum;
            for (int g = 0; g < n; ++g) {
                unsigned mg = E.member_masks[g];
                if ((mb & ~mg) != 0 || (mg & ~ma) != 0) continue;  // beta ⊆ gamma ⊆ alpha
                if (((mg & ~mb) >> i & 1) == 0) continue;          // rho_i ⊆ gamma \ beta
                if (!ainv.at(b, g).is_zero() && !A.a.at(g, a).is_zero())
                    sum += ainv.at(b, g) * A.a.at(g, a);
            }
            eps.at(b, a) = sum;
        }
    }
    return eps;
}

MatK epsilon_matrix(const MatKP& eps_tilde, const SpecialPoint& pt, const EvalContext& ctx) {
    RatKP h(ctx.h(pt));
    MatK out(eps_tilde.rows(), eps_tilde.cols());
    for (int i = 0; i < eps_tilde.rows(); ++i) {
        for (int j = 0; j < eps_tilde.cols(); ++j) {
            const RatKP& v = eps_tilde.at(i, j);
            if (v.is_zero()) continue;
            RatKP hv = h * v;
            if (valuation(hv, pt, ctx) < 0) throw CheckError("limit does not exist");
            out.at(i, j) = eval_p0(hv, ctx.p0_star(pt));
        }
    }
    return out;
}

MatKP eigenvalue_diagonal(const EquivClass& E, int s) {
    const int n = E.size();
    MatKP d(n, n);
    for (int i = 0; i < n; ++i) d.at(i, i) = RatKP(b_r(E.members[i], s));
    return d;
}

SystemReport verify_system(const TransitionMatrix& A, const MatKP& ainv,
                           const std::vector<MatKP>& eps_tilde, const std::vector<MatK>& eps,
                           const EvalContext& ctx) {
    SystemReport rep;
    const EquivClass& E = A.cls;
    const SpecialPoint& pt = A.pt;
    const int r = E.r();
    const int n = E.size();

    std::vector<MatKP> bmats;  // B(s) for s = 1..r+1
    for (int s = 1; s <= r + 1; ++s) {
        MatKP D = eigenvalue_diagonal(E, s);
        if (!ctx.exact()) {
            for (int i = 0; i < n; ++i) D.at(i, i) = ctx.norm(D.at(i, i));
        }
        MatKP B = ainv * D * A.a - D;
        bmats.push_back(B);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const RatKP& v = B.at(i, j);
                if (!v.is_zero() && valuation(v, pt, ctx) < -1) {
                    rep.b_matrix_regular = false;
                    rep.failures.push_back("h*B(" + std::to_string(s) + ") has a pole at h=0");
                }
            }
        MatKP rhs(n, n);
        for (int t = 0; t < r; ++t) {
            RatKP g = ctx.norm(RatKP(g_tilde_s(E.components[t].nu, s, E.rect)));
            if (!g.is_zero()) rhs = rhs + eps_tilde[t].scaled(g);
        }
        if (!(B == rhs)) {
            rep.bs_identity = false;
            rep.failures.push_back("B(" + std::to_string(s) + ") != sum g~_s eps~");
        }
    }

    for (int s = 1; s <= r; ++s) {
        // s * sum_i g_s(nu_i) eps_i = lim_{h->0} B(s+1)
        MatK lhs(n, n);
        for (int t = 0; t < r; ++t) {
            RatK g = ctx.exact() ? RatK(g_s(E.components[t].nu, s))
                                 : RatK(g_s(E.components[t].nu, s).eval(*ctx.k_probe));
            if (!g.is_zero()) lhs = lhs + eps[t].scaled(g);
        }
        lhs = lhs.scaled(RatK(BigRat(s)));
        const MatKP& B = bmats[static_cast<std::size_t>(s)];  // B(s+1)
        MatK rhs(n, n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                const RatKP& v = B.at(i, j);
                if (v.is_zero()) continue;
                if (valuation(v, pt, ctx) < 0) ok = false;
                else rhs.at(i, j) = eval_p0(v, ctx.p0_star(pt));
            }
        if (!ok || !(lhs == rhs)) {
            rep.limit_system = false;
            rep.failures.push_back("limit system fails at s=" + std::to_string(s));
        }
    }
    return rep;
}

namespace {

// Rank certificate by exact rational specialization of k: the rank of the
// specialized matrix is a lower bound, so hitting the target certifies full
// rank. Returns false when inconclusive (pole hit or rank deficit observed).
bool full_rank_at_probe(const MatK& m, int target) {
    static const BigRat probes[] = {BigRat(10007, 489), BigRat(-7919, 1013)};
    for (const BigRat& q : probes) {
        Mat<BigRat> s(m.rows(), m.cols());
        bool ok = true;
        for (int i = 0; i < m.rows() && ok; ++i) {
            for (int j = 0; j < m.cols() && ok; ++j) {
                const RatK& v = m.at(i, j);
                if (v.is_zero()) continue;
                BigRat den = v.den().eval(q);
                if (den.is_zero()) {
                    ok = false;
                    break;
                }
                s.at(i, j) = v.num().eval(q) / den;
            }
        }
        if (ok && rank(s) == target) return true;
    }
    return false;
}

}  // namespace

EpsilonAlgebra verify_dual_numbers(const EquivClass& E, const std::vector<MatK>& eps) {
    EpsilonAlgebra alg;
    alg.r = E.r();
    alg.epsilon = eps;
    const int r = alg.r;
    const int n = E.size();

    for (int i = 0; i < r; ++i) {
        if (!(eps[i] * eps[i]).is_zero()) {
            alg.relations.squares_zero = false;
            alg.relations.failures.push_back("eps_" + std::to_string(i + 1) + "^2 != 0");
        }
        for (int j = i + 1; j < r; ++j) {
            if (!(eps[i] * eps[j] - eps[j] * eps[i]).is_zero()) {
                alg.relations.commute = false;
                alg.relations.failures.push_back("eps_" + std::to_string(i + 1) + " and eps_" +
                                                 std::to_string(j + 1) + " do not commute");
            }
        }
    }

    // subset products, identity included
    alg.subset_products.resize(1u << r);
    for (unsigned S = 0; S < (1u << r); ++S) {
        MatK p = MatK::identity(n);
        for (int i = 0; i < r; ++i)
            if (S >> i & 1) p = p * eps[i];
        alg.subset_products[S] = p;
    }

    // linear independence over Q(k): flatten into a (2^r) x (n*n) matrix
    MatK flat(1 << r, n * n);
    for (unsigned S = 0; S < (1u << r); ++S)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.at(S, i * n + j) = alg.subset_products[S].at(i, j);
    if (!full_rank_at_probe(flat, 1 << r) && rank(flat) != (1 << r)) {
        alg.relations.products_independent = false;
        alg.relations.failures.push_back("subset products are linearly dependent");
    }

    // socle witness: basis vector v with eps_1 ... eps_r v != 0, and the
    // 2^r vectors (prod_{i in S} eps_i) v must form a basis
    const MatK& full = alg.subset_products[(1u << r) - 1];
    alg.witness_index = -1;
    for (int v = 0; v < n; ++v) {
        bool nonzero = false;
        for (int i = 0; i < n; ++i)
            if (!full.at(i, v).is_zero()) nonzero = true;
        if (!nonzero) continue;
        MatK vecs(1 << r, n);
        for (unsigned S = 0; S < (1u << r); ++S)
            for (int i = 0; i < n; ++i) vecs.at(S, i) = alg.subset_products[S].at(i, v);
        if (full_rank_at_probe(vecs, 1 << r) || rank(vecs) == (1 << r)) {
            alg.witness_index = v;
            break;
        }
    }
    if (alg.witness_index < 0) {
        alg.relations.witness_found = false;
        alg.relations.failures.push_back("no cyclic vector for the regular representation");
    }
    return alg;
}

}  // namespace jl
