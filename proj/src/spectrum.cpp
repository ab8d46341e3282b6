#include "jacklaurent/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

namespace jl {

PolyKP content_poly(Box x, const PolyKP& shift) {
    PolyKP p(BigRat(x.j - 1));
    p += PolyKP::monomial({1, 0}, BigRat(x.i - 1));
    p += shift;
    return p;
}

PolyKP mu_shift() {
    PolyKP p(1);
    p += PolyKP::var_k();
    p -= PolyKP::monomial({1, 1}, BigRat(1));
    return p;
}

PolyKP b_r(const Bipartition& alpha, int r) {
    if (r < 1) throw Error("b_r requires r >= 1");
    PolyKP sum;
    PolyKP zero_shift;
    for (const Box& x : alpha.lambda.boxes())
        sum += content_poly(x, zero_shift).pow(static_cast<unsigned>(r - 1));
    PolyKP shift = mu_shift();
    PolyKP musum;
    for (const Box& x : alpha.mu.boxes())
        musum += content_poly(x, shift).pow(static_cast<unsigned>(r - 1));
    if (r % 2 == 0) sum += musum;
    else sum -= musum;
    return sum;
}

namespace {

// Multiset element a + b*k + c*(k*p0); the mu-side elements enter negated.
struct Elem {
    long a, b, c;
    auto operator<=>(const Elem&) const = default;
};

std::vector<Elem> oracle_multiset(const Bipartition& lam_side, const Bipartition& mu_side,
                                  const std::optional<SpecialPoint>& pt) {
    // contents of lam_side.lambda, negated shifted contents of mu_side.mu
    std::vector<Elem> v;
    for (const Box& x : lam_side.lambda.boxes()) v.push_back({x.j - 1, x.i - 1, 0});
    for (const Box& y : mu_side.mu.boxes()) v.push_back({-y.j, -y.i, 1});
    if (pt) {
        for (Elem& e : v) {
            e.a += e.c * pt->m;
            e.b += e.c * pt->n;
            e.c = 0;
        }
    }
    std::sort(v.begin(), v.end());
    return v;
}

// power sums of elements as polynomials in k (requires substituted elements, c = 0)
std::vector<UniPoly> power_sums(const std::vector<Elem>& elems, int bound) {
    std::vector<UniPoly> sums(static_cast<std::size_t>(bound) + 1);
    for (const Elem& e : elems) {
        UniPoly lin(std::vector<BigRat>{BigRat(e.a), BigRat(e.b)});
        UniPoly p(BigRat(1));
        for (int s = 0; s <= bound; ++s) {
            sums[s] += p;
            if (s < bound) p *= lin;
        }
    }
    return sums;
}

}  // namespace

bool is_E_equivalent_oracle(const Bipartition& a, const Bipartition& b,
                            const std::optional<SpecialPoint>& pt, int bound) {
    auto left = oracle_multiset(a, b, pt);
    auto right = oracle_multiset(b, a, pt);
    bool eq = left == right;
    if (pt && bound > 0) {
        // Newton power sums up to the multiset size determine the multiset;
        // truncated sums are a consistency cross-check only.
        int cap = std::min<int>(bound, static_cast<int>(std::max(left.size(), right.size())));
        bool sums_eq = left.size() == right.size() && power_sums(left, cap) == power_sums(right, cap);
        if (eq && !sums_eq) throw CheckError("oracle cross-check failed");
        if (!eq && sums_eq && cap >= static_cast<int>(left.size()))
            throw CheckError("oracle cross-check failed");
    }
    return eq;
}

bool is_E_equivalent_geometric(const Bipartition& a, const Bipartition& b,
                               const SpecialPoint& pt) {
    Rectangle rect{pt.n, pt.m};
    BoxSet pi = rect.boxes();
    BoxSet la = a.lambda.boxes(), ma = a.mu.boxes();
    BoxSet lb = b.lambda.boxes(), mb = b.mu.boxes();
    // (5): alpha \ pi = beta \ pi, componentwise
    if (box_diff(la, pi) != box_diff(lb, pi)) return false;
    if (box_diff(ma, pi) != box_diff(mb, pi)) return false;
    // (6): theta(lambda \ lambda') = mu \ mu' both ways; the differences lie in pi
    if (theta(box_diff(la, lb), rect) != box_diff(ma, mb)) return false;
    if (theta(box_diff(lb, la), rect) != box_diff(mb, ma)) return false;
    return true;
}

bool is_R_equivalent(const Bipartition& a, const Bipartition& b) {
    BoxSet la = a.lambda.boxes(), ma = a.mu.boxes();
    BoxSet lb = b.lambda.boxes(), mb = b.mu.boxes();
    return box_intersect(la, ma) == box_intersect(lb, mb) &&
           box_union(la, ma) == box_union(lb, mb);
}

int EquivClass::index_of(const Bipartition& a) const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i] == a) return static_cast<int>(i);
    return -1;
}

unsigned EquivClass::mask_of(const Bipartition& a) const {
    int i = index_of(a);
    if (i < 0) throw Error("bipartition is not a member of the class");
    return member_masks[i];
}

EquivClass equivalence_class(const Bipartition& a, const SpecialPoint& pt) {
    Rectangle rect{pt.n, pt.m};
    BoxSet pi = rect.boxes();
    BoxSet lam = a.lambda.boxes(), mu = a.mu.boxes();
    BoxSet lam_in = box_intersect(lam, pi), mu_in = box_intersect(mu, pi);
    BoxSet lam_out = box_diff(lam, pi), mu_out = box_diff(mu, pi);
    bool has_outside = !lam_out.empty() || !mu_out.empty();

    BoxSet tmu = theta(mu_in, rect);
    BoxSet I = box_intersect(lam_in, tmu);
    BoxSet J = box_diff(pi, box_union(lam_in, tmu));
    std::vector<BoxSet> comps = connected_components(box_union(I, J));
    int rc = static_cast<int>(comps.size());
    if (rc >= 20) throw Error("class too large to enumerate");

    unsigned self_mask = 0;
    for (int t = 0; t < rc; ++t) {
        bool on = I.count(*comps[t].begin()) > 0;
        for (const Box& bx : comps[t])
            if ((I.count(bx) > 0) != on) throw CheckError("class structure violated");
        if (on) self_mask |= 1u << t;
    }

    BoxSet lam_min = box_diff(lam_in, I);
    BoxSet mu_min = box_diff(mu_in, theta(I, rect));

    std::vector<std::optional<Bipartition>> built(1u << rc);
    std::vector<unsigned> valid;
    for (unsigned S = 0; S < (1u << rc); ++S) {
        BoxSet L = lam_min, M = mu_min;
        for (int t = 0; t < rc; ++t) {
            if (S >> t & 1) {
                L = box_union(L, comps[t]);
                M = box_union(M, theta(comps[t], rect));
            }
        }
        L = box_union(L, lam_out);
        M = box_union(M, mu_out);
        if (is_young(L) && is_young(M)) {
            built[S] = Bipartition{partition_from_boxes(L), partition_from_boxes(M)};
            valid.push_back(S);
        } else if (!has_outside) {
            throw CheckError("class structure violated");  // all 2^r subsets must be bipartitions
        }
    }
    if (!built[self_mask] || *built[self_mask] != a) throw CheckError("class structure violated");

    unsigned forced = ~0u, all = 0;
    for (unsigned S : valid) {
        forced &= S;
        all |= S;
    }
    unsigned free_mask = all & ~forced;
    int rfree = std::popcount(free_mask);
    if (valid.size() != (1u << rfree)) throw CheckError("class structure violated");
    for (unsigned S : valid)
        if ((S & forced) != forced || (S & ~all) != 0) throw CheckError("class structure violated");

    std::vector<int> free_bits;
    for (int t = 0; t < rc; ++t)
        if (free_mask >> t & 1) free_bits.push_back(t);

    EquivClass E;
    E.rect = rect;
    E.outside = {lam_out, mu_out};
    E.alpha_min = *built[forced];
    E.alpha_max = *built[all];
    for (int t : free_bits) E.components.push_back({comps[t], theta(comps[t], rect)});

    struct Entry {
        int boxes;
        unsigned lexkey;
        unsigned mask;
        Bipartition bp;
    };
    std::vector<Entry> entries;
    for (unsigned F = 0; F < (1u << rfree); ++F) {
        unsigned S = forced;
        unsigned lexkey = 0;
        for (int t = 0; t < rfree; ++t) {
            if (F >> t & 1) {
                S |= 1u << free_bits[t];
                lexkey |= 1u << (rfree - 1 - t);  // component 1 most significant
            }
        }
        entries.push_back({built[S]->box_count(), lexkey, F, *built[S]});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        return std::tie(x.boxes, x.lexkey) < std::tie(y.boxes, y.lexkey);
    });
    for (auto& e : entries) {
        E.members.push_back(e.bp);
        E.member_masks.push_back(e.mask);
    }
    return E;
}

int pole_order_prediction(const Bipartition& a, const SpecialPoint& pt) {
    EquivClass E = equivalence_class(a, pt);
    return std::popcount(E.mask_of(a));
}

std::vector<Partition> partitions_inside(int max_rows, int max_cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(cur);
        if (row > max_rows) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 1, max_cols);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jl
