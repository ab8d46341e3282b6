#include "jacklaurent/polykp.hpp"

#include <algorithm>
#include <optional>

namespace jl {

PolyKP PolyKP::monomial(Mono m, const BigRat& c) {
    PolyKP p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

PolyKP PolyKP::from_unipoly_in_k(const UniPoly& u) {
    PolyKP p;
    for (int i = 0; i <= u.degree(); ++i) {
        BigRat c = u.coeff(i);
        if (!c.is_zero()) p.terms_[{i, 0}] = c;
    }
    return p;
}

bool PolyKP::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
           terms_.begin()->second.is_one();
}

int PolyKP::deg_p0() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.p);
    return d;
}

int PolyKP::deg_k() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.k);
    return d;
}

Mono PolyKP::leading_mono() const {
    if (terms_.empty()) throw Error("leading monomial of zero polynomial");
    return terms_.rbegin()->first;
}

const BigRat& PolyKP::leading_coeff() const {
    if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

BigRat PolyKP::coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRat(0) : it->second;
}

PolyKP PolyKP::operator-() const {
    PolyKP r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

PolyKP& PolyKP::operator+=(const PolyKP& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PolyKP& PolyKP::operator-=(const PolyKP& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

PolyKP operator*(const PolyKP& a, const PolyKP& b) {
    PolyKP r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m{ma.k + mb.k, ma.p + mb.p};
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

PolyKP PolyKP::scaled(const BigRat& c) const {
    if (c.is_zero()) return PolyKP();
    PolyKP r(*this);
    for (auto& [m, x] : r.terms_) x *= c;
    return r;
}

PolyKP PolyKP::pow(unsigned e) const {
    PolyKP r(1), base(*this);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool operator<(const PolyKP& a, const PolyKP& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    MonoLess less;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (less(ia->first, ib->first)) return true;
        if (less(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

std::optional<PolyKP> PolyKP::try_divide(const PolyKP& b) const {
    if (b.is_zero()) throw Error("zero denominator");
    if (is_zero()) return PolyKP();
    PolyKP rem(*this), q;
    Mono lb = b.leading_mono();
    const BigRat& cb = b.leading_coeff();
    while (!rem.is_zero()) {
        Mono lr = rem.leading_mono();
        if (lr.k < lb.k || lr.p < lb.p) return std::nullopt;
        Mono t{lr.k - lb.k, lr.p - lb.p};
        BigRat c = rem.leading_coeff() / cb;
        PolyKP piece = monomial(t, c);
        q += piece;
        rem -= piece * b;
    }
    return q;
}

PolyKP PolyKP::divexact(const PolyKP& b) const {
    auto q = try_divide(b);
    if (!q) throw Error("inexact polynomial division");
    return *q;
}

std::vector<UniPoly> PolyKP::p0_coeffs() const {
    std::vector<std::vector<BigRat>> raw(static_cast<std::size_t>(deg_p0()) + 1);
    if (is_zero()) return {};
    for (const auto& [m, c] : terms_) {
        auto& row = raw[m.p];
        if (static_cast<int>(row.size()) <= m.k) row.resize(m.k + 1, BigRat(0));
        row[m.k] = c;
    }
    std::vector<UniPoly> out;
    out.reserve(raw.size());
    for (auto& row : raw) out.emplace_back(std::move(row));
    return out;
}

PolyKP PolyKP::from_p0_coeffs(const std::vector<UniPoly>& cs) {
    PolyKP r;
    for (std::size_t d = 0; d < cs.size(); ++d) {
        for (int i = 0; i <= cs[d].degree(); ++i) {
            BigRat c = cs[d].coeff(i);
            if (!c.is_zero()) r.terms_[{i, static_cast<int>(d)}] = c;
        }
    }
    return r;
}

BigRat PolyKP::rational_content() const {
    if (is_zero()) return BigRat(1);
    BigRat g(0), l(1);
    for (const auto& [m, c] : terms_) {
        g = int_gcd(g, c.numerator());
        l = int_lcm(l, c.denominator());
    }
    return g / l;
}

PolyKP PolyKP::substitute_k(const BigRat& q) const {
    PolyKP r;
    for (const auto& [m, c] : terms_) {
        BigRat v = c * q.pow(static_cast<unsigned>(m.k));
        if (v.is_zero()) continue;
        Mono key{0, m.p};
        auto it = r.terms_.find(key);
        if (it == r.terms_.end()) {
            r.terms_.emplace(key, v);
        } else {
            it->second += v;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

namespace {


// shared table of word primes above 2^61, computed once
const std::vector<unsigned long long>& modular_prime_table() {
    static const std::vector<unsigned long long> primes = [] {
        std::vector<unsigned long long> out;
        mpz_class p(1);
        p <<= 61;
        for (int i = 0; i < 64; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            out.push_back(mpz_get_ui(p.get_mpz_t()));
        }
        return out;
    }();
    return primes;
}

constexpr unsigned long long kMod = 2305843009213693951ull;  // 2^61 - 1

inline unsigned long long mulmod(unsigned long long a, unsigned long long b) {
    return static_cast<unsigned long long>(static_cast<__uint128_t>(a) * b % kMod);
}

unsigned long long powmod(unsigned long long a, unsigned long long e) {
    unsigned long long r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

// f(k0) mod 2^61-1; false when a coefficient denominator vanishes mod p
bool eval_mod(const UniPoly& f, unsigned long long k0, unsigned long long& out) {
    unsigned long long acc = 0;
    for (int i = f.degree(); i >= 0; --i) {
        BigRat cf = f.coeff(i);
        unsigned long long num = mpz_fdiv_ui(cf.raw().get_num_mpz_t(), kMod);
        unsigned long long den = mpz_fdiv_ui(cf.raw().get_den_mpz_t(), kMod);
        if (den == 0) return false;
        unsigned long long c = mulmod(num, powmod(den, kMod - 2));
        acc = mulmod(acc, k0);
        acc = (acc + c) % kMod;
    }
    out = acc;
    return true;
}

// monic gcd in F_p[x] for a word prime p
std::vector<unsigned long long> gcd_fp_vec(std::vector<unsigned long long> a,
                                           std::vector<unsigned long long> b,
                                           unsigned long long p) {
    auto mul = [p](unsigned long long x, unsigned long long y) {
        return static_cast<unsigned long long>(static_cast<__uint128_t>(x) * y % p);
    };
    auto pw = [&mul](unsigned long long x, unsigned long long e) {
        unsigned long long r = 1;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    auto trim = [](std::vector<unsigned long long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        unsigned long long inv = pw(b.back(), p - 2);
        while (a.size() >= b.size()) {
            unsigned long long f = mul(a.back(), inv);
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                unsigned long long s = mul(f, b[i]);
                a[off + i] = (a[off + i] >= s) ? a[off + i] - s : a[off + i] + p - s;
            }
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        unsigned long long inv = pw(a.back(), p - 2);
        for (auto& c : a) c = mul(c, inv);
    }
    return a;
}

int gcd_degree_fp(std::vector<unsigned long long> a, std::vector<unsigned long long> b) {
    return static_cast<int>(gcd_fp_vec(std::move(a), std::move(b), kMod).size()) - 1;
}

// Sound one-sided certificate that the gcd in (Q[k])[p0] has p0-degree 0:
// specialize k and reduce mod p; a degree-preserving specialization with a
// trivial gcd certifies coprimality of the primitive parts.
bool p0_coprime_cert(const std::vector<UniPoly>& A, const std::vector<UniPoly>& B) {
    for (unsigned long long k0 : {3ull, 1009ull}) {
        std::vector<unsigned long long> ra(A.size()), rb(B.size());
        bool ok = true;
        for (std::size_t i = 0; i < A.size() && ok; ++i) ok = eval_mod(A[i], k0, ra[i]);
        for (std::size_t i = 0; i < B.size() && ok; ++i) ok = eval_mod(B[i], k0, rb[i]);
        if (!ok) continue;
        if (ra.back() == 0 || rb.back() == 0) continue;  // degree dropped at this k0
        return gcd_degree_fp(std::move(ra), std::move(rb)) == 0;
    }
    return false;
}

// ------------------------------------------------------------------
// Brown-style modular bivariate gcd: specialize k at points over word
// primes, gcd univariately in p0, interpolate back in k, CRT across
// primes, and certify the candidate by exact trial division.

struct FpImage {
    std::vector<std::vector<unsigned long long>> coeffs;  // [p0 power][k power]
    unsigned long long p;
};

// reduce an integer-coefficient poly (as p0-coefficient list) mod p
bool reduce_image(const std::vector<UniPoly>& f, unsigned long long p, FpImage& out) {
    out.p = p;
    out.coeffs.assign(f.size(), {});
    for (std::size_t d = 0; d < f.size(); ++d) {
        auto& row = out.coeffs[d];
        row.assign(f[d].degree() + 1, 0);
        for (int i = 0; i <= f[d].degree(); ++i) {
            BigRat c = f[d].coeff(i);
            row[i] = mpz_fdiv_ui(c.raw().get_num_mpz_t(), p);
        }
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    // the p0-degree must be preserved
    return !out.coeffs.back().empty();
}

unsigned long long eval_fp(const std::vector<unsigned long long>& poly, unsigned long long t,
                           unsigned long long p) {
    auto mul = [p](unsigned long long x, unsigned long long y) {
        return static_cast<unsigned long long>(static_cast<__uint128_t>(x) * y % p);
    };
    unsigned long long acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (mul(acc, t) + poly[i]) % p;
    return acc;
}

// gcd images of A, B in F_p[p0] at enough k-points, scaled by gamma(t), then
// interpolated coefficient-wise in k (Newton form). Returns false when the
// prime looks unlucky; *trivial is set when the gcd is certified constant.
bool gcd_images_interpolated(const FpImage& A, const FpImage& B,
                             const std::vector<unsigned long long>& gamma_mod, int dk_bound,
                             std::vector<std::vector<unsigned long long>>& out, bool* trivial) {
    const unsigned long long p = A.p;
    auto mul = [p](unsigned long long x, unsigned long long y) {
        return static_cast<unsigned long long>(static_cast<__uint128_t>(x) * y % p);
    };
    auto inv = [&mul, p](unsigned long long x) {
        unsigned long long r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    *trivial = false;
    const int want = dk_bound + 1;
    int dp_img = -1;
    std::vector<unsigned long long> ts;
    std::vector<std::vector<unsigned long long>> gs;  // per point, p0-coefficients
    for (unsigned long long t = 0; t < static_cast<unsigned long long>(8 * want + 16); ++t) {
        if (eval_fp(A.coeffs.back(), t, p) == 0 || eval_fp(B.coeffs.back(), t, p) == 0) continue;
        if (eval_fp(gamma_mod, t, p) == 0) continue;
        std::vector<unsigned long long> at(A.coeffs.size()), bt(B.coeffs.size());
        for (std::size_t d = 0; d < A.coeffs.size(); ++d) at[d] = eval_fp(A.coeffs[d], t, p);
        for (std::size_t d = 0; d < B.coeffs.size(); ++d) bt[d] = eval_fp(B.coeffs[d], t, p);
        std::vector<unsigned long long> g = gcd_fp_vec(std::move(at), std::move(bt), p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) {
            *trivial = true;
            return true;
        }
        if (dp_img >= 0 && dg > dp_img) continue;  // unlucky point
        if (dp_img < 0 || dg < dp_img) {
            dp_img = dg;
            ts.clear();
            gs.clear();
        }
        unsigned long long scale = mul(eval_fp(gamma_mod, t, p), inv(g.back()));
        for (auto& c : g) c = mul(c, scale);
        ts.push_back(t);
        gs.push_back(std::move(g));
        if (static_cast<int>(ts.size()) == want) break;
    }
    if (static_cast<int>(ts.size()) < want) return false;

    // Newton interpolation per p0-coefficient
    const int n = want;
    out.assign(dp_img + 1, std::vector<unsigned long long>());
    for (int d = 0; d <= dp_img; ++d) {
        std::vector<unsigned long long> divided(n);
        for (int i = 0; i < n; ++i) divided[i] = d < static_cast<int>(gs[i].size()) ? gs[i][d] : 0;
        for (int level = 1; level < n; ++level) {
            for (int i = n - 1; i >= level; --i) {
                unsigned long long num =
                    (divided[i] >= divided[i - 1]) ? divided[i] - divided[i - 1]
                                                   : divided[i] + p - divided[i - 1];
                unsigned long long den = (ts[i] >= ts[i - level]) ? ts[i] - ts[i - level]
                                                                  : ts[i] + p - ts[i - level];
                divided[i] = mul(num, inv(den % p));
            }
        }
        // expand c_0 + c_1(x-t_0) + ... into monomial coefficients
        std::vector<unsigned long long> poly{divided[n - 1]};
        for (int i = n - 2; i >= 0; --i) {
            std::vector<unsigned long long> next(poly.size() + 1, 0);
            unsigned long long ti = ts[i] % p;
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] = (next[j + 1] + poly[j]) % p;
                unsigned long long s = mul(poly[j], ti);
                next[j] = (next[j] >= s) ? next[j] - s : next[j] + p - s;
            }
            next[0] = (next[0] + divided[i]) % p;
            poly = std::move(next);
        }
        while (!poly.empty() && poly.back() == 0) poly.pop_back();
        out[d] = std::move(poly);
    }
    return true;
}

UniPoly content_k(const std::vector<UniPoly>& cs);
std::vector<UniPoly> divide_by_content(const std::vector<UniPoly>& cs, const UniPoly& g);

// Modular bivariate gcd driver: integer-coefficient inputs, primitive in
// (Z[k])[p0], both of positive p0-degree. Returns the primitive gcd of the
// primitive parts, certified by trial division; nullopt when the prime
// budget runs out and the caller must fall back.
std::optional<PolyKP> modular_poly_gcd(const PolyKP& A, const PolyKP& B) {
    auto fa = A.p0_coeffs(), fb = B.p0_coeffs();
    UniPoly gamma = uni_gcd(fa.back(), fb.back());
    int dka = 0, dkb = 0;
    for (const auto& c : fa) dka = std::max(dka, c.degree());
    for (const auto& c : fb) dkb = std::max(dkb, c.degree());
    const int dk_bound = std::min(dka, dkb) + std::max(gamma.degree(), 0);

    auto reduce_uni = [](const UniPoly& f, unsigned long long p, std::vector<unsigned long long>& out) {
        out.assign(f.degree() + 1, 0);
        for (int i = 0; i <= f.degree(); ++i) {
            BigRat c = f.coeff(i);
            out[i] = mpz_fdiv_ui(c.raw().get_num_mpz_t(), p);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return !out.empty();
    };

    mpz_class modulus(0);
    int dp_img = -1;
    std::vector<std::vector<mpz_class>> acc;
    const auto& primes = modular_prime_table();
    for (std::size_t round = 0; round < primes.size(); ++round) {
        unsigned long long p = primes[round];
        FpImage ia, ib;
        if (!reduce_image(fa, p, ia) || !reduce_image(fb, p, ib)) continue;
        std::vector<unsigned long long> gamma_mod;
        if (!reduce_uni(gamma, p, gamma_mod)) continue;
        bool trivial = false;
        std::vector<std::vector<unsigned long long>> img;
        if (!gcd_images_interpolated(ia, ib, gamma_mod, dk_bound, img, &trivial)) continue;
        if (trivial) return PolyKP(1);
        int dg = static_cast<int>(img.size()) - 1;
        if (dp_img >= 0 && dg > dp_img) continue;
        if (dp_img < 0 || dg < dp_img) {
            dp_img = dg;
            acc.assign(dp_img + 1, std::vector<mpz_class>(dk_bound + 1, mpz_class(0)));
            modulus = 1;
            for (auto& row : acc)
                for (auto& c : row) c = 0;
        }
        mpz_class pz(static_cast<unsigned long>(p)), minv;
        if (mpz_invert(minv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t()) == 0)
            continue;
        mpz_class next_mod = modulus * pz;
        for (int d = 0; d <= dp_img; ++d) {
            for (int i = 0; i <= dk_bound; ++i) {
                unsigned long long r = (d < static_cast<int>(img.size()) &&
                                        i < static_cast<int>(img[d].size()))
                                           ? img[d][i]
                                           : 0;
                mpz_class rz(static_cast<unsigned long>(r));
                mpz_class t = ((rz - acc[d][i]) * minv) % pz;
                if (t < 0) t += pz;
                acc[d][i] += modulus * t;
                if (acc[d][i] * 2 > next_mod) acc[d][i] -= next_mod;
            }
        }
        modulus = next_mod;

        std::vector<UniPoly> cand(dp_img + 1);
        for (int d = 0; d <= dp_img; ++d) {
            std::vector<BigRat> coeffs(dk_bound + 1);
            for (int i = 0; i <= dk_bound; ++i) coeffs[i] = BigRat(mpq_class(acc[d][i]));
            cand[d] = UniPoly(std::move(coeffs));
        }
        if (cand.back().is_zero()) continue;
        UniPoly content = content_k(cand);
        PolyKP candidate = PolyKP::from_p0_coeffs(divide_by_content(cand, content));
        candidate = candidate.scaled(candidate.rational_content().inv());
        if (candidate.leading_coeff().sign() < 0) candidate = -candidate;
        if (A.try_divide(candidate) && B.try_divide(candidate)) return candidate;
    }
    return std::nullopt;
}

// Content in (Q[k])[p0]: normalized gcd of the p0-coefficients.
UniPoly content_k(const std::vector<UniPoly>& cs) {
    UniPoly g;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = uni_gcd(g, c);
        if (g.degree() == 0) break;
    }
    if (g.is_zero()) return g;
    // still normalize the integer content accumulated by uni_gcd's early exit
    g = g.primitive_part();
    if (g.leading().sign() < 0) g = -g;
    return g;
}

std::vector<UniPoly> divide_by_content(const std::vector<UniPoly>& cs, const UniPoly& g) {
    std::vector<UniPoly> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(c.is_zero() ? UniPoly() : c.divexact(g));
    return out;
}

int vdeg(const std::vector<UniPoly>& f) { return static_cast<int>(f.size()) - 1; }

void vtrim(std::vector<UniPoly>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Pseudo-remainder of f by g in (Q[k])[p0]: lc(g)^(deg f - deg g + 1) * f mod g.
std::vector<UniPoly> prem(std::vector<UniPoly> f, const std::vector<UniPoly>& g) {
    const UniPoly& lg = g.back();
    int dg = vdeg(g);
    while (vdeg(f) >= dg && !f.empty()) {
        int df = vdeg(f);
        UniPoly lf = f.back();
        for (auto& c : f) c = c * lg;
        for (int i = 0; i <= dg; ++i) f[df - dg + i] -= lf * g[i];
        vtrim(f);
    }
    return f;
}

}  // namespace

PolyKP poly_gcd(const PolyKP& a, const PolyKP& b) {
    auto normalized = [](const PolyKP& f) {
        if (f.is_zero()) return f;
        PolyKP g = f.scaled(f.rational_content().inv());
        if (g.leading_coeff().sign() < 0) g = -g;
        return g;
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);

    auto fa = a.p0_coeffs(), fb = b.p0_coeffs();
    UniPoly ca = content_k(fa), cb = content_k(fb);
    fa = divide_by_content(fa, ca);
    fb = divide_by_content(fb, cb);
    UniPoly cg = uni_gcd(ca, cb);

    if (vdeg(fa) < vdeg(fb)) std::swap(fa, fb);
    if (vdeg(fb) >= 1) {
        if (p0_coprime_cert(fa, fb)) return normalized(PolyKP::from_unipoly_in_k(cg));
        // modular route with trial-division certification (worth it once the
        // inputs outgrow the primitive PRS)
        int dka = 0, dkb = 0;
        for (const auto& c : fa) dka = std::max(dka, c.degree());
        for (const auto& c : fb) dkb = std::max(dkb, c.degree());
        bool big = vdeg(fb) >= 3 || std::min(dka, dkb) >= 8;
        PolyKP ia = PolyKP::from_p0_coeffs(fa);
        ia = ia.scaled(ia.rational_content().inv());
        PolyKP ib = PolyKP::from_p0_coeffs(fb);
        ib = ib.scaled(ib.rational_content().inv());
        if (big) {
            if (auto g = modular_poly_gcd(ia, ib))
                return normalized(*g * PolyKP::from_unipoly_in_k(cg));
        }
    }
    // primitive PRS in p0 (fallback)
    while (!fb.empty()) {
        if (vdeg(fb) == 0) {
            // a primitive p0-degree-0 divisor is a unit for the primitive-part gcd
            fa = {UniPoly(BigRat(1))};
            break;
        }
        std::vector<UniPoly> r = prem(fa, fb);
        vtrim(r);
        fa = std::move(fb);
        if (r.empty()) {
            fb.clear();
        } else {
            UniPoly c = content_k(r);
            fb = divide_by_content(r, c);
        }
    }
    UniPoly cpart = content_k(fa);
    fa = divide_by_content(fa, cpart);

    PolyKP g = PolyKP::from_p0_coeffs(fa) * PolyKP::from_unipoly_in_k(cg);
    return normalized(g);
}

}  // namespace jl
