#include "jacklaurent/unipoly.hpp"

#include <algorithm>
#include <optional>

namespace jl {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(int deg, const BigRat& c) {
    if (c.is_zero() || deg < 0) return UniPoly();
    std::vector<BigRat> v(deg + 1, BigRat(0));
    v[deg] = c;
    return UniPoly(std::move(v));
}

const BigRat& UniPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), BigRat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<BigRat> r(a.c_.size() + b.c_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const BigRat& c) const {
    if (c.is_zero()) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(BigRat(1)), base(*this);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool operator<(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw Error("zero denominator");
    q = UniPoly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        BigRat c = r.leading() / b.leading();
        int d = r.degree() - b.degree();
        UniPoly t = monomial(d, c);
        q += t;
        r -= t * b;
    }
}

UniPoly UniPoly::divexact(const UniPoly& b) const {
    UniPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

BigRat UniPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

BigRat UniPoly::rational_content() const {
    if (is_zero()) return BigRat(1);
    BigRat g(0), l(1);
    for (const auto& c : c_) {
        if (c.is_zero()) continue;
        g = int_gcd(g, c.numerator());
        l = int_lcm(l, c.denominator());
    }
    return g / l;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    return scaled(rational_content().inv());
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

// coefficients of f modulo 2^61-1; false if a denominator vanishes mod p
bool reduce_mod(const UniPoly& f, std::vector<unsigned long long>& out) {
    out.assign(f.degree() + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        BigRat c = f.coeff(i);
        unsigned long long num = mpz_fdiv_ui(c.raw().get_num_mpz_t(), kMod);
        unsigned long long den = mpz_fdiv_ui(c.raw().get_den_mpz_t(), kMod);
        if (den == 0) return false;
        out[i] = mulmod(num, powmod(den, kMod - 2));
    }
    return true;
}

// monic gcd over F_p for a word prime p; general-purpose Euclid
std::vector<unsigned long long> gcd_fp(std::vector<unsigned long long> a,
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
    return static_cast<int>(gcd_fp(std::move(a), std::move(b), kMod).size()) - 1;
}

}  // namespace

bool uni_coprime_cert(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    std::vector<unsigned long long> ra, rb;
    if (!reduce_mod(a, ra) || !reduce_mod(b, rb)) return false;
    if (ra.back() == 0 || rb.back() == 0) return false;  // degree dropped: inconclusive
    return gcd_degree_fp(ra, rb) == 0;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, integer arithmetic only.
static UniPoly pseudo_rem(UniPoly a, const UniPoly& b) {
    const BigRat& lb = b.leading();
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        BigRat la = a.leading();
        int shift = a.degree() - db;
        a = a.scaled(lb) - (b * UniPoly::monomial(shift, la));
    }
    return a;
}

namespace {

// Modular gcd of integer-primitive polynomials: CRT over word primes with a
// trial-division verification, so the result is certified exact. nullopt if
// the prime budget runs out (caller falls back to the PRS).
std::optional<UniPoly> modular_gcd(const UniPoly& pa, const UniPoly& pb) {
    mpz_class la(pa.leading().raw().get_num());
    mpz_class lb(pb.leading().raw().get_num());
    mpz_class lg;
    mpz_gcd(lg.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());

    auto reduce = [](const UniPoly& f, unsigned long long p, std::vector<unsigned long long>& out) {
        out.assign(f.degree() + 1, 0);
        for (int i = 0; i <= f.degree(); ++i) {
            BigRat c = f.coeff(i);
            out[i] = mpz_fdiv_ui(c.raw().get_num_mpz_t(), p);
        }
        return out.back() != 0;
    };

    auto divides = [](const UniPoly& g, const UniPoly& f) {
        UniPoly q, r;
        UniPoly::divmod(f, g, q, r);
        return r.is_zero();
    };

    int best_deg = -1;
    std::vector<mpz_class> acc;
    mpz_class modulus(1);
    const auto& primes = modular_prime_table();
    for (std::size_t round = 0; round < primes.size(); ++round) {
        unsigned long long p = primes[round];
        std::vector<unsigned long long> ra, rb;
        if (!reduce(pa, p, ra) || !reduce(pb, p, rb)) continue;  // bad prime
        std::vector<unsigned long long> g = gcd_fp(std::move(ra), std::move(rb), p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return UniPoly(BigRat(1));  // coprime, certified
        if (best_deg >= 0 && dg > best_deg) continue;
        // scale the monic image by lc(true gcd) | lg
        unsigned long long scale = mpz_fdiv_ui(lg.get_mpz_t(), p);
        auto mul = [p](unsigned long long x, unsigned long long y) {
            return static_cast<unsigned long long>(static_cast<__uint128_t>(x) * y % p);
        };
        for (auto& c : g) c = mul(c, scale);
        if (best_deg < 0 || dg < best_deg) {
            best_deg = dg;
            acc.assign(g.size(), mpz_class(0));
            modulus = 1;
        }
        // CRT combine, symmetric representatives
        mpz_class minv;
        mpz_class pz(static_cast<unsigned long>(p));
        if (mpz_invert(minv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t()) == 0)
            continue;
        mpz_class next_mod = modulus * pz;
        for (std::size_t i = 0; i < acc.size(); ++i) {
            mpz_class r(static_cast<unsigned long>(g[i]));
            mpz_class t = ((r - acc[i]) * minv) % pz;
            if (t < 0) t += pz;
            acc[i] += modulus * t;
            if (acc[i] * 2 > next_mod) acc[i] -= next_mod;
        }
        modulus = next_mod;
        std::vector<BigRat> cand(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) cand[i] = BigRat(mpq_class(acc[i]));
        UniPoly candidate(std::move(cand));
        if (candidate.is_zero() || candidate.degree() != best_deg) continue;
        candidate = candidate.primitive_part();
        if (divides(candidate, pa) && divides(candidate, pb)) {
            if (candidate.leading().sign() < 0) candidate = -candidate;
            return candidate;
        }
    }
    return std::nullopt;
}

}  // namespace

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    if (a.is_zero() || b.is_zero()) {
        UniPoly g = (a.is_zero() ? b : a).primitive_part();
        if (g.leading().sign() < 0) g = -g;
        return g;
    }
    if (uni_coprime_cert(a, b)) return UniPoly(BigRat(1));
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.degree() >= 10) {
        if (auto g = modular_gcd(a, b)) return *g;
    }
    // primitive PRS over the integers
    while (true) {
        if (b.degree() == 0) {
            a = UniPoly(BigRat(1));
            break;
        }
        UniPoly r = pseudo_rem(a, b);
        if (r.is_zero()) {
            a = b;
            break;
        }
        a = b;
        b = r.primitive_part();
    }
    if (a.leading().sign() < 0) a = -a;
    return a;
}

}  // namespace jl
