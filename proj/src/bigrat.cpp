#include "jacklaurent/bigrat.hpp"

namespace jl {

BigRat BigRat::pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return BigRat(r);
}

BigRat int_gcd(const BigRat& a, const BigRat& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
    return BigRat(mpq_class(g));
}

BigRat int_lcm(const BigRat& a, const BigRat& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
    return BigRat(mpq_class(l));
}

}  // namespace jl
