#ifndef SECPROJ_HILBERT_HPP
#define SECPROJ_HILBERT_HPP

#include <vector>

#include <gmpxx.h>

#include "secproj/groebner.hpp"

namespace secproj {

// Hilbert series data of R/I computed from the leading-term ideal.
// series = numerator / (1-t)^nvars; reduced = numerator with all (1-t)
// factors cancelled, so dim R/I = nvars - cancelled and deg = reduced(1).
struct HilbertData {
    int nvars = 0;
    std::vector<mpz_class> numerator;
    std::vector<mpz_class> reduced;
    int krull_dim = 0;       // dimension of R/I as a cone
    int proj_dim = -1;       // krull_dim - 1; -1 means empty projective scheme
    mpz_class degree = 0;    // reduced(1); multiplicity of the top component

    int numerator_degree() const { return static_cast<int>(numerator.size()) - 1; }

    // Hilbert function dim_K (R/I)_j via series expansion.
    mpz_class hilbert_function(long j) const;

    // Hilbert polynomial value (agrees with the function for large j).
    mpz_class hilbert_polynomial(long j) const;
};

HilbertData hilbert_series(const Ideal& I);

// dim_K (R/I)_j; standard-monomial count against the leading-term ideal.
mpz_class hilbert_function(const Ideal& I, long j);

// Numerator of the Hilbert series of a monomial ideal (pivot recursion).
std::vector<mpz_class> monomial_ideal_numerator(std::vector<Monomial> gens, int nvars);

// chi_i coefficients: P(k) = sum_i chi_i * C(k+i-1, i), i = 0..n.
std::vector<mpq_class> chi_coefficients(const HilbertData& h);

// Arithmetic genus of a generic linear curve section: slices with dim X - 1
// seeded random linear forms, saturates, and returns 1 - P_C(0).  Retries
// with fresh forms when the slice fails (dim, deg) = (1, deg X).
mpz_class sectional_genus_by_slicing(const Ideal& I, uint64_t seed, int retry_budget = 5);

// Binomial C(n, k) as the degree-k polynomial in n (nonzero for n < 0).
mpz_class binomial_poly(const mpz_class& n, int k);
// Combinatorial binomial: zero when n < k.
mpz_class binomial(long n, long k);

}  // namespace secproj

#endif
