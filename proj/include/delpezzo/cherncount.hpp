// Independent combinatorial route to the stable invariants: count monomials
// in the free commutative algebra on the tautological generators, graded by
// (Chern weight, cohomological degree). Deliberately does not touch the
// series machinery, so it can serve as an oracle for it.
#pragma once

#include <vector>

#include <gmpxx.h>

#include "delpezzo/errors.hpp"

namespace delpezzo {

// A batch of tautological generators sharing one bidegree: `multiplicity`
// many distinguishable commuting variables of cohomological degree
// `coh_degree` and Chern weight `chern_weight`.
struct Generator {
    int coh_degree = 0;
    int chern_weight = 0;
    int multiplicity = 1;

    bool operator==(const Generator&) const = default;
};

// The generator list in cohomological degrees 2..2m:
//   degree 2:   weights {0, 1 x (rho-1), 2}
//   degree 2a:  weights {a-1, a x rho, a+1}   for 2 <= a <= m
// The weight-1 degree-2 entries vanish for rho = 1; the normalization
// removes the would-be weight-1 generators in higher degrees entirely.
std::vector<Generator> generator_set(int rho, int m);

// Number of monomials with total Chern weight = weight and total
// cohomological degree = weight + complement. Throws OutOfRange when the
// target degree exceeds the largest generator degree (the generator list is
// complete only up to there).
mpz_class count_monomials(const std::vector<Generator>& gens, int weight,
                          int complement);

struct ChernCell {
    int i = 0, j = 0;
    mpz_class count;       // monomial count
    mpz_class coefficient; // [H]^{i,j}
    bool ok = false;
};

struct ChernReport {
    int rho = 0, m = 0;
    std::vector<ChernCell> cells;
    bool all_ok = true;
};

// Compares count_monomials against the q^i t^j coefficients of H for all
// i+j <= 2m.
ChernReport verify_chern_vs_h(int rho, int m);

} // namespace delpezzo
