// The generating functions behind the stable-range invariants:
//
//   T(q)   = prod_{i>=0} 1 / ((1 - q^{2i+2})^{rho+1} (1 - q^{2i+4}))
//   H(q,t) = (1-qt)^{-(rho-1)} prod_{i>=0}
//              1 / ((1 - (qt)^i q^2) (1 - (qt)^{i+2})^rho (1 - (qt)^i t^2))
//   G(z,w) = prod_{i>=1} 1 / ((1 - z^{2i-2} w^i) (1 - z^{2i} w^i)^rho
//                              (1 - z^{2i+2} w^i))
//
// T gives stable intersection Betti numbers, H their refinement n^{i,j},
// and G the Betti numbers of the Hilbert schemes of points S^[n].
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "delpezzo/bounds.hpp"
#include "delpezzo/qseries.hpp"
#include "delpezzo/surface.hpp"

namespace delpezzo {

// Caps above this are rejected to bound memory.
inline constexpr int max_series_cap = 200;

// Factor lists materialized up to monomial degree cap. Throws InvalidRho
// unless 1 <= rho <= 9.
ProductForm t_form(int rho, int cap);
ProductForm h_form(int rho, int cap);
ProductForm g_form(int rho, int cap); // variables (z, w)

BiSeries t_series(int rho, int cap);
BiSeries h_series(int rho, int cap);
BiSeries g_series(int rho, int cap);

// The two sides of the change-of-variables identity, both valid to cap:
// G(z,w)(1-w)/(1-z^2) rewritten to (q,t) factor by factor, and H(q,t)/(1-qt).
ProductForm g_change_of_variables_form(int rho, int cap);
ProductForm h_over_one_minus_qt_form(int rho, int cap);

enum class Route { formula, extraction, chern_count };

std::string route_name(Route r);

// Refined invariants n^{i,j} for i+j <= bound, plus how they were computed.
struct BpsTable {
    std::string surface;
    CurveClass beta;
    std::int64_t bound = 0; // N(beta)
    Route route = Route::formula;
    std::map<std::pair<int, int>, Int> entries;

    const Int& at(int i, int j) const;
};

// n^{i,j} = [H]^{i,j}, valid for i+j <= N(beta) only. Throws
// OutOfStableRange beyond the bound rather than returning a coefficient
// the stabilization does not certify; NotAmple for a non-ample class.
Int refined_bps(const Surface& s, const CurveClass& beta, int i, int j);

// dim IH^k = [T]^k for k <= N(beta); equals the row sums of refined_bps.
Int stable_ih_betti(const Surface& s, const CurveClass& beta, int k);

// b_s(S^[n]) = [G]^{s,n}.
Int hilb_betti(const Surface& s, int n, int degree);

// b_i of the relative Hilbert scheme of k points over the integral locus:
// equal to b_i(S^[k] x P^{dim|beta| - k}) for i <= N1, k <= N2.
Int relhilb_betti(const Surface& s, const CurveClass& beta, int k, int i);

// dim C^[k] = dim|beta| + k.
std::int64_t relhilb_dim(const Surface& s, const CurveClass& beta, int k);

// Full table up to N(beta) via the closed formula.
BpsTable bps_table(const Surface& s, const CurveClass& beta);

} // namespace delpezzo
