// Recovers the refined invariants n^{i,j} from Betti numbers of relative
// Hilbert schemes, inductively in the number of points. This route never
// reads the closed product formula, so agreement with it is a real check.
//
// The driving relation is
//   b_m(C^[k]) = sum over i+j <= k, j >= 0 of n^{i, m-i-2j},
// whose k-differences telescope to one new unknown n^{l, m-l} per row.
#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "delpezzo/genfun.hpp"

namespace delpezzo {

// Betti numbers b_m(C^[k]) for 0 <= k <= k_max, 0 <= m <= m_max. The
// declared bounds must satisfy k_max <= N2(beta), m_max <= N1(beta) for the
// extraction to mean anything geometrically.
struct BettiInput {
    int k_max = 0;
    int m_max = 0;
    std::map<std::pair<int, int>, Int> b; // (k, m) -> b_m(C^[k])
};

// Betti table generated from the product-formula route, with
// k_max = m_max = N(beta).
BettiInput betti_input_from_formula(const Surface& s, const CurveClass& beta);

struct ExtractionResult {
    // Cells with i+j <= min(k_max, m_max): the region where the inductive
    // chain of identities is valid.
    BpsTable table;
    // Cells the recursion computes beyond that region (i+j <= m_max only).
    std::map<std::pair<int, int>, Int> unverified;
};

// Runs the induction. Throws IncompleteInput when a required (k, m) cell is
// missing and NegativeInvariant when some extracted n^{i,j} is negative
// (the relation then admits no valid solution; the input is inconsistent).
ExtractionResult extract_bps(const BettiInput& input);

struct RoundtripCell {
    int i = 0, j = 0;
    Int expected; // formula route
    Int actual;   // extraction route
    bool ok = false;
};

struct RoundtripReport {
    std::int64_t bound = 0; // N(beta)
    std::vector<RoundtripCell> cells;
    bool all_ok = true;
};

// Generates Betti input from the formula route, extracts, and compares every
// cell with i+j <= N(beta) against refined_bps.
RoundtripReport roundtrip_verify(const Surface& s, const CurveClass& beta);

// Compares an externally supplied Betti table against the formula route on
// the cells both sides cover.
RoundtripReport roundtrip_verify_input(const Surface& s, const CurveClass& beta,
                                       const BettiInput& input);

} // namespace delpezzo
