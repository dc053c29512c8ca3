// Stability bounds N1, N2, N for an ample curve class, computed exactly by
// enumerating effective two-part decompositions of the class.
#pragma once

#include <cstdint>
#include <optional>

#include "delpezzo/surface.hpp"

namespace delpezzo {

// Codimension of the non-integral locus inside |beta|. An empty optional
// means Infinite: the class admits no decomposition into two nonzero
// effective summands, so every member of |beta| is integral.
struct CodimResult {
    std::optional<std::int64_t> value;
    CurveClass beta1, beta2; // maximizing decomposition, set when finite

    bool infinite() const { return !value.has_value(); }
};

// codim = dim|beta| - max over unordered pairs beta1 + beta2 = beta of
// dim|beta1| + dim|beta2|, both summands nonzero with h^0 > 0. The summand
// box 0 <= beta1 . N <= beta . N over the nef generators is finite and
// contains every effective summand. Throws NotAmple / EmptyLinearSystem.
CodimResult integral_complement_codim(const Surface& s, const CurveClass& beta);

// N1 = 2 codim - 2; empty optional propagates Infinite.
std::optional<std::int64_t> n1(const Surface& s, const CurveClass& beta);

// N2 = min{N1, -beta.K - 1}; an Infinite N1 drops out of the min.
std::int64_t n2(const Surface& s, const CurveClass& beta);

// N = min{N2, beta(beta+K) + 2}.
std::int64_t n_bound(const Surface& s, const CurveClass& beta);

} // namespace delpezzo
