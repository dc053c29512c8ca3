// Truncated bivariate formal power series with exact integer coefficients,
// plus symbolic product forms for factors (1 - x^a y^b)^e.
//
// Truncation is always by total degree a + b <= cap. Coefficients are GMP
// integers; nothing in this module is floating point.
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "delpezzo/errors.hpp"

namespace delpezzo {

using Int = mpz_class;

// Exponent pair x^a y^b of the two formal variables. The variables are
// (q, t) for the BPS series and (z, w) for the Hilbert-scheme series; the
// arithmetic does not care which.
struct Monomial {
    int a = 0;
    int b = 0;

    int degree() const { return a + b; }
    auto operator<=>(const Monomial&) const = default;
};

// One factor (1 - x^a y^b)^e of a product. exponent < 0 means the factor
// contributes the geometric expansion of 1/(1 - x^a y^b)^{|e|}.
struct Factor {
    Monomial monomial;
    int exponent = -1;

    auto operator<=>(const Factor&) const = default;
};

// A finite list of factors representing a (possibly infinite) product.
// degree_cap is the materialization horizon: factors of monomial degree
// > degree_cap were omitted, which cannot change any coefficient of total
// degree <= degree_cap. Explicit finite products leave it unbounded.
struct ProductForm {
    static constexpr int unbounded = std::numeric_limits<int>::max();

    std::vector<Factor> factors;
    int degree_cap = unbounded;
};

// Dense triangular table of coefficients c(i,j), i + j <= cap. The linear
// index (i+j)(i+j+1)/2 + j groups cells by total degree, so a series
// truncated to a smaller cap is a prefix of the storage.
class BiSeries {
public:
    explicit BiSeries(int cap);

    static BiSeries one(int cap);

    int cap() const { return cap_; }

    // Unchecked access, valid for 0 <= i, 0 <= j, i + j <= cap.
    const Int& raw(int i, int j) const { return c_[index(i, j)]; }
    Int& raw(int i, int j) { return c_[index(i, j)]; }

    bool operator==(const BiSeries&) const = default;

private:
    static std::size_t index(int i, int j) {
        const std::size_t d = static_cast<std::size_t>(i) + j;
        return d * (d + 1) / 2 + j;
    }

    int cap_;
    std::vector<Int> c_;
};

std::ostream& operator<<(std::ostream& os, const BiSeries& s);

// Truncated expansion of the product. Requires d_max <= form.degree_cap.
// Throws InvalidFactor on a zero exponent, a degree-0 monomial, or a
// negative variable exponent.
BiSeries expand(const ProductForm& form, int d_max);

// Truncated product; the result cap is the minimum of the two input caps.
BiSeries mul(const BiSeries& s1, const BiSeries& s2);

// Multiply by a single factor in place (exact, no re-expansion).
void mul_factor(BiSeries& s, const Factor& f);

// Coefficient of x^i y^j. Throws OutOfTruncation when i + j exceeds the
// cap; a coefficient beyond the truncation is unknown, not zero.
const Int& coeff(const BiSeries& s, int i, int j);

// Collapses y into x: result[k] = sum over i+j=k of c(i,j).
std::vector<Int> specialize_diagonal(const BiSeries& s);

// Change of variables z = t, w = q/t performed on factors: z^s w^m becomes
// q^m t^{s-m}. Throws NegativeExponentAfterSubstitution when some factor
// has s < m; the caller must cancel such factors first (see normalized).
// The substitution lowers monomial degrees, so a form standing for an
// infinite family must be materialized past the target horizon and have its
// degree_cap re-derived by the caller (see g_change_of_variables_form).
ProductForm substitute_factorwise(const ProductForm& form);

// Merges factors with equal monomials by summing exponents and drops the
// ones that cancel to exponent zero. Represents the same product.
ProductForm normalized(const ProductForm& form);

// Drops factors of monomial degree > d_max and tightens the horizon.
// Requires d_max <= form.degree_cap.
ProductForm trimmed(const ProductForm& form, int d_max);

// Prefix copy truncated to a smaller cap. Requires d_max <= s.cap().
BiSeries truncated(const BiSeries& s, int d_max);

} // namespace delpezzo
