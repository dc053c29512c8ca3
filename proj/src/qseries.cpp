#include "delpezzo/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace delpezzo {

namespace {

std::size_t table_size(int cap) {
    const std::size_t n = static_cast<std::size_t>(cap) + 1;
    return n * (n + 1) / 2;
}

void check_factor(const Factor& f) {
    if (f.exponent == 0)
        throw InvalidFactor("factor exponent must be nonzero");
    if (f.monomial.a < 0 || f.monomial.b < 0)
        throw InvalidFactor("factor monomial exponents must be nonnegative");
    if (f.monomial.degree() == 0)
        throw InvalidFactor("factor monomial must have total degree >= 1");
}

// s *= (1 - x^a y^b). Cells are updated from high to low total degree so the
// subtracted cell is still the original value.
void mul_binomial(BiSeries& s, int a, int b) {
    for (int d = s.cap(); d >= a + b; --d) {
        for (int j = d; j >= 0; --j) {
            const int i = d - j;
            if (i >= a && j >= b)
                s.raw(i, j) -= s.raw(i - a, j - b);
        }
    }
}

// s /= (1 - x^a y^b), i.e. multiply by the geometric series. Low to high
// total degree, so the added cell is already final.
void div_binomial(BiSeries& s, int a, int b) {
    for (int d = a + b; d <= s.cap(); ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            if (i >= a && j >= b)
                s.raw(i, j) += s.raw(i - a, j - b);
        }
    }
}

} // namespace

BiSeries::BiSeries(int cap) : cap_(cap) {
    if (cap < 0)
        throw std::invalid_argument("series degree cap must be nonnegative");
    c_.resize(table_size(cap));
}

BiSeries BiSeries::one(int cap) {
    BiSeries s(cap);
    s.raw(0, 0) = 1;
    return s;
}

std::ostream& operator<<(std::ostream& os, const BiSeries& s) {
    os << "BiSeries(cap=" << s.cap();
    int shown = 0;
    for (int d = 0; d <= s.cap() && shown < 12; ++d) {
        for (int j = 0; j <= d && shown < 12; ++j) {
            const int i = d - j;
            if (sgn(s.raw(i, j)) != 0) {
                os << ", [" << i << "," << j << "]=" << s.raw(i, j);
                ++shown;
            }
        }
    }
    return os << ")";
}

void mul_factor(BiSeries& s, const Factor& f) {
    check_factor(f);
    if (f.monomial.degree() > s.cap())
        return; // cannot touch any coefficient within the cap
    const int reps = std::abs(f.exponent);
    for (int r = 0; r < reps; ++r) {
        if (f.exponent > 0)
            mul_binomial(s, f.monomial.a, f.monomial.b);
        else
            div_binomial(s, f.monomial.a, f.monomial.b);
    }
}

BiSeries expand(const ProductForm& form, int d_max) {
    if (d_max < 0)
        throw std::invalid_argument("expansion cap must be nonnegative");
    if (d_max > form.degree_cap)
        throw std::invalid_argument(
            "expansion cap exceeds the form's materialization horizon");
    for (const Factor& f : form.factors)
        check_factor(f);

    BiSeries s = BiSeries::one(d_max);
    for (const Factor& f : form.factors)
        mul_factor(s, f);
    return s;
}

BiSeries mul(const BiSeries& s1, const BiSeries& s2) {
    const int cap = std::min(s1.cap(), s2.cap());
    BiSeries out(cap);
    for (int d1 = 0; d1 <= cap; ++d1) {
        for (int j1 = 0; j1 <= d1; ++j1) {
            const int i1 = d1 - j1;
            const Int& c1 = s1.raw(i1, j1);
            if (sgn(c1) == 0)
                continue;
            for (int d2 = 0; d2 + d1 <= cap; ++d2) {
                for (int j2 = 0; j2 <= d2; ++j2) {
                    const int i2 = d2 - j2;
                    const Int& c2 = s2.raw(i2, j2);
                    if (sgn(c2) == 0)
                        continue;
                    out.raw(i1 + i2, j1 + j2) += c1 * c2;
                }
            }
        }
    }
    return out;
}

const Int& coeff(const BiSeries& s, int i, int j) {
    if (i < 0 || j < 0)
        throw std::invalid_argument("coefficient indices must be nonnegative");
    if (i + j > s.cap())
        throw OutOfTruncation("coefficient (" + std::to_string(i) + "," +
                              std::to_string(j) + ") lies beyond cap " +
                              std::to_string(s.cap()));
    return s.raw(i, j);
}

std::vector<Int> specialize_diagonal(const BiSeries& s) {
    std::vector<Int> out(static_cast<std::size_t>(s.cap()) + 1);
    for (int d = 0; d <= s.cap(); ++d)
        for (int j = 0; j <= d; ++j)
            out[d] += s.raw(d - j, j);
    return out;
}

ProductForm substitute_factorwise(const ProductForm& form) {
    ProductForm out;
    out.degree_cap = form.degree_cap;
    out.factors.reserve(form.factors.size());
    for (const Factor& f : form.factors) {
        check_factor(f);
        const int s = f.monomial.a;
        const int m = f.monomial.b;
        if (s < m)
            throw NegativeExponentAfterSubstitution(
                "factor with exponents (" + std::to_string(s) + "," +
                std::to_string(m) +
                ") maps to a negative t-exponent; cancel it first");
        out.factors.push_back(Factor{Monomial{m, s - m}, f.exponent});
    }
    return out;
}

ProductForm normalized(const ProductForm& form) {
    std::map<Monomial, long long> merged;
    for (const Factor& f : form.factors)
        merged[f.monomial] += f.exponent;

    ProductForm out;
    out.degree_cap = form.degree_cap;
    for (const auto& [m, e] : merged) {
        if (e == 0)
            continue;
        out.factors.push_back(Factor{m, static_cast<int>(e)});
    }
    return out;
}

ProductForm trimmed(const ProductForm& form, int d_max) {
    if (d_max > form.degree_cap)
        throw std::invalid_argument(
            "trim cap exceeds the form's materialization horizon");
    ProductForm out;
    out.degree_cap = d_max;
    for (const Factor& f : form.factors)
        if (f.monomial.degree() <= d_max)
            out.factors.push_back(f);
    return out;
}

BiSeries truncated(const BiSeries& s, int d_max) {
    if (d_max > s.cap())
        throw std::invalid_argument("cannot truncate to a larger cap");
    BiSeries out(d_max);
    for (int d = 0; d <= d_max; ++d)
        for (int j = 0; j <= d; ++j)
            out.raw(d - j, j) = s.raw(d - j, j);
    return out;
}

} // namespace delpezzo
