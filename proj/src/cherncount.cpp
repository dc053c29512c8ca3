#include "delpezzo/cherncount.hpp"

#include <string>

#include "delpezzo/genfun.hpp"

namespace delpezzo {

namespace {

// Monomials of exponent e in `mult` distinguishable commuting variables:
// stars and bars, C(e + mult - 1, mult - 1).
mpz_class multiset_count(int mult, int e) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(e + mult - 1),
                 static_cast<unsigned long>(mult - 1));
    return out;
}

// Depth-first over exponent choices per generator batch, pruned by the
// remaining (weight, degree) budget. Batches are in nondecreasing degree.
mpz_class count_rec(const std::vector<Generator>& gens, std::size_t idx,
                    int weight_left, int degree_left) {
    if (weight_left == 0 && degree_left == 0)
        return 1;
    if (idx == gens.size())
        return 0;
    const Generator& g = gens[idx];
    if (g.coh_degree > degree_left)
        return 0; // later batches are at least as large
    mpz_class acc = 0;
    for (int e = 0;; ++e) {
        const int dw = e * g.chern_weight;
        const int dd = e * g.coh_degree;
        if (dd > degree_left || dw > weight_left)
            break;
        acc += multiset_count(g.multiplicity, e) *
               count_rec(gens, idx + 1, weight_left - dw, degree_left - dd);
    }
    return acc;
}

} // namespace

std::vector<Generator> generator_set(int rho, int m) {
    if (rho < 1 || rho > 9)
        throw InvalidRho("rho must lie in 1..9, got " + std::to_string(rho));
    if (m < 1)
        throw std::invalid_argument("m must be positive");

    std::vector<Generator> gens;
    gens.push_back({2, 0, 1});
    if (rho >= 2)
        gens.push_back({2, 1, rho - 1});
    gens.push_back({2, 2, 1});
    for (int a = 2; a <= m; ++a) {
        gens.push_back({2 * a, a - 1, 1});
        gens.push_back({2 * a, a, rho});
        gens.push_back({2 * a, a + 1, 1});
    }
    return gens;
}

mpz_class count_monomials(const std::vector<Generator>& gens, int weight,
                          int complement) {
    if (weight < 0 || complement < 0)
        throw std::invalid_argument("bidegree must be nonnegative");
    int max_degree = 0;
    for (const Generator& g : gens)
        max_degree = std::max(max_degree, g.coh_degree);
    if (weight + complement > max_degree)
        throw OutOfRange("bidegree (" + std::to_string(weight) + "," +
                         std::to_string(complement) +
                         ") exceeds the generator-set horizon " +
                         std::to_string(max_degree));
    return count_rec(gens, 0, weight, weight + complement);
}

ChernReport verify_chern_vs_h(int rho, int m) {
    ChernReport report;
    report.rho = rho;
    report.m = m;
    const std::vector<Generator> gens = generator_set(rho, m);
    const BiSeries h = h_series(rho, 2 * m);
    for (int d = 0; d <= 2 * m; ++d) {
        for (int i = 0; i <= d; ++i) {
            ChernCell cell;
            cell.i = i;
            cell.j = d - i;
            cell.count = count_monomials(gens, i, d - i);
            cell.coefficient = coeff(h, i, d - i);
            cell.ok = (cell.count == cell.coefficient);
            if (!cell.ok)
                report.all_ok = false;
            report.cells.push_back(cell);
        }
    }
    return report;
}

} // namespace delpezzo
